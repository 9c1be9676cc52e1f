#include "stpade/inverse.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

#include "stpade/random.hpp"

namespace stpade {

namespace {

constexpr double kEdge = 1e-9;     // box upper margin: parameters in [0, 1-kEdge]
constexpr double kPoleGap = 1e-6;  // soft minimum separation between poles
constexpr double kZeroData = 1e-14;

struct Workspace {
    std::vector<std::complex<double>> s;  // data points
    std::vector<std::complex<double>> d;  // data values
    double d_norm = 0.0;                  // sqrt(sum |d|^2)
    double penalty_weight = 0.0;
    int M = 0;

    int data_rows() const { return 2 * static_cast<int>(s.size()); }
    int penalty_rows() const { return M * (M - 1) / 2; }
    int rows() const { return data_rows() + penalty_rows(); }
};

// theta = (s_1..s_M, A_1..A_M)
void residuals(const Workspace& w, const Eigen::VectorXd& theta, Eigen::VectorXd& r) {
    const int N = static_cast<int>(w.s.size());
    r.resize(w.rows());
    for (int k = 0; k < N; ++k) {
        std::complex<double> model = 0.0;
        for (int n = 0; n < w.M; ++n)
            model += theta(w.M + n) / (w.s[static_cast<std::size_t>(k)] - theta(n));
        const std::complex<double> diff = model - w.d[static_cast<std::size_t>(k)];
        r(2 * k) = diff.real();
        r(2 * k + 1) = diff.imag();
    }
    int row = w.data_rows();
    for (int i = 0; i < w.M; ++i) {
        for (int j = i + 1; j < w.M; ++j) {
            const double gap = std::abs(theta(i) - theta(j));
            r(row++) = gap < kPoleGap
                           ? w.penalty_weight * (kPoleGap - gap) / kPoleGap
                           : 0.0;
        }
    }
}

void jacobian(const Workspace& w, const Eigen::VectorXd& theta, Eigen::MatrixXd& J) {
    const int N = static_cast<int>(w.s.size());
    J.setZero(w.rows(), 2 * w.M);
    for (int k = 0; k < N; ++k) {
        for (int n = 0; n < w.M; ++n) {
            const std::complex<double> inv = 1.0 / (w.s[static_cast<std::size_t>(k)] - theta(n));
            const std::complex<double> ds = theta(w.M + n) * inv * inv;
            J(2 * k, n) = ds.real();
            J(2 * k + 1, n) = ds.imag();
            J(2 * k, w.M + n) = inv.real();
            J(2 * k + 1, w.M + n) = inv.imag();
        }
    }
    int row = w.data_rows();
    for (int i = 0; i < w.M; ++i) {
        for (int j = i + 1; j < w.M; ++j) {
            const double gap = std::abs(theta(i) - theta(j));
            if (gap < kPoleGap) {
                const double sign = theta(i) >= theta(j) ? 1.0 : -1.0;
                J(row, i) = -w.penalty_weight * sign / kPoleGap;
                J(row, j) = w.penalty_weight * sign / kPoleGap;
            }
            ++row;
        }
    }
}

// Euclidean projection of v onto {x >= 0, sum x <= cap}.
void project_simplex(Eigen::VectorXd& v, int begin, int count, double cap) {
    double total = 0.0;
    for (int i = 0; i < count; ++i) {
        if (v(begin + i) < 0.0) v(begin + i) = 0.0;
        total += v(begin + i);
    }
    if (total <= cap) return;
    std::vector<double> sorted(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) sorted[static_cast<std::size_t>(i)] = v(begin + i);
    std::sort(sorted.begin(), sorted.end(), std::greater<double>());
    double cumulative = 0.0;
    double tau = 0.0;
    for (int i = 0; i < count; ++i) {
        cumulative += sorted[static_cast<std::size_t>(i)];
        const double candidate = (cumulative - cap) / (i + 1);
        if (i + 1 == count || sorted[static_cast<std::size_t>(i) + 1] <= candidate) {
            tau = candidate;
            break;
        }
    }
    for (int i = 0; i < count; ++i) v(begin + i) = std::max(v(begin + i) - tau, 0.0);
}

void project(const Workspace& w, Eigen::VectorXd& theta) {
    for (int n = 0; n < w.M; ++n)
        theta(n) = std::clamp(theta(n), 0.0, 1.0 - kEdge);
    for (int n = 0; n < w.M; ++n)
        theta(w.M + n) = std::clamp(theta(w.M + n), 0.0, 1.0 - kEdge);
    project_simplex(theta, w.M, w.M, 1.0 - kEdge);
}

double data_norm(const Workspace& w, const Eigen::VectorXd& r) {
    double acc = 0.0;
    for (int i = 0; i < w.data_rows(); ++i) acc += r(i) * r(i);
    return std::sqrt(acc);
}

struct RunOutcome {
    Eigen::VectorXd theta;
    double cost = 0.0;           // full objective, penalties included
    double relative_residual = 0.0;
    int iterations = 0;
    bool converged = false;
};

RunOutcome run_single(const Workspace& w, Eigen::VectorXd theta,
                      const ReconstructionConfig& config) {
    project(w, theta);
    Eigen::VectorXd r, r_trial, delta;
    Eigen::MatrixXd J;
    residuals(w, theta, r);
    double cost = r.squaredNorm();
    double lambda = 1e-3;

    RunOutcome out;
    out.relative_residual = w.d_norm > 0.0 ? data_norm(w, r) / w.d_norm : 0.0;
    for (int iter = 1; iter <= config.max_iterations; ++iter) {
        out.iterations = iter;
        jacobian(w, theta, J);
        const Eigen::MatrixXd H = J.transpose() * J;
        const Eigen::VectorXd g = J.transpose() * r;
        bool accepted = false;
        for (int attempt = 0; attempt < 12; ++attempt) {
            Eigen::MatrixXd damped = H;
            for (int i = 0; i < damped.rows(); ++i)
                damped(i, i) += lambda * std::max(H(i, i), 1e-12);
            delta = damped.ldlt().solve(-g);
            Eigen::VectorXd trial = theta + delta;
            project(w, trial);
            residuals(w, trial, r_trial);
            const double trial_cost = r_trial.squaredNorm();
            if (trial_cost < cost) {
                theta = std::move(trial);
                r = r_trial;
                cost = trial_cost;
                lambda = std::max(lambda / 3.0, 1e-12);
                accepted = true;
                break;
            }
            lambda *= 4.0;
            if (lambda > 1e14) break;
        }
        out.relative_residual = w.d_norm > 0.0 ? data_norm(w, r) / w.d_norm : 0.0;
        if (out.relative_residual <= config.tolerance) {
            out.converged = true;
            break;
        }
        if (!accepted) break;  // damping exhausted: local minimum reached
        if (delta.norm() <= 1e-15 * (1.0 + theta.norm())) break;
    }
    out.theta = std::move(theta);
    out.cost = cost;
    return out;
}

Eigen::VectorXd initial_guess(const Workspace& w, int start_index, double mu0_estimate,
                              Rng& rng) {
    Eigen::VectorXd theta(2 * w.M);
    const double pi = 3.14159265358979323846;
    for (int n = 0; n < w.M; ++n) {
        double s = 0.5 - 0.5 * std::cos(pi * (2.0 * n + 1.0) / (2.0 * w.M));
        if (start_index > 0) s += (rng.uniform() - 0.5) * (1.0 / (w.M + 1.0));
        theta(n) = std::clamp(s, 0.01, 0.98);
    }
    for (int n = 0; n < w.M; ++n) {
        double a = mu0_estimate / w.M;
        if (start_index > 0) a *= 0.5 + rng.uniform();
        theta(w.M + n) = std::clamp(a, 1e-4, 0.9 / w.M);
    }
    return theta;
}

ConstraintReport make_certificate(const PoleResidueForm& form) {
    ConstraintReport report;
    report.residue_sum = form.residue_sum();
    double min_gap = 0.0;
    for (std::size_t i = 1; i < form.pairs.size(); ++i) {
        const double gap = form.pairs[i].pole - form.pairs[i - 1].pole;
        min_gap = i == 1 ? gap : std::min(min_gap, gap);
    }
    report.min_pole_gap = min_gap;
    for (const auto& pr : form.pairs) {
        if (!(pr.pole >= 0.0 && pr.pole <= 1.0 - kEdge)) {
            report.feasible = false;
            report.notes.push_back("pole outside [0, 1-1e-9]");
        }
        if (!(pr.residue >= 0.0 && pr.residue <= 1.0 - kEdge)) {
            report.feasible = false;
            report.notes.push_back("residue outside [0, 1-1e-9]");
        }
    }
    if (!form.pairs.empty() && !(report.residue_sum > 0.0)) {
        report.feasible = false;
        report.notes.push_back("residue sum is not positive");
    }
    if (report.residue_sum > 1.0 - kEdge) {
        report.feasible = false;
        report.notes.push_back("residue sum exceeds 1-1e-9");
    }
    if (min_gap > 0.0 && min_gap < kPoleGap)
        report.notes.push_back("poles closer than the 1e-6 separation target; "
                               "order may exceed the identifiable rank");
    return report;
}

} // namespace

ReconstructionResult reconstruct(const FrequencyDataset& data,
                                 const ReconstructionConfig& config) {
    if (config.M < 1) throw ConfigError("pole count M must be at least 1");
    if (config.max_iterations < 1) throw ConfigError("max_iterations must be positive");
    if (!(config.tolerance > 0.0)) throw ConfigError("tolerance must be positive");
    if (config.multistart_count < 1) throw ConfigError("multistart_count must be positive");
    if (data.empty()) throw ConfigError("dataset is empty");
    const int N = static_cast<int>(data.size());
    if (2 * config.M > N) {
        std::ostringstream os;
        os << "coefficient count must satisfy p+q+1 <= N: order M = " << config.M
           << " needs " << 2 * config.M << " records, dataset has " << N;
        throw ConfigError(os.str());
    }

    Workspace w;
    w.M = config.M;
    w.s.reserve(data.size());
    w.d.reserve(data.size());
    double d_sq = 0.0;
    for (const auto& rec : data.records()) {
        w.s.push_back(rec.s);
        w.d.push_back(rec.d);
        d_sq += std::norm(rec.d);
    }
    w.d_norm = std::sqrt(d_sq);
    const double rms_d = w.d_norm / std::sqrt(static_cast<double>(N));
    w.penalty_weight = std::max(rms_d, 1e-12);

    ReconstructionResult result;
    result.form.variable = PoleVariable::s;

    if (rms_d < kZeroData) {
        result.status = ReconstructionStatus::no_contrast;
        result.residual = rms_d;
        result.relative_residual = 0.0;
        result.moments = moments_from_poles(result.form, 2 * config.M + 1);
        result.certificate = make_certificate(result.form);
        result.certificate.notes.push_back(
            "data indistinguishable from zero contrast; no poles fitted");
        result.form.certificate = validate_pole_residue(result.form.pairs, PoleVariable::s);
        result.per_point_residuals.assign(data.size(), 0.0);
        for (std::size_t k = 0; k < data.size(); ++k)
            result.per_point_residuals[k] = std::abs(data.records()[k].d);
        return result;
    }

    // mu_0 enters the model as the residue sum; estimate it from the datum
    // farthest from the segment, where d*s is closest to the leading moment.
    std::size_t far = 0;
    for (std::size_t k = 1; k < w.s.size(); ++k)
        if (std::abs(w.s[k]) > std::abs(w.s[far])) far = k;
    const double mu0_estimate =
        std::clamp((w.d[far] * w.s[far]).real(), 1e-3, 0.9);

    Rng rng(config.seed);
    RunOutcome best;
    bool have_best = false;
    for (int start = 0; start < config.multistart_count; ++start) {
        RunOutcome outcome =
            run_single(w, initial_guess(w, start, mu0_estimate, rng), config);
        if (!have_best || outcome.cost < best.cost) {
            best = std::move(outcome);
            have_best = true;
        }
    }

    for (int n = 0; n < config.M; ++n)
        result.form.pairs.push_back({best.theta(n), best.theta(config.M + n)});
    std::sort(result.form.pairs.begin(), result.form.pairs.end(),
              [](const PoleResiduePair& a, const PoleResiduePair& b) {
                  return a.pole < b.pole;
              });
    result.form.certificate = validate_pole_residue(result.form.pairs, PoleVariable::s);
    result.moments = moments_from_poles(result.form, 2 * config.M + 1);
    result.relative_residual = best.relative_residual;
    result.iterations = best.iterations;
    result.status = best.converged ? ReconstructionStatus::converged
                                   : ReconstructionStatus::best_effort;
    result.certificate = make_certificate(result.form);

    result.per_point_residuals.reserve(data.size());
    double misfit_sq = 0.0;
    for (std::size_t k = 0; k < w.s.size(); ++k) {
        const std::complex<double> diff =
            result.form.eval(w.s[k]) - w.d[k];
        result.per_point_residuals.push_back(std::abs(diff));
        misfit_sq += std::norm(diff);
    }
    result.residual = std::sqrt(misfit_sq / static_cast<double>(N));
    return result;
}

ModelSelection model_select(const FrequencyDataset& data, int M_max,
                            const ReconstructionConfig& base) {
    if (M_max < 1) throw ConfigError("M_max must be at least 1");
    if (data.empty()) throw ConfigError("dataset is empty");
    ModelSelection selection;
    const int supported = static_cast<int>(data.size()) / 2;
    int top = M_max;
    if (supported < M_max) {
        top = supported;
        std::ostringstream os;
        os << "dataset with " << data.size() << " records supports at most M = "
           << supported << "; table truncated";
        selection.warnings.push_back(os.str());
    }
    if (top < 1) throw ConfigError("dataset too small for any model order (needs >= 2 records)");

    for (int M = 1; M <= top; ++M) {
        ReconstructionConfig config = base;
        config.M = M;
        config.seed = base.seed + 1000003ULL * static_cast<std::uint64_t>(M);
        selection.results.push_back(reconstruct(data, config));
    }

    // Elbow: smallest order that no later order improves by more than the
    // noise-scaled threshold.
    const double threshold = 10.0 * data.noise_level() + 1e-8;
    selection.selected_M = top;
    for (int M = 1; M <= top; ++M) {
        bool flat = true;
        const double here = selection.results[static_cast<std::size_t>(M - 1)].relative_residual;
        for (int later = M + 1; later <= top; ++later) {
            const double there =
                selection.results[static_cast<std::size_t>(later - 1)].relative_residual;
            if (here - there > threshold) {
                flat = false;
                break;
            }
        }
        if (flat) {
            selection.selected_M = M;
            break;
        }
    }
    return selection;
}

} // namespace stpade
