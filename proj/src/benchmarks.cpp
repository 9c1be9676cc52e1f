#include "stpade/benchmarks.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <sstream>

#include "stpade/errors.hpp"
#include "stpade/inverse.hpp"
#include "stpade/materials.hpp"
#include "stpade/measure.hpp"
#include "stpade/pade.hpp"
#include "stpade/random.hpp"
#include "stpade/spectral.hpp"
#include "stpade/stieltjes.hpp"

namespace stpade {

namespace {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

struct SamplingBounds {
    double min_pos;
    double max_pos;
    double min_gap;
    double weight_floor;
    double max_mass;
};

SpectralMeasure random_atomic(Rng& rng, int n, bool zero_first, const SamplingBounds& bounds) {
    std::vector<double> z;
    for (int attempt = 0; attempt < 2000; ++attempt) {
        z.clear();
        if (zero_first) z.push_back(0.0);
        while (static_cast<int>(z.size()) < n)
            z.push_back(rng.uniform(bounds.min_pos, bounds.max_pos));
        std::sort(z.begin(), z.end());
        bool ok = true;
        for (std::size_t i = 1; i < z.size(); ++i)
            if (z[i] - z[i - 1] < bounds.min_gap) ok = false;
        if (ok) break;
        z.clear();
    }
    if (z.empty()) throw ConfigError("random measure generation failed to place atoms");
    std::vector<double> w(static_cast<std::size_t>(n));
    double total = 0.0;
    for (double& wi : w) {
        wi = rng.uniform(bounds.weight_floor, bounds.weight_floor + 0.8 / n);
        total += wi;
    }
    if (total > bounds.max_mass) {
        const double scale = bounds.max_mass * 0.98 / total;
        for (double& wi : w) wi *= scale;
    }
    std::vector<Atom> atoms;
    for (int i = 0; i < n; ++i) atoms.push_back({z[static_cast<std::size_t>(i)],
                                                 w[static_cast<std::size_t>(i)]});
    return SpectralMeasure(std::move(atoms));
}

// Complex point away from the ray (-inf,-1] where f lives, and away from the
// real axis unless safely right of -1 (where f has no zeros or poles).
std::complex<double> random_offcut_xi(Rng& rng) {
    double x = rng.uniform(-0.95, 2.5);
    double y = rng.uniform(-1.5, 1.5);
    if (std::abs(y) < 0.02) x = rng.uniform(-0.9, 2.0);
    return {x, y};
}

bool starts_at_zero(const SpectralMeasure& measure) {
    return !measure.atoms().empty() && measure.atoms().front().position == 0.0;
}

// Largest denominator order with a provably nonsingular linear system for an
// n-atom measure: n in general, one less when an atom sits at position 0 and
// the system indices skip the zeroth moment (J >= 0).
int existence_cap(int n, bool zero_first, int J) {
    if (!zero_first) return std::min(n, 8);
    return J == -1 ? std::min(n, 8) : std::min(n - 1, 8);
}

std::string describe(const SpectralMeasure& measure) {
    std::ostringstream os;
    os << measure.atoms().size() << " atoms";
    if (starts_at_zero(measure)) os << " (first at 0)";
    return os.str();
}

double rel_error(double got, double truth) {
    return std::abs(got - truth) / std::max(std::abs(truth), 1e-300);
}

} // namespace

BenchmarkCase run_exact_recovery(std::uint64_t seed) {
    Stopwatch timer;
    BenchmarkCase out;
    out.name = "exact-recovery";
    Rng rng(seed);
    double worst = 0.0;
    std::string failure;
    for (int i = 0; i < 50 && failure.empty(); ++i) {
        const int n = 1 + static_cast<int>(rng.integer(4));
        const SpectralMeasure measure =
            random_atomic(rng, n, false, {0.08, 0.95, 0.08, 0.05, 0.85});
        const MomentSequence mu = moments(measure, 2 * n);
        PadeApproximant approx;
        try {
            approx = solve_standard_pade(mu, n - 1, n);
        } catch (const Error& e) {
            failure = "construction failed for " + describe(measure) + ": " + e.what();
            break;
        }
        for (int k = 0; k < 20; ++k) {
            const std::complex<double> xi = random_offcut_xi(rng);
            const double rel =
                std::abs(approx.eval_xi(xi) - eval_f(measure, xi)) /
                std::max(std::abs(eval_f(measure, xi)), 1e-300);
            worst = std::max(worst, rel);
        }
    }
    out.seconds = timer.seconds();
    const bool accurate = failure.empty() && worst <= 1e-9;
    out.passed = accurate && out.seconds < 5.0;
    std::ostringstream os;
    if (!failure.empty())
        os << failure;
    else
        os << "50 random measures (n <= 4), worst relative error " << worst
           << " over 20 points each";
    if (accurate && out.seconds >= 5.0) os << "; time budget of 5 s exceeded";
    out.detail = os.str();
    return out;
}

BenchmarkCase run_existence_grid(std::uint64_t seed) {
    Stopwatch timer;
    BenchmarkCase out;
    out.name = "existence-grid";
    Rng rng(seed);
    int solved = 0;
    std::string failure;
    for (int i = 0; i < 50 && failure.empty(); ++i) {
        const bool zero_first = i % 3 == 0;
        int n = 1 + static_cast<int>(rng.integer(6));
        if (zero_first && n < 2) n = 2;
        const SpectralMeasure measure =
            random_atomic(rng, n, zero_first, {0.2, 0.9, 0.07, 0.06, 0.85});
        const MomentSequence mu = moments(measure, 18);
        for (int L = 0; L <= 8 && failure.empty(); ++L) {
            for (int M = 1; M <= L + 1 && M <= 8; ++M) {
                if (M > existence_cap(n, zero_first, L - M)) continue;
                try {
                    solve_standard_pade(mu, L, M);
                    ++solved;
                } catch (const NonExistenceError& e) {
                    std::ostringstream os;
                    os << "unexpected singularity at (" << L << "," << M << ") for "
                       << describe(measure) << ": " << e.what();
                    failure = os.str();
                    break;
                }
            }
        }
    }
    out.seconds = timer.seconds();
    out.passed = failure.empty() && out.seconds < 10.0;
    std::ostringstream os;
    if (!failure.empty())
        os << failure;
    else
        os << "50 random measures, " << solved << " grid cells solved without a singularity flag";
    if (failure.empty() && out.seconds >= 10.0) os << "; time budget of 10 s exceeded";
    out.detail = os.str();
    return out;
}

BenchmarkCase run_pole_structure(std::uint64_t seed) {
    Stopwatch timer;
    BenchmarkCase out;
    out.name = "pole-structure";
    Rng rng(seed);
    int checked = 0;
    double min_margin = 1e300;
    double min_residue = 1e300;
    std::string failure;

    struct Case {
        MomentSequence mu;
        int cap;
        std::string label;
    };
    std::vector<Case> cases;
    for (int i = 0; i < 30; ++i) {
        const bool zero_first = i % 4 == 0;
        int n = 1 + static_cast<int>(rng.integer(6));
        if (zero_first && n < 2) n = 2;
        const SpectralMeasure measure =
            random_atomic(rng, n, zero_first, {0.1, 0.9, 0.07, 0.05, 0.85});
        const int cap = zero_first ? n - 1 : n;
        cases.push_back({moments(measure, 2 * cap), cap, describe(measure)});
    }
    cases.push_back({moments(SpectralMeasure(ContinuousDensity::checkerboard()), 12), 6,
                     "checkerboard density"});

    for (const Case& c : cases) {
        if (!failure.empty()) break;
        for (int M = 1; M <= c.cap && failure.empty(); ++M) {
            try {
                const PoleResidueForm prf =
                    to_pole_residue(solve_standard_pade(c.mu, M - 1, M));
                ++checked;
                if (!prf.certificate.passed) {
                    failure = c.label + ", M = " + std::to_string(M) + ": " +
                              prf.certificate.violations.front();
                    break;
                }
                for (const auto& pr : prf.pairs) {
                    const double margin = -1.0 - pr.pole;
                    min_margin = std::min(min_margin, margin);
                    min_residue = std::min(min_residue, pr.residue);
                    if (margin <= 1e-8 || pr.residue <= 0.0) {
                        std::ostringstream os;
                        os << c.label << ", M = " << M << ": pole " << pr.pole
                           << " (margin " << margin << "), residue " << pr.residue;
                        failure = os.str();
                        break;
                    }
                }
            } catch (const Error& e) {
                failure = c.label + ", M = " + std::to_string(M) + ": " + e.what();
            }
        }
    }
    out.seconds = timer.seconds();
    out.passed = failure.empty();
    std::ostringstream os;
    if (!failure.empty())
        os << failure;
    else
        os << checked << " decompositions; smallest margin below -1 is " << min_margin
           << ", smallest residue " << min_residue;
    out.detail = os.str();
    return out;
}

BenchmarkCase run_nonstandard_form(std::uint64_t seed) {
    Stopwatch timer;
    BenchmarkCase out;
    out.name = "nonstandard-form";
    Rng rng(seed);
    int checked = 0;
    double min_prenorm = 1e300;
    double worst_sum_gap = 0.0;
    std::string failure;
    for (int i = 0; i < 30 && failure.empty(); ++i) {
        const bool zero_first = i % 4 == 0;
        int n = 1 + static_cast<int>(rng.integer(6));
        if (zero_first && n < 2) n = 2;
        const SpectralMeasure measure =
            random_atomic(rng, n, zero_first, {0.1, 0.9, 0.07, 0.05, 0.85});
        const int cap = zero_first ? n - 1 : n;
        const MomentSequence mu = moments(measure, 2 * cap);
        for (int M = 1; M <= cap && failure.empty(); ++M) {
            try {
                const NonstandardForm ns =
                    to_nonstandard(to_pole_residue(solve_standard_pade(mu, M - 1, M)));
                ++checked;
                min_prenorm =
                    std::min(min_prenorm, std::abs(ns.prenormalization_linear_coefficient));
                if (ns.prenormalization_linear_coefficient == 0.0) {
                    failure = describe(measure) + ": vanished linear coefficient";
                    break;
                }
                if (ns.approximant.denominator[1] != 1.0) {
                    failure = describe(measure) + ": denominator not normalized to b1 = 1";
                    break;
                }
                for (const auto& pr : ns.form_s.pairs) {
                    if (!(pr.pole >= 0.0 && pr.pole < 1.0)) {
                        std::ostringstream os;
                        os << describe(measure) << ", M = " << M << ": s-pole " << pr.pole
                           << " outside [0,1)";
                        failure = os.str();
                        break;
                    }
                }
                if (!failure.empty()) break;
                const AccuracyReport report =
                    verify_accuracy_through_order(
                        solve_standard_pade(mu, M - 1, M), mu);
                if (report.passed) {
                    const double gap = std::abs(ns.form_s.residue_sum() - mu[0]);
                    worst_sum_gap = std::max(worst_sum_gap, gap);
                    if (gap > 1e-9) {
                        std::ostringstream os;
                        os << describe(measure) << ", M = " << M
                           << ": residue sum deviates from the leading moment by " << gap;
                        failure = os.str();
                        break;
                    }
                }
            } catch (const Error& e) {
                failure = describe(measure) + ", M = " + std::to_string(M) + ": " + e.what();
            }
        }
    }
    out.seconds = timer.seconds();
    out.passed = failure.empty();
    std::ostringstream os;
    if (!failure.empty())
        os << failure;
    else
        os << checked << " transforms; smallest pre-normalization linear coefficient "
           << min_prenorm << ", worst residue-sum gap " << worst_sum_gap;
    out.detail = os.str();
    return out;
}

BenchmarkCase run_series_match(std::uint64_t seed) {
    Stopwatch timer;
    BenchmarkCase out;
    out.name = "series-match";
    Rng rng(seed);
    int checked = 0;
    double worst_ratio = 0.0;  // deviation / tolerance
    std::string failure;

    struct Case {
        MomentSequence mu;
        int n;
        bool zero_first;
        std::string label;
    };
    std::vector<Case> cases;
    for (int i = 0; i < 30; ++i) {
        const bool zero_first = i % 4 == 0;
        int n = 1 + static_cast<int>(rng.integer(6));
        if (zero_first && n < 2) n = 2;
        const SpectralMeasure measure =
            random_atomic(rng, n, zero_first, {0.15, 0.9, 0.07, 0.05, 0.85});
        cases.push_back({moments(measure, 14), n, zero_first, describe(measure)});
    }
    cases.push_back({moments(SpectralMeasure(ContinuousDensity::checkerboard()), 14), 99,
                     false, "checkerboard density"});

    for (const Case& c : cases) {
        if (!failure.empty()) break;
        for (int L = 0; L <= 6 && failure.empty(); ++L) {
            for (int M = 0; M <= L + 1 && M <= 6; ++M) {
                if (M >= 1 && M > existence_cap(std::min(c.n, 8), c.zero_first, L - M))
                    continue;
                PadeApproximant approx;
                try {
                    approx = solve_standard_pade(c.mu, L, M);
                } catch (const NonExistenceError&) {
                    continue;  // not an accepted approximant
                }
                const AccuracyReport report = verify_accuracy_through_order(approx, c.mu);
                ++checked;
                worst_ratio = std::max(
                    worst_ratio, report.max_deviation / report.tolerance);
                if (!report.passed) {
                    std::ostringstream os;
                    os << c.label << ", (" << L << "," << M << "): deviation "
                       << report.max_deviation << " exceeds " << report.tolerance;
                    failure = os.str();
                    break;
                }
            }
        }
    }
    out.seconds = timer.seconds();
    out.passed = failure.empty();
    std::ostringstream os;
    if (!failure.empty())
        os << failure;
    else
        os << checked << " approximants re-expanded; worst deviation at " << worst_ratio
           << " of tolerance";
    out.detail = os.str();
    return out;
}

BenchmarkCase run_moment_reconstruction(std::uint64_t seed) {
    Stopwatch timer;
    BenchmarkCase out;
    out.name = "moment-reconstruction";
    const double pi = 3.14159265358979323846;

    const SpectralMeasure two_atom({{0.25, 0.3}, {0.75, 0.2}});
    std::vector<std::complex<double>> pts;
    for (int k = 0; k < 12; ++k) {
        const double theta = pi * (k + 0.5) / 12.0;
        pts.push_back(std::complex<double>(0.5, 0.0) +
                      0.9 * std::complex<double>(std::cos(theta), std::sin(theta)));
    }
    ReconstructionConfig cfg;
    cfg.M = 2;
    cfg.seed = seed;
    const ReconstructionResult res_two =
        reconstruct(dataset_from_measure(two_atom, pts, 0.0, seed), cfg);
    const MomentSequence truth_two = moments(two_atom, 5);
    double worst_two = 0.0;
    for (int m = 0; m < 5; ++m)
        worst_two = std::max(worst_two, rel_error(res_two.moments[static_cast<std::size_t>(m)],
                                                  truth_two[static_cast<std::size_t>(m)]));

    const CompositeModel board = CompositeModel::checkerboard();
    std::vector<DataRecord> records;
    for (int k = 0; k < 16; ++k) {
        const double theta = pi * (k + 0.5) / 16.0;
        DataRecord rec;
        rec.s = std::complex<double>(0.5, 0.0) +
                1.1 * std::complex<double>(std::cos(theta), std::sin(theta));
        rec.d = effective_F(board, SPoint{rec.s});
        records.push_back(rec);
    }
    ReconstructionConfig cfg_board;
    cfg_board.M = 4;
    cfg_board.seed = seed + 1;
    const ReconstructionResult res_board =
        reconstruct(FrequencyDataset(std::move(records), 0.0), cfg_board);
    const MomentSequence truth_board =
        moments(spectral_measure_of(board), 5);
    double worst_board = 0.0;
    for (int m = 0; m < 5; ++m)
        worst_board = std::max(worst_board,
                               rel_error(res_board.moments[static_cast<std::size_t>(m)],
                                         truth_board[static_cast<std::size_t>(m)]));

    out.seconds = timer.seconds();
    const bool accurate = worst_two <= 1e-5 && worst_board <= 1e-2;
    out.passed = accurate && out.seconds < 30.0;
    std::ostringstream os;
    os << "two-atom set (12 points, order 2): worst moment error " << worst_two
       << "; checkerboard (16 points, order 4): worst moment error " << worst_board;
    if (accurate && out.seconds >= 30.0) os << "; time budget of 30 s exceeded";
    out.detail = os.str();
    return out;
}

namespace {

// Three-atom measure whose first `match` moments equal the targets exactly
// (up to a small linear solve), with the next moment differing by >= 1e-4.
SpectralMeasure matched_measure(Rng& rng, const MomentSequence& target, int match,
                                std::string& failure) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        std::vector<double> z;
        while (z.size() < 3) {
            const double cand = rng.uniform(0.1, 0.9);
            bool ok = true;
            for (double existing : z)
                if (std::abs(existing - cand) < 0.1) ok = false;
            if (ok) z.push_back(cand);
        }
        std::sort(z.begin(), z.end());
        std::vector<double> w(3, 0.0);
        for (int i = match; i < 3; ++i) w[static_cast<std::size_t>(i)] = rng.uniform(0.05, 0.12);
        Eigen::MatrixXd V(match, match);
        Eigen::VectorXd rhs(match);
        for (int m = 0; m < match; ++m) {
            for (int i = 0; i < match; ++i)
                V(m, i) = std::pow(z[static_cast<std::size_t>(i)], m);
            double r = target[static_cast<std::size_t>(m)];
            for (int i = match; i < 3; ++i)
                r -= w[static_cast<std::size_t>(i)] *
                     std::pow(z[static_cast<std::size_t>(i)], m);
            rhs(m) = r;
        }
        const Eigen::VectorXd head = V.fullPivLu().solve(rhs);
        bool ok = true;
        double total = 0.0;
        for (int i = 0; i < match; ++i) {
            w[static_cast<std::size_t>(i)] = head(i);
            if (!(head(i) >= 0.02 && head(i) <= 0.9)) ok = false;
        }
        for (double wi : w) total += wi;
        if (!ok || total > 0.92) continue;
        std::vector<Atom> atoms;
        for (int i = 0; i < 3; ++i)
            atoms.push_back({z[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i)]});
        SpectralMeasure candidate(std::move(atoms));
        if (std::abs(moment(candidate, match) - target[static_cast<std::size_t>(match)]) < 1e-4)
            continue;  // next moment too close; the pair would not separate
        return candidate;
    }
    failure = "failed to construct a moment-matched companion measure";
    return SpectralMeasure();
}

} // namespace

BenchmarkCase run_equivalence_pairs(std::uint64_t seed) {
    Stopwatch timer;
    BenchmarkCase out;
    out.name = "equivalence-agreement";
    Rng rng(seed);
    int pairs_done = 0;
    std::string failure;
    for (int p = 0; p < 20 && failure.empty(); ++p) {
        const int type = p % 4;  // 0: identical; 1..3: matched through that many moments
        const SpectralMeasure a =
            random_atomic(rng, 4, false, {0.1, 0.9, 0.08, 0.06, 0.8});
        const MomentSequence mu_a = moments(a, 8);
        SpectralMeasure b;
        if (type == 0) {
            b = a;
        } else {
            b = matched_measure(rng, mu_a, type, failure);
            if (!failure.empty()) break;
        }
        const MomentSequence mu_b = moments(b, 8);
        for (int N = 1; N <= 6 && failure.empty(); ++N) {
            const bool moments_agree = sn_equivalent(mu_a, mu_b, N);
            bool tables_agree = false;
            try {
                tables_agree = pade_table_equal(mu_a, mu_b, N);
            } catch (const Error& e) {
                std::ostringstream os;
                os << "pair " << p << ", N = " << N << ": " << e.what();
                failure = os.str();
                break;
            }
            if (moments_agree != tables_agree) {
                std::ostringstream os;
                os << "pair " << p << " (matched through "
                   << (type == 0 ? 8 : type) << "), N = " << N
                   << ": moment predicate " << moments_agree
                   << " but table predicate " << tables_agree;
                failure = os.str();
                break;
            }
            const bool expected = type == 0 || N <= type;
            if (moments_agree != expected) {
                std::ostringstream os;
                os << "pair " << p << ", N = " << N << ": predicates both "
                   << moments_agree << " but construction promised " << expected;
                failure = os.str();
                break;
            }
        }
        ++pairs_done;
    }
    out.seconds = timer.seconds();
    out.passed = failure.empty();
    std::ostringstream os;
    if (!failure.empty())
        os << failure;
    else
        os << pairs_done << " measure pairs; moment and table predicates agree for all N <= 6";
    out.detail = os.str();
    return out;
}

BenchmarkCase run_oracle_agreement(std::uint64_t seed) {
    Stopwatch timer;
    BenchmarkCase out;
    out.name = "oracle-agreement";
    Rng rng(seed);
    int checked = 0;
    int skipped = 0;
    double worst = 0.0;
    std::string failure;

    struct Case {
        MomentSequence mu;
        int cap;
        std::string label;
    };
    std::vector<Case> cases;
    for (int i = 0; i < 20; ++i) {
        const int n = 1 + static_cast<int>(rng.integer(5));
        const SpectralMeasure measure =
            random_atomic(rng, n, false, {0.25, 0.9, 0.09, 0.07, 0.85});
        cases.push_back({moments(measure, 16), std::min(n, 6), describe(measure)});
    }
    {
        std::vector<Atom> atoms;
        for (int j = 0; j < 6; ++j) atoms.push_back({0.3 + 0.6 * j / 5.0, 0.12});
        cases.push_back({moments(SpectralMeasure(std::move(atoms)), 16), 6,
                         "6 equispaced atoms"});
    }
    cases.push_back({moments(SpectralMeasure(ContinuousDensity::checkerboard()), 16), 6,
                     "checkerboard density"});

    for (const Case& c : cases) {
        if (!failure.empty()) break;
        for (int J = -1; J <= 2 && failure.empty(); ++J) {
            for (int M = 1; M <= c.cap && failure.empty(); ++M) {
                const int L = M + J;
                if (L < 0) continue;
                const auto at_zero = pade_determinant_oracle(c.mu, L, M, 0.0);
                double norm = 0.0;
                for (int k = 0; k <= L + M; ++k)
                    norm += c.mu[static_cast<std::size_t>(k)] * c.mu[static_cast<std::size_t>(k)];
                norm = std::sqrt(norm);
                if (std::abs(at_zero.second) <= 1e-8 * norm) {
                    ++skipped;  // linear system too close to singular to compare against
                    continue;
                }
                PadeApproximant approx;
                try {
                    approx = solve_standard_pade(c.mu, L, M);
                } catch (const Error& e) {
                    failure = c.label + ": " + e.what();
                    break;
                }
                for (int pt = 0; pt < 10; ++pt) {
                    std::complex<double> xi;
                    std::complex<double> P, Q;
                    bool usable = false;
                    for (int tries = 0; tries < 50 && !usable; ++tries) {
                        xi = random_offcut_xi(rng);
                        const auto pq = pade_determinant_oracle(c.mu, L, M, xi);
                        P = pq.first;
                        Q = pq.second;
                        usable = std::abs(Q) > 1e-10 * std::max(1.0, std::abs(P));
                    }
                    if (!usable) continue;
                    const std::complex<double> oracle_value = P / Q;
                    const double rel = std::abs(approx.eval_xi(xi) - oracle_value) /
                                       std::max(std::abs(oracle_value), 1e-30);
                    worst = std::max(worst, rel);
                    ++checked;
                    if (rel > 1e-8) {
                        std::ostringstream os;
                        os << c.label << ", (" << L << "," << M << ") at xi = ("
                           << xi.real() << ", " << xi.imag()
                           << "): determinant and solve paths differ by " << rel;
                        failure = os.str();
                        break;
                    }
                }
            }
        }
    }
    out.seconds = timer.seconds();
    out.passed = failure.empty();
    std::ostringstream os;
    if (!failure.empty())
        os << failure;
    else
        os << checked << " point comparisons (" << skipped
           << " near-singular cells skipped); worst relative gap " << worst;
    out.detail = os.str();
    return out;
}

BenchmarkCase run_sign_law(std::uint64_t seed) {
    Stopwatch timer;
    BenchmarkCase out;
    out.name = "determinant-sign-law";
    Rng rng(seed);
    int checked = 0;
    double min_at_zero = 1e300;
    std::string failure;
    for (int i = 0; i < 30 && failure.empty(); ++i) {
        const bool zero_first = i % 3 == 0;
        int n = 1 + static_cast<int>(rng.integer(6));
        if (zero_first && n < 2) n = 2;
        const SpectralMeasure measure =
            random_atomic(rng, n, zero_first, {0.15, 0.9, 0.07, 0.05, 0.85});
        const int cap = zero_first ? n - 1 : n;
        const MomentSequence mu = moments(measure, 2 * cap + 3);
        for (int J = -1; J <= 2 && failure.empty(); ++J) {
            for (int M = 1; M <= cap; ++M) {
                const double at_zero = delta_MJ(mu, M, J, 0.0);
                const double at_minus = delta_MJ(mu, M, J, -1e6);
                const double expected = M % 2 == 0 ? 1.0 : -1.0;
                ++checked;
                min_at_zero = std::min(min_at_zero, at_zero);
                if (!(at_zero > 0.0) || !(at_minus * expected > 0.0)) {
                    std::ostringstream os;
                    os << describe(measure) << ", M = " << M << ", J = " << J
                       << ": value at 0 is " << at_zero << ", at -1e6 is " << at_minus;
                    failure = os.str();
                    break;
                }
            }
        }
    }
    out.seconds = timer.seconds();
    out.passed = failure.empty();
    std::ostringstream os;
    if (!failure.empty())
        os << failure;
    else
        os << checked << " determinants; positive at 0 (min " << min_at_zero
           << ") and alternating sign at -1e6";
    out.detail = os.str();
    return out;
}

BenchmarkCase run_noise_robustness(std::uint64_t seed) {
    Stopwatch timer;
    BenchmarkCase out;
    out.name = "noise-robustness";
    const double pi = 3.14159265358979323846;
    const SpectralMeasure two_atom({{0.25, 0.3}, {0.75, 0.2}});
    std::vector<std::complex<double>> pts;
    for (int k = 0; k < 12; ++k) {
        const double theta = pi * (k + 0.5) / 12.0;
        pts.push_back(std::complex<double>(0.5, 0.0) +
                      0.9 * std::complex<double>(std::cos(theta), std::sin(theta)));
    }
    const MomentSequence truth = moments(two_atom, 5);
    std::vector<std::vector<double>> errors(5);
    for (int rep = 0; rep < 20; ++rep) {
        const FrequencyDataset data =
            dataset_from_measure(two_atom, pts, 0.01, seed + 101 * rep + 1);
        ReconstructionConfig cfg;
        cfg.M = 2;
        cfg.seed = seed + 77 * rep;
        const ReconstructionResult res = reconstruct(data, cfg);
        for (int m = 0; m < 5; ++m)
            errors[static_cast<std::size_t>(m)].push_back(
                rel_error(res.moments[static_cast<std::size_t>(m)],
                          truth[static_cast<std::size_t>(m)]));
    }
    std::vector<double> medians;
    for (auto& column : errors) {
        std::sort(column.begin(), column.end());
        medians.push_back(0.5 * (column[9] + column[10]));
    }
    // A 20-repeat median carries sampling error of a few 1e-4 at this noise
    // level, so adjacent medians may cross by that much without breaking the
    // degradation trend (the head-to-tail growth is an order of magnitude).
    bool monotone = true;
    for (int m = 0; m + 1 < 5; ++m)
        if (medians[static_cast<std::size_t>(m)] >
            medians[static_cast<std::size_t>(m) + 1] + 1e-3)
            monotone = false;
    out.seconds = timer.seconds();
    out.passed = medians[0] <= 0.05 && medians[1] <= 0.05 && monotone;
    std::ostringstream os;
    os << "median relative moment errors over 20 noisy repeats (1% noise):";
    for (double med : medians) os << " " << med;
    if (!monotone) os << "; error growth not monotone in the moment index";
    out.detail = os.str();
    return out;
}

std::vector<BenchmarkCase> acceptance_suite(std::uint64_t seed) {
    return {
        run_exact_recovery(seed),     run_existence_grid(seed), run_pole_structure(seed),
        run_nonstandard_form(seed),   run_series_match(seed),   run_moment_reconstruction(seed),
        run_equivalence_pairs(seed),  run_oracle_agreement(seed), run_sign_law(seed),
    };
}

std::vector<BenchmarkCase> run_suite(std::string_view name, std::uint64_t seed) {
    if (name == "roundtrip") return {run_exact_recovery(seed)};
    if (name == "existence") return {run_existence_grid(seed)};
    if (name == "structure") return {run_pole_structure(seed), run_nonstandard_form(seed)};
    if (name == "series") return {run_series_match(seed)};
    if (name == "reconstruction") return {run_moment_reconstruction(seed)};
    if (name == "equivalence") return {run_equivalence_pairs(seed)};
    if (name == "oracle") return {run_oracle_agreement(seed)};
    if (name == "signlaw") return {run_sign_law(seed)};
    if (name == "noise") return {run_noise_robustness(seed)};
    if (name == "all") {
        std::vector<BenchmarkCase> cases = acceptance_suite(seed);
        cases.push_back(run_noise_robustness(seed));
        return cases;
    }
    throw ConfigError("unknown benchmark suite '" + std::string(name) + "'");
}

} // namespace stpade
