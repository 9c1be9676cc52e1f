#include "stpade/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace stpade {

namespace {

constexpr double kImagRatioTol = 1e-8;   // |Im| > tol*|Re| marks a truly complex root
constexpr double kPoleGapTol = 1e-10;    // relative separation below which poles coincide
constexpr double kBoundaryBand = 1e-10;  // width of the suspicious band left of -1

std::complex<double> eval_poly(const std::vector<double>& c, std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> eval_poly_derivative(const std::vector<double>& c, std::complex<double> x) {
    std::complex<double> acc = 0.0;
    for (std::size_t k = c.size(); k-- > 1;)
        acc = acc * x + static_cast<double>(k) * c[k];
    return acc;
}

std::vector<double> trim_trailing_zeros(std::vector<double> c) {
    while (c.size() > 1 && c.back() == 0.0) c.pop_back();
    return c;
}

// Roots of a real polynomial c_0 + c_1 x + ... + c_d x^d (c_d != 0) via the
// companion matrix, each refined by one Newton step.
std::vector<std::complex<double>> polynomial_roots(const std::vector<double>& c) {
    const int d = static_cast<int>(c.size()) - 1;
    std::vector<std::complex<double>> roots;
    if (d < 1) return roots;
    if (d == 1) {
        roots.push_back(-c[0] / c[1]);
        return roots;
    }
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) companion(i, d - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion);
    if (es.info() != Eigen::Success)
        throw StructureViolationError("root finding failed to converge");
    roots.reserve(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        std::complex<double> r = es.eigenvalues()(i);
        const std::complex<double> p = eval_poly(c, r);
        const std::complex<double> dp = eval_poly_derivative(c, r);
        if (std::abs(dp) > 0.0) {
            const std::complex<double> polished = r - p / dp;
            if (std::abs(eval_poly(c, polished)) <= std::abs(p)) r = polished;
        }
        roots.push_back(r);
    }
    return roots;
}

// Real roots, sorted ascending; throws when any root carries a genuine
// imaginary part or two roots coincide.
std::vector<double> real_simple_roots(const std::vector<double>& c) {
    std::vector<double> out;
    for (const auto& r : polynomial_roots(c)) {
        if (std::abs(r.imag()) > kImagRatioTol * std::abs(r.real())) {
            std::ostringstream os;
            os << "complex denominator root " << r.real() << " + " << r.imag()
               << "i breaks the real simple-pole structure";
            throw StructureViolationError(os.str());
        }
        out.push_back(r.real());
    }
    std::sort(out.begin(), out.end());
    for (std::size_t i = 1; i < out.size(); ++i) {
        const double gap = out[i] - out[i - 1];
        const double scale = std::max(std::abs(out[i]), std::abs(out[i - 1]));
        if (gap <= kPoleGapTol * scale) {
            std::ostringstream os;
            os << "denominator roots " << out[i - 1] << " and " << out[i]
               << " coincide within relative gap " << kPoleGapTol;
            throw MultiplePoleError(os.str());
        }
    }
    return out;
}

std::vector<double> convolve(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

} // namespace

StructureCertificate validate_pole_residue(const std::vector<PoleResiduePair>& pairs,
                                           PoleVariable variable) {
    StructureCertificate cert;
    auto flag = [&cert](const std::string& text) {
        cert.passed = false;
        cert.violations.push_back(text);
    };
    if (variable == PoleVariable::xi) {
        for (const auto& pr : pairs) {
            std::ostringstream os;
            if (pr.pole >= -1.0) {
                os << "pole " << pr.pole << " is not below -1";
                flag(os.str());
            } else if (pr.pole >= -1.0 - kBoundaryBand) {
                os << "pole " << pr.pole << " sits within " << kBoundaryBand
                   << " of the branch point -1";
                flag(os.str());
            }
            if (!(pr.residue > 0.0)) {
                std::ostringstream rs;
                rs << "residue " << pr.residue << " at pole " << pr.pole
                   << " is not positive";
                flag(rs.str());
            }
        }
    } else {
        double total = 0.0;
        for (const auto& pr : pairs) {
            if (!(pr.pole >= 0.0 && pr.pole < 1.0)) {
                std::ostringstream os;
                os << "pole " << pr.pole << " lies outside [0,1)";
                flag(os.str());
            }
            if (!(pr.residue >= 0.0 && pr.residue < 1.0)) {
                std::ostringstream os;
                os << "residue " << pr.residue << " lies outside [0,1)";
                flag(os.str());
            }
            total += pr.residue;
        }
        if (!pairs.empty() && !(total > 0.0 && total < 1.0)) {
            std::ostringstream os;
            os << "residue sum " << total << " lies outside (0,1)";
            flag(os.str());
        }
    }
    return cert;
}

std::complex<double> PoleResidueForm::eval(std::complex<double> arg) const {
    std::complex<double> acc = 0.0;
    for (const auto& pr : pairs) acc += pr.residue / (arg - pr.pole);
    return acc;
}

double PoleResidueForm::residue_sum() const {
    double total = 0.0;
    for (const auto& pr : pairs) total += pr.residue;
    return total;
}

PoleResidueForm to_pole_residue(const PadeApproximant& approx) {
    if (approx.M < 1)
        throw ConfigError("partial fractions require at least one pole (M >= 1)");
    if (approx.L != approx.M - 1)
        throw ConfigError("partial fractions require numerator degree M-1");
    const bool xi_input = approx.variable == PadeVariable::xi_standard;

    PoleResidueForm out;
    out.variable = xi_input ? PoleVariable::xi : PoleVariable::s;

    const bool zero_numerator =
        std::all_of(approx.numerator.begin(), approx.numerator.end(),
                    [](double v) { return v == 0.0; });
    if (zero_numerator) return out;  // identically zero: no poles carry mass

    const std::vector<double> den = trim_trailing_zeros(approx.denominator);
    if (static_cast<int>(den.size()) - 1 < approx.M) {
        std::ostringstream os;
        os << "denominator degree collapsed to " << den.size() - 1 << " below M = "
           << approx.M << "; order exceeds the resolvable rank";
        throw StructureViolationError(os.str());
    }

    const std::vector<double> roots = real_simple_roots(den);
    for (double r : roots) {
        const std::complex<double> numerator_value = eval_poly(approx.numerator, r);
        const std::complex<double> derivative_value = eval_poly_derivative(den, r);
        const double res = numerator_value.real() / derivative_value.real();
        PoleResiduePair pr;
        if (xi_input) {
            // Polynomials are in t = -xi; the xi-residue picks up the sign
            // of d t / d xi = -1.
            pr.pole = -r;
            pr.residue = -res;
        } else {
            pr.pole = r;
            pr.residue = res;
        }
        out.pairs.push_back(pr);
    }
    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const PoleResiduePair& a, const PoleResiduePair& b) { return a.pole < b.pole; });
    out.certificate = validate_pole_residue(out.pairs, out.variable);
    return out;
}

NonstandardForm to_nonstandard(const PoleResidueForm& xi_form) {
    if (xi_form.variable != PoleVariable::xi)
        throw ConfigError("nonstandard transformation starts from a xi-variable form");
    if (xi_form.pairs.empty())
        throw ConfigError("nonstandard transformation requires at least one pole");
    for (const auto& pr : xi_form.pairs) {
        if (pr.pole >= -1.0) {
            std::ostringstream os;
            os << "pole " << pr.pole << " is not below -1 and cannot map into [0,1)";
            throw StructureViolationError(os.str());
        }
    }

    NonstandardForm out;
    out.form_s.variable = PoleVariable::s;
    for (const auto& pr : xi_form.pairs)
        out.form_s.pairs.push_back({-1.0 / pr.pole, -pr.residue / pr.pole});
    std::sort(out.form_s.pairs.begin(), out.form_s.pairs.end(),
              [](const PoleResiduePair& a, const PoleResiduePair& b) { return a.pole < b.pole; });
    out.form_s.certificate = validate_pole_residue(out.form_s.pairs, PoleVariable::s);

    const int M = static_cast<int>(out.form_s.pairs.size());
    std::vector<double> den = {1.0};
    for (const auto& pr : out.form_s.pairs) den = convolve(den, {-pr.pole, 1.0});
    std::vector<double> num(static_cast<std::size_t>(M), 0.0);
    for (int n = 0; n < M; ++n) {
        std::vector<double> partial = {1.0};
        for (int j = 0; j < M; ++j) {
            if (j == n) continue;
            partial = convolve(partial, {-out.form_s.pairs[static_cast<std::size_t>(j)].pole, 1.0});
        }
        for (std::size_t k = 0; k < partial.size(); ++k)
            num[k] += out.form_s.pairs[static_cast<std::size_t>(n)].residue * partial[k];
    }

    const double linear = den[1];
    out.prenormalization_linear_coefficient = linear;
    if (linear == 0.0)
        throw StructureViolationError(
            "denominator linear coefficient vanishes; no normalized form exists");
    for (double& v : num) v /= linear;
    for (double& v : den) v /= linear;
    den[1] = 1.0;

    out.approximant.numerator = std::move(num);
    out.approximant.denominator = std::move(den);
    out.approximant.L = M - 1;
    out.approximant.M = M;
    out.approximant.variable = PadeVariable::s_nonstandard;
    out.approximant.series_offset = 1;
    return out;
}

MomentSequence moments_from_poles(const PoleResidueForm& s_form, int count) {
    if (s_form.variable != PoleVariable::s)
        throw ConfigError("moment expansion requires an s-variable form");
    if (count < 0) throw ConfigError("moment count must be nonnegative");
    std::vector<double> values(static_cast<std::size_t>(count), 0.0);
    for (const auto& pr : s_form.pairs) {
        double power = 1.0;
        for (int m = 0; m < count; ++m) {
            values[static_cast<std::size_t>(m)] += pr.residue * power;
            power *= pr.pole;
        }
    }
    return MomentSequence(std::move(values));
}

bool sn_equivalent(const MomentSequence& a, const MomentSequence& b, int N) {
    if (N < 1) throw ConfigError("equivalence order must satisfy N >= 1");
    if (a.size() < static_cast<std::size_t>(N) || b.size() < static_cast<std::size_t>(N))
        throw InsufficientDataError("both sequences must supply at least N moments");
    for (int m = 0; m < N; ++m) {
        const double x = a[static_cast<std::size_t>(m)];
        const double y = b[static_cast<std::size_t>(m)];
        if (std::abs(x - y) > 1e-12 * std::max({1.0, std::abs(x), std::abs(y)})) return false;
    }
    return true;
}

bool pade_table_equal(const MomentSequence& a, const MomentSequence& b, int N) {
    if (N < 1) throw ConfigError("equivalence order must satisfy N >= 1");
    if (a.size() < static_cast<std::size_t>(N) || b.size() < static_cast<std::size_t>(N))
        throw InsufficientDataError("both sequences must supply at least N moments");
    const auto close = [](double x, double y) {
        return std::abs(x - y) <= 1e-9 * std::max({1.0, std::abs(x), std::abs(y)});
    };
    for (int total = 0; total <= N; ++total) {
        for (int M = 0; 2 * M <= total; ++M) {
            const int L = total - M;
            PadeApproximant pa, pb;
            try {
                pa = pade_for_G(a, L, M);
                pb = pade_for_G(b, L, M);
            } catch (const NonExistenceError& e) {
                std::ostringstream os;
                os << "table comparison aborted at cell (" << L << "," << M
                   << "): " << e.what();
                throw NonExistenceError(os.str(), e.smallest_singular_value);
            }
            for (std::size_t k = 0; k < pa.numerator.size(); ++k)
                if (!close(pa.numerator[k], pb.numerator[k])) return false;
            for (std::size_t k = 0; k < pa.denominator.size(); ++k)
                if (!close(pa.denominator[k], pb.denominator[k])) return false;
        }
    }
    return true;
}

std::vector<double> denominator_poles_xi(const PadeApproximant& approx) {
    if (approx.variable != PadeVariable::xi_standard)
        throw ConfigError("xi poles are defined for standard-form approximants");
    const std::vector<double> den = trim_trailing_zeros(approx.denominator);
    std::vector<double> poles;
    for (double r : real_simple_roots(den)) poles.push_back(-r);
    std::sort(poles.begin(), poles.end());
    return poles;
}

InterlacingReport check_pole_interlacing(const MomentSequence& moments, int J, int M_max) {
    if (J < 0) throw ConfigError("interlacing family requires numerator offset J >= 0");
    InterlacingReport report;
    std::vector<double> prev;
    for (int M = 1; M <= M_max; ++M) {
        const std::vector<double> cur =
            denominator_poles_xi(solve_standard_pade(moments, M - 1 + J, M));
        if (!prev.empty() && cur.size() == prev.size() + 1) {
            for (std::size_t i = 0; i < prev.size(); ++i) {
                const double lo = cur[i];
                const double hi = cur[i + 1];
                const double tol = 1e-9 * std::max({1.0, std::abs(lo), std::abs(hi)});
                const double p = prev[i];
                const bool inside = p > lo && p < hi;
                const bool near = p > lo - tol && p < hi + tol;
                if (!inside) {
                    std::ostringstream os;
                    os << "order " << M - 1 << " pole " << p
                       << " does not lie strictly between order-" << M << " poles "
                       << lo << " and " << hi;
                    report.strict = false;
                    if (near)
                        report.warnings.push_back(os.str());
                    else
                        report.violations.push_back(os.str());
                }
            }
        }
        prev = cur;
    }
    return report;
}

} // namespace stpade
