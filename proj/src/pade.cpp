#include "stpade/pade.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace stpade {

namespace {

std::complex<double> horner(const std::vector<double>& coeffs, std::complex<double> t) {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
}

void check_degrees(const MomentSequence& moments, int L, int M) {
    if (M < 0 || L < 0) throw ConfigError("degree bounds must be nonnegative");
    if (L - M + 1 < 0) throw ConfigError("standard construction requires L - M + 1 >= 0");
    const std::size_t needed = static_cast<std::size_t>(L + M + 1);
    if (moments.size() < needed) {
        std::ostringstream os;
        os << "[" << L << "/" << M << "] needs " << needed << " moments, got "
           << moments.size();
        throw InsufficientDataError(os.str());
    }
}

bool all_zero(const MomentSequence& moments, int upto) {
    for (int j = 0; j <= upto; ++j)
        if (moments.at_or_zero(j) != 0.0) return false;
    return true;
}

} // namespace

std::complex<double> PadeApproximant::eval_xi(std::complex<double> xi) const {
    if (variable != PadeVariable::xi_standard)
        throw ConfigError("eval_xi requires a standard-form approximant");
    const std::complex<double> t = -xi;
    return horner(numerator, t) / horner(denominator, t);
}

std::complex<double> PadeApproximant::eval_s(std::complex<double> s) const {
    if (variable != PadeVariable::s_nonstandard)
        throw ConfigError("eval_s requires a nonstandard-form approximant");
    return horner(numerator, s) / horner(denominator, s);
}

HankelSystem build_hankel_system(const MomentSequence& moments, int L, int M) {
    if (M < 1) throw ConfigError("Hankel system requires M >= 1");
    check_degrees(moments, L, M);
    HankelSystem sys;
    sys.L = L;
    sys.M = M;
    sys.J = L - M;
    sys.matrix.resize(M, M);
    sys.rhs.resize(M);
    for (int i = 0; i < M; ++i) {
        for (int j = 0; j < M; ++j)
            sys.matrix(i, j) = moments.at_or_zero(L - M + 1 + i + j);
        sys.rhs(i) = -moments.at_or_zero(L + 1 + i);
    }
    return sys;
}

PadeApproximant solve_standard_pade(const MomentSequence& moments, int L, int M) {
    check_degrees(moments, L, M);

    PadeApproximant out;
    out.L = L;
    out.M = M;
    out.variable = PadeVariable::xi_standard;
    out.numerator.assign(static_cast<std::size_t>(L) + 1, 0.0);
    out.denominator.assign(static_cast<std::size_t>(M) + 1, 0.0);
    out.denominator[0] = 1.0;

    // Zero moments: the approximant of the zero function is 0 for every
    // admissible (L, M).
    if (all_zero(moments, L + M)) return out;

    if (M == 0) {
        for (int j = 0; j <= L; ++j)
            out.numerator[static_cast<std::size_t>(j)] = moments.at_or_zero(j);
        return out;
    }

    HankelSystem sys = build_hankel_system(moments, L, M);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sys.matrix,
                                          Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double sigma_max = svd.singularValues()(0);
    const double sigma_min = svd.singularValues()(M - 1);
    const double eps = std::numeric_limits<double>::epsilon();
    if (!(sigma_min >= eps * sigma_max * M) || sigma_max == 0.0) {
        std::ostringstream os;
        os << "Hankel system for [" << L << "/" << M
           << "] is numerically rank deficient (smallest singular value " << sigma_min
           << ", largest " << sigma_max << ")";
        throw NonExistenceError(os.str(), sigma_min);
    }
    const Eigen::VectorXd x = svd.solve(sys.rhs); // (b_M, ..., b_1)
    for (int k = 1; k <= M; ++k)
        out.denominator[static_cast<std::size_t>(k)] = x(M - k);
    for (int k = 0; k <= L; ++k) {
        double a = moments.at_or_zero(k);
        for (int j = 1; j <= std::min(k, M); ++j)
            a += out.denominator[static_cast<std::size_t>(j)] * moments.at_or_zero(k - j);
        out.numerator[static_cast<std::size_t>(k)] = a;
    }
    return out;
}

std::pair<std::complex<double>, std::complex<double>>
pade_determinant_oracle(const MomentSequence& moments, int L, int M, std::complex<double> xi) {
    check_degrees(moments, L, M);
    using CMat = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic>;
    const std::complex<double> t = -xi;
    const int n = M + 1;
    CMat P(n, n), Q(n, n);
    for (int r = 0; r < M; ++r) {
        for (int c = 0; c < n; ++c) {
            const std::complex<double> entry = moments.at_or_zero(L - M + 1 + r + c);
            P(r, c) = entry;
            Q(r, c) = entry;
        }
    }
    for (int c = 0; c < n; ++c) {
        // P bottom row: sum_{i=0}^{L-M+c} mu_i t^{M+i-c}, empty when the
        // upper limit is negative.
        std::complex<double> acc = 0.0;
        for (int i = 0; i <= L - M + c; ++i)
            acc += moments.at_or_zero(i) * std::pow(t, M + i - c);
        P(M, c) = acc;
        Q(M, c) = std::pow(t, M - c);
    }
    if (n == 1) return {P(0, 0), Q(0, 0)};
    return {P.partialPivLu().determinant(), Q.partialPivLu().determinant()};
}

AccuracyReport verify_accuracy_through_order(const PadeApproximant& approx,
                                             const MomentSequence& moments) {
    AccuracyReport report;
    const int L = approx.L;
    const int M = approx.M;
    const std::size_t orders = static_cast<std::size_t>(L + M + 1);

    std::vector<double> num = approx.numerator;
    std::vector<double> den = approx.denominator;
    if (approx.variable == PadeVariable::s_nonstandard) {
        // Rewrite N(s)/D(s) with s = 1/t as the [M/M] form
        // (sum_k a_k t^{M-k}) / (sum_k b_k t^{M-k}); the series in t then
        // targets the same shifted moment sequence as G.
        std::vector<double> rn(static_cast<std::size_t>(M) + 1, 0.0);
        std::vector<double> rd(static_cast<std::size_t>(M) + 1, 0.0);
        for (std::size_t k = 0; k < num.size(); ++k)
            rn[static_cast<std::size_t>(M) - k] = num[k];
        for (std::size_t k = 0; k < den.size(); ++k)
            rd[static_cast<std::size_t>(M) - k] = den[k];
        num = std::move(rn);
        den = std::move(rd);
    }

    if (den.empty() || den[0] == 0.0) {
        report.structural_failure = true;
        report.message = "denominator constant term is zero; series expansion undefined";
        return report;
    }

    const int offset = approx.series_offset;
    if (moments.size() + static_cast<std::size_t>(offset) < orders) {
        std::ostringstream os;
        os << "accuracy check through order " << L + M << " needs "
           << orders - static_cast<std::size_t>(offset) << " moments, got " << moments.size();
        throw InsufficientDataError(os.str());
    }

    // c_k = (a_k - sum_{j=1..min(k,Md)} b_j c_{k-j}) / b_0
    const int Md = static_cast<int>(den.size()) - 1;
    std::vector<double> series(orders, 0.0);
    for (std::size_t k = 0; k < orders; ++k) {
        double c = k < num.size() ? num[k] : 0.0;
        for (int j = 1; j <= std::min<int>(static_cast<int>(k), Md); ++j)
            c -= den[static_cast<std::size_t>(j)] * series[k - static_cast<std::size_t>(j)];
        series[k] = c / den[0];
    }

    const double mu0 = moments.empty() ? 0.0 : moments[0];
    report.tolerance = 1e-9 * std::max(1.0, mu0);
    for (std::size_t k = 0; k < orders; ++k) {
        const long target_index = static_cast<long>(k) - offset;
        const double target = target_index < 0 ? 0.0 : moments.at_or_zero(target_index);
        report.max_deviation = std::max(report.max_deviation, std::abs(series[k] - target));
    }
    report.orders_checked = L + M;
    report.passed = report.max_deviation <= report.tolerance;
    return report;
}

double delta_MJ(const MomentSequence& moments, int M, int J, double x) {
    if (M < 0) throw ConfigError("Delta_M^(J) requires M >= 0");
    if (J < -1) throw ConfigError("Delta_M^(J) requires J >= -1");
    if (M == 0) return 1.0;
    const std::size_t needed = static_cast<std::size_t>(2 * M + J + 1);
    if (moments.size() < needed) {
        std::ostringstream os;
        os << "Delta_" << M << "^(" << J << ") needs moments up to mu_" << 2 * M + J
           << ", got " << moments.size();
        throw InsufficientDataError(os.str());
    }
    Eigen::MatrixXd A(M, M);
    for (int i = 0; i < M; ++i)
        for (int j = 0; j < M; ++j)
            A(i, j) = moments.at_or_zero(i + j + 1 + J) + x * moments.at_or_zero(i + j + 2 + J);
    if (M == 1) return A(0, 0);
    return A.partialPivLu().determinant();
}

PadeApproximant pade_for_G(const MomentSequence& moments, int L, int M) {
    if (M < 0 || L < M) throw ConfigError("G approximant requires L >= M >= 0");
    PadeApproximant out;
    out.L = L;
    out.M = M;
    out.variable = PadeVariable::xi_standard;
    out.series_offset = 1;
    if (L == 0) {
        out.numerator = {0.0};
        out.denominator = {1.0};
        return out;
    }
    PadeApproximant base = solve_standard_pade(moments, L - 1, M);
    out.numerator.assign(static_cast<std::size_t>(L) + 1, 0.0);
    for (std::size_t k = 0; k < base.numerator.size(); ++k)
        out.numerator[k + 1] = base.numerator[k];
    out.denominator = base.denominator;
    return out;
}

} // namespace stpade
