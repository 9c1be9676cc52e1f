#ifndef STPADE_PADE_HPP
#define STPADE_PADE_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "stpade/moment_sequence.hpp"

namespace stpade {

enum class PadeVariable {
    xi_standard,   ///< polynomials in (-xi), denominator normalized to b_0 = 1
    s_nonstandard, ///< polynomials in s, denominator normalized to b_1 = 1
};

/// Rational approximant with degree bounds L (numerator) and M
/// (denominator).  Coefficients are stored in increasing powers of (-xi)
/// for the standard form and of s for the nonstandard form.
struct PadeApproximant {
    std::vector<double> numerator;   ///< a_0 ... a_L
    std::vector<double> denominator; ///< b_0 ... b_M
    int L = 0;
    int M = 0;
    PadeVariable variable = PadeVariable::xi_standard;
    /// Leading zero count of the target power series: 0 when approximating
    /// f(xi), 1 when approximating G(xi) or F(s) (their series start at the
    /// linear term).
    int series_offset = 0;

    /// Evaluate a standard-form approximant at xi.
    std::complex<double> eval_xi(std::complex<double> xi) const;
    /// Evaluate a nonstandard-form approximant at s.
    std::complex<double> eval_s(std::complex<double> s) const;
};

/// The linear system determining the denominator coefficients of [L/M]:
/// matrix(i,j) = mu_{L-M+1+i+j} (Hankel), rhs(i) = -mu_{L+1+i}, with the
/// convention mu_j = 0 for j < 0.  The unknown vector is (b_M, ..., b_1).
struct HankelSystem {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd rhs;
    int L = 0;
    int M = 0;
    int J = 0; ///< L - M
};

/// Builds the denominator system for [L/M].  Requires L-M+1 >= 0, M >= 1
/// and moments mu_0 ... mu_{L+M}.
HankelSystem build_hankel_system(const MomentSequence& moments, int L, int M);

/// Solves the standard [L/M] Pade approximant of f(xi) from moments.
/// For M = 0 this is the Taylor polynomial sum_j mu_j (-xi)^j.  The linear
/// solve uses a rank-revealing SVD; a smallest singular value below
/// eps_mach * ||H|| * M raises NonExistenceError (the approximant may fail
/// to exist for a Stieltjes series only through rank deficiency).
PadeApproximant solve_standard_pade(const MomentSequence& moments, int L, int M);

/// Independent oracle: evaluates the textbook determinant formulas for the
/// numerator P and denominator Q of [L/M] at the given xi by direct LU
/// determinants.  P/Q equals the solved approximant wherever Q != 0.
/// Q at xi = 0 is the determinant of the Hankel coefficient matrix.
std::pair<std::complex<double>, std::complex<double>>
pade_determinant_oracle(const MomentSequence& moments, int L, int M, std::complex<double> xi);

/// Result of re-expanding an approximant as a power series and comparing
/// with the target moments through order L+M.
struct AccuracyReport {
    bool passed = false;
    bool structural_failure = false; ///< set when the normalizing coefficient vanishes
    double max_deviation = 0.0;
    double tolerance = 0.0;
    int orders_checked = 0;
    std::string message;
};

/// Accuracy-through-order check: the series of the rational function must
/// reproduce the input moments through order L+M, with tolerance
/// 1e-9 * max(1, mu_0).  Series coefficients come from the long-division
/// recurrence c_k = (a_k - sum_{j=1..min(k,M)} b_j c_{k-j}) / b_0.
AccuracyReport verify_accuracy_through_order(const PadeApproximant& approx,
                                             const MomentSequence& moments);

/// Determinant Delta_M^(J)(x): 1 for M = 0, otherwise the M x M determinant
/// with entries mu_{i+j+1+J} + x mu_{i+j+2+J}.  Its zeros are the xi
/// locations of the poles of [M+J/M]; for a Stieltjes sequence
/// Delta_M^(J)(0) > 0 and the sign at large negative x is (-1)^M, up to the
/// rank supported by the measure.
double delta_MJ(const MomentSequence& moments, int M, int J, double x);

/// [L/M] approximant of G(xi) = -xi f(xi): equals (-xi) times [L-1/M] of f
/// for L >= 1, and the zero function for L = M = 0.  Requires L >= M >= 0.
PadeApproximant pade_for_G(const MomentSequence& moments, int L, int M);

} // namespace stpade

#endif
