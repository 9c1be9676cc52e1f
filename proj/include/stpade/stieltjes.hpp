#ifndef STPADE_STIELTJES_HPP
#define STPADE_STIELTJES_HPP

#include <complex>

#include "stpade/measure.hpp"
#include "stpade/moment_sequence.hpp"

namespace stpade {

/// A point in the contrast variable s = 1/(1 - h).  Evaluation requires s
/// off the real segment [0,1].
struct SPoint {
    std::complex<double> value;
};

/// F(s) = integral_0^1 dmu(z)/(s - z).  Analytic off [0,1]; real, positive
/// and decreasing for real s > 1 when mu != 0.
/// Throws DomainError when s lies on the cut [0,1] (imaginary part below
/// 1e-14 in absolute value).
std::complex<double> eval_F(const SpectralMeasure& measure, SPoint s);

/// Auxiliary function f(xi) = integral_0^1 dmu(z)/(1 + z xi), analytic off
/// the cut (-inf,-1].  Related to F by F(s) = -xi f(xi) with xi = -1/s.
std::complex<double> eval_f(const SpectralMeasure& measure, std::complex<double> xi);

/// G(xi) = -xi f(xi) = F(-1/xi).
std::complex<double> eval_G(const SpectralMeasure& measure, std::complex<double> xi);

/// Partial sum of the moment series F(s) ~ sum_m mu_m / s^{m+1} together
/// with a rigorous truncation bound mu_0 |s|^{-count} / (|s| - 1), valid for
/// |s| > 1.
struct SeriesValue {
    std::complex<double> value;
    double truncation_bound;
};

/// Evaluates the truncated moment series at s.  Throws DivergenceError for
/// |s| <= 1.
SeriesValue series_eval_F(const MomentSequence& moments, SPoint s);

/// Variable maps s = -1/xi and xi = -1/s.  Mutually inverse; either throws
/// DomainError on a zero argument.
SPoint s_from_xi(std::complex<double> xi);
std::complex<double> xi_from_s(SPoint s);

} // namespace stpade

#endif
