#include "stpade/stieltjes.hpp"

#include <cmath>

#include "stpade/quadrature.hpp"

namespace stpade {

namespace {

constexpr double kCutImagTol = 1e-14;

// Only exactly-real points are rejected: measured data for lossy materials
// carries a genuine imaginary part and must pass.
bool on_segment_cut(std::complex<double> s) {
    return std::abs(s.imag()) <= kCutImagTol && s.real() >= 0.0 && s.real() <= 1.0;
}

bool on_ray_cut(std::complex<double> xi) {
    return std::abs(xi.imag()) <= kCutImagTol && xi.real() <= -1.0;
}

std::complex<double> integrate_complex(const ContinuousDensity& d,
                                       auto&& kernel) {
    const double re = integrate01(
        [&](double z) { return d(z) * kernel(z).real(); }, d.hint());
    const double im = integrate01(
        [&](double z) { return d(z) * kernel(z).imag(); }, d.hint());
    return {re, im};
}

} // namespace

std::complex<double> eval_F(const SpectralMeasure& measure, SPoint s) {
    if (on_segment_cut(s.value))
        throw DomainError("F(s) is undefined on the cut [0,1]");
    std::complex<double> result = 0.0;
    for (const Atom& a : measure.atoms()) result += a.weight / (s.value - a.position);
    if (measure.density()) {
        result += integrate_complex(*measure.density(), [&](double z) {
            return 1.0 / (s.value - z);
        });
    }
    return result;
}

std::complex<double> eval_f(const SpectralMeasure& measure, std::complex<double> xi) {
    if (on_ray_cut(xi))
        throw DomainError("f(xi) is undefined on the cut (-inf,-1]");
    std::complex<double> result = 0.0;
    for (const Atom& a : measure.atoms()) result += a.weight / (1.0 + a.position * xi);
    if (measure.density()) {
        result += integrate_complex(*measure.density(), [&](double z) {
            return 1.0 / (1.0 + z * xi);
        });
    }
    return result;
}

std::complex<double> eval_G(const SpectralMeasure& measure, std::complex<double> xi) {
    return -xi * eval_f(measure, xi);
}

SeriesValue series_eval_F(const MomentSequence& moments, SPoint s) {
    const double mag = std::abs(s.value);
    if (mag <= 1.0)
        throw DivergenceError("moment series for F diverges for |s| <= 1");
    std::complex<double> sum = 0.0;
    std::complex<double> inv_s = 1.0 / s.value;
    std::complex<double> power = inv_s; // 1/s^{m+1}
    for (std::size_t m = 0; m < moments.size(); ++m) {
        sum += moments[m] * power;
        power *= inv_s;
    }
    const double mu0 = moments.empty() ? 0.0 : moments[0];
    const double bound = mu0 * std::pow(mag, -static_cast<double>(moments.size())) / (mag - 1.0);
    return {sum, bound};
}

SPoint s_from_xi(std::complex<double> xi) {
    if (xi == std::complex<double>(0.0, 0.0))
        throw DomainError("s = -1/xi is undefined at xi = 0");
    return SPoint{-1.0 / xi};
}

std::complex<double> xi_from_s(SPoint s) {
    if (s.value == std::complex<double>(0.0, 0.0))
        throw DomainError("xi = -1/s is undefined at s = 0");
    return -1.0 / s.value;
}

} // namespace stpade
