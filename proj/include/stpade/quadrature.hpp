#ifndef STPADE_QUADRATURE_HPP
#define STPADE_QUADRATURE_HPP

#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "stpade/errors.hpp"
#include "stpade/measure.hpp"

namespace stpade {

/// Adaptive Gauss-Kronrod integration of f over [0,1] to absolute tolerance
/// `abs_tol`.  For hints that announce inverse-square-root endpoint
/// singularities the substitution z = sin^2(theta) is applied first, which
/// turns z^{-1/2} and (1-z)^{-1/2} behaviour into a smooth integrand.
/// Throws QuadratureError (carrying the achieved estimate) if the error
/// estimate does not reach abs_tol within the subdivision depth cap.
template <typename F>
double integrate01(F&& f, QuadratureHint hint, double abs_tol = 1e-12) {
    using boost::math::quadrature::gauss_kronrod;
    constexpr unsigned max_depth = 12;

    double error = 0.0;
    double value = 0.0;
    if (hint == QuadratureHint::smooth) {
        value = gauss_kronrod<double, 15>::integrate(f, 0.0, 1.0, max_depth, 1e-14, &error);
    } else {
        constexpr double half_pi = 1.5707963267948966;
        auto g = [&f](double theta) {
            const double s = std::sin(theta);
            const double c = std::cos(theta);
            const double z = s * s;
            return f(z) * 2.0 * s * c;
        };
        value = gauss_kronrod<double, 15>::integrate(g, 0.0, half_pi, max_depth, 1e-14, &error);
    }
    if (!(error <= abs_tol + 1e-14 * std::abs(value))) {
        throw QuadratureError("adaptive quadrature did not reach tolerance " +
                                  std::to_string(abs_tol) +
                                  " (achieved estimate " + std::to_string(error) + ")",
                              error);
    }
    return value;
}

} // namespace stpade

#endif
