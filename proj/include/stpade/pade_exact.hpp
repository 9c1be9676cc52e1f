#ifndef STPADE_PADE_EXACT_HPP
#define STPADE_PADE_EXACT_HPP

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "stpade/errors.hpp"

namespace stpade {

/// Arbitrary-precision rational scalar used by the exact reference path.
using Rational = boost::multiprecision::cpp_rational;

/// mu_m = sum_i lambda_i z_i^m for atoms (z_i, lambda_i), without rounding.
std::vector<Rational>
exact_atomic_moments(const std::vector<std::pair<Rational, Rational>>& atoms, int count);

/// Denominator coefficients b_0 = 1, b_1, ..., b_M of the [L/M] approximant,
/// solved over the rationals.  Throws NonExistenceError when the linear
/// system is exactly singular.
std::vector<Rational>
exact_denominator(const std::vector<Rational>& moments, int L, int M);

/// Numerator coefficients a_0 ... a_L for a given denominator.
std::vector<Rational>
exact_numerator(const std::vector<Rational>& moments,
                const std::vector<Rational>& denominator, int L, int M);

/// Determinant of the M x M matrix with entries
/// mu_{i+j+1+J} + x * mu_{i+j+2+J}, evaluated exactly.  M = 0 yields 1.
Rational exact_delta(const std::vector<Rational>& moments, int M, int J,
                     const Rational& x);

} // namespace stpade

#endif
