#ifndef STPADE_ERRORS_HPP
#define STPADE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace stpade {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation point lies on (or too close to) a branch cut, or outside the
/// domain of a map.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

/// Moment series evaluated where it diverges (|s| <= 1).
class DivergenceError : public Error {
public:
    explicit DivergenceError(const std::string& what) : Error(what) {}
};

/// The Hankel system is singular or numerically rank deficient, so the
/// requested approximant does not exist at working precision.
class NonExistenceError : public Error {
public:
    NonExistenceError(const std::string& what, double smallest_singular_value)
        : Error(what), smallest_singular_value(smallest_singular_value) {}
    double smallest_singular_value;
};

/// Denominator roots coincide within tolerance; no simple partial fraction
/// decomposition.
class MultiplePoleError : public Error {
public:
    explicit MultiplePoleError(const std::string& what) : Error(what) {}
};

/// A structural guarantee (real simple poles below -1, positive residues)
/// failed; signals numerical breakdown of the construction.
class StructureViolationError : public Error {
public:
    explicit StructureViolationError(const std::string& what) : Error(what) {}
};

/// Adaptive quadrature could not reach the requested tolerance.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, double achieved_error)
        : Error(what), achieved_error(achieved_error) {}
    double achieved_error;
};

/// Invalid configuration or arguments (degree bounds, record counts, ...).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Not enough moments supplied for the requested construction.
class InsufficientDataError : public Error {
public:
    explicit InsufficientDataError(const std::string& what) : Error(what) {}
};

} // namespace stpade

#endif
