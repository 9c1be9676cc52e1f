#ifndef STPADE_MEASURE_HPP
#define STPADE_MEASURE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stpade/errors.hpp"
#include "stpade/moment_sequence.hpp"

namespace stpade {

/// One Dirac atom of a spectral measure: a jump of size `weight` at
/// `position` in [0,1].
struct Atom {
    double position = 0.0;
    double weight = 0.0;
};

/// How the endpoint behaviour of a density should be handled by quadrature.
enum class QuadratureHint {
    smooth,
    inverse_sqrt_at_zero,
    inverse_sqrt_at_both_ends,
};

enum class DensityKind {
    checkerboard, ///< (1/pi) sqrt((1-z)/z)
    table,        ///< piecewise-linear interpolation of tabulated values
    custom,       ///< arbitrary callable, not serializable
};

/// Absolutely continuous part of a spectral measure: a nonnegative density
/// on [0,1], possibly with integrable inverse-square-root endpoint
/// singularities.
class ContinuousDensity {
public:
    static ContinuousDensity checkerboard();
    static ContinuousDensity table(std::vector<double> z, std::vector<double> w);
    static ContinuousDensity custom(std::function<double(double)> fn, QuadratureHint hint);

    /// Pointwise evaluation, valid for z in (0,1).
    double operator()(double z) const { return fn_(z); }

    QuadratureHint hint() const { return hint_; }
    DensityKind kind() const { return kind_; }
    const std::vector<double>& table_z() const { return table_z_; }
    const std::vector<double>& table_w() const { return table_w_; }

private:
    ContinuousDensity() = default;
    std::function<double(double)> fn_;
    QuadratureHint hint_ = QuadratureHint::smooth;
    DensityKind kind_ = DensityKind::custom;
    std::vector<double> table_z_, table_w_;
};

/// Positive Borel measure on [0,1]: a finite list of atoms plus an optional
/// continuous density.  Immutable after construction; atoms are stored in
/// strictly increasing position order.
///
/// Total mass >= 1 is permitted (the measure then fails the volume-fraction
/// interpretation) and is only flagged, never rejected here.
class SpectralMeasure {
public:
    /// The zero measure.
    SpectralMeasure() = default;

    explicit SpectralMeasure(std::vector<Atom> atoms,
                             std::optional<ContinuousDensity> density = std::nullopt);
    explicit SpectralMeasure(ContinuousDensity density);

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::optional<ContinuousDensity>& density() const { return density_; }

    /// mu_0, computed once at construction (atoms exactly, density by
    /// quadrature).
    double total_mass() const { return total_mass_; }
    /// Set when total mass >= 1; the measure is then not interpretable as a
    /// two-phase volume fraction.
    bool mass_exceeds_unity() const { return total_mass_ >= 1.0; }

    bool is_zero() const { return atoms_.empty() && !density_.has_value(); }

private:
    std::vector<Atom> atoms_;
    std::optional<ContinuousDensity> density_;
    double total_mass_ = 0.0;
};

/// m-th moment: sum_i lambda_i z_i^m + integral_0^1 z^m density(z) dz.
/// The atomic part is an exact sum; the continuous part uses adaptive
/// Gauss-Kronrod quadrature (absolute tolerance 1e-12) after a
/// singularity-aware substitution.
double moment(const SpectralMeasure& measure, int m);

/// First `count` moments, mu_0 ... mu_{count-1}.
MomentSequence moments(const SpectralMeasure& measure, int count);

enum class ValueCountClass { zero, finite, infinite };

struct ValueCount {
    ValueCountClass cls = ValueCountClass::zero;
    int atom_count = 0; ///< meaningful for cls == finite
};

/// Classifies how many distinct values the distribution function takes:
/// zero measure, n atoms, or infinitely many (a density is present).
ValueCount value_count_class(const SpectralMeasure& measure);

} // namespace stpade

#endif
