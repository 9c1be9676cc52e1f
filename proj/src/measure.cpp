#include "stpade/measure.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "stpade/quadrature.hpp"

namespace stpade {

namespace {

constexpr double kMinAtomGap = 1e-12;
constexpr double kPi = 3.141592653589793238462643383279502884;

double checkerboard_density_fn(double z) {
    return std::sqrt((1.0 - z) / z) / kPi;
}

} // namespace

ContinuousDensity ContinuousDensity::checkerboard() {
    ContinuousDensity d;
    d.fn_ = checkerboard_density_fn;
    d.hint_ = QuadratureHint::inverse_sqrt_at_zero;
    d.kind_ = DensityKind::checkerboard;
    return d;
}

ContinuousDensity ContinuousDensity::table(std::vector<double> z, std::vector<double> w) {
    if (z.size() != w.size() || z.size() < 2)
        throw ConfigError("table density needs >= 2 matching (z, w) pairs");
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (z[i] < 0.0 || z[i] > 1.0)
            throw ConfigError("table density node outside [0,1]");
        if (i > 0 && z[i] <= z[i - 1])
            throw ConfigError("table density nodes must be strictly increasing");
        if (w[i] < 0.0)
            throw ConfigError("table density values must be nonnegative");
    }
    ContinuousDensity d;
    d.kind_ = DensityKind::table;
    d.hint_ = QuadratureHint::smooth;
    d.table_z_ = std::move(z);
    d.table_w_ = std::move(w);
    // Piecewise-linear interpolation; zero outside the tabulated range.
    d.fn_ = [zs = d.table_z_, ws = d.table_w_](double z) {
        if (z <= zs.front()) return z < zs.front() ? 0.0 : ws.front();
        if (z >= zs.back()) return z > zs.back() ? 0.0 : ws.back();
        auto it = std::upper_bound(zs.begin(), zs.end(), z);
        const std::size_t hi = static_cast<std::size_t>(it - zs.begin());
        const std::size_t lo = hi - 1;
        const double t = (z - zs[lo]) / (zs[hi] - zs[lo]);
        return ws[lo] + t * (ws[hi] - ws[lo]);
    };
    return d;
}

ContinuousDensity ContinuousDensity::custom(std::function<double(double)> fn, QuadratureHint hint) {
    if (!fn) throw ConfigError("custom density requires a callable");
    ContinuousDensity d;
    d.fn_ = std::move(fn);
    d.hint_ = hint;
    d.kind_ = DensityKind::custom;
    return d;
}

SpectralMeasure::SpectralMeasure(std::vector<Atom> atoms, std::optional<ContinuousDensity> density)
    : atoms_(std::move(atoms)), density_(std::move(density)) {
    std::sort(atoms_.begin(), atoms_.end(),
              [](const Atom& a, const Atom& b) { return a.position < b.position; });
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
        const Atom& a = atoms_[i];
        if (!(a.position >= 0.0 && a.position <= 1.0))
            throw ConfigError("atom position outside [0,1]");
        if (!(a.weight > 0.0))
            throw ConfigError("atom weight must be positive");
        if (i > 0 && atoms_[i].position - atoms_[i - 1].position < kMinAtomGap)
            throw ConfigError("atom positions coincide within 1e-12");
        total_mass_ += a.weight;
    }
    if (density_) total_mass_ += integrate01(*density_, density_->hint());
}

SpectralMeasure::SpectralMeasure(ContinuousDensity density)
    : SpectralMeasure(std::vector<Atom>{}, std::move(density)) {}

double moment(const SpectralMeasure& measure, int m) {
    if (m < 0) throw ConfigError("moment order must be nonnegative");
    double result = 0.0;
    for (const Atom& a : measure.atoms()) {
        // 0^0 = 1: an atom at z = 0 contributes its full weight to mu_0.
        result += a.weight * (m == 0 ? 1.0 : std::pow(a.position, m));
    }
    if (measure.density()) {
        const ContinuousDensity& d = *measure.density();
        result += integrate01(
            [&d, m](double z) { return (m == 0 ? 1.0 : std::pow(z, m)) * d(z); }, d.hint());
    }
    return result;
}

MomentSequence moments(const SpectralMeasure& measure, int count) {
    if (count < 1) throw ConfigError("moment count must be >= 1");
    std::vector<double> vals(static_cast<std::size_t>(count));
    for (int m = 0; m < count; ++m) vals[static_cast<std::size_t>(m)] = moment(measure, m);
    return MomentSequence(std::move(vals));
}

ValueCount value_count_class(const SpectralMeasure& measure) {
    if (measure.density()) return {ValueCountClass::infinite, 0};
    if (measure.atoms().empty()) return {ValueCountClass::zero, 0};
    return {ValueCountClass::finite, static_cast<int>(measure.atoms().size())};
}

} // namespace stpade
