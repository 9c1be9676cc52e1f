#ifndef STPADE_MATERIALS_HPP
#define STPADE_MATERIALS_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "stpade/dataset.hpp"
#include "stpade/measure.hpp"
#include "stpade/stieltjes.hpp"

namespace stpade {

enum class CompositeKind {
    laminate_parallel,       // field along the layers: F(s) = p/s
    laminate_perpendicular,  // field across the layers: F(s) = p/(s-(1-p))
    hashin_shtrikman_2d,     // coated cylinders: F(s) = p/(s-(1-p)/2)
    checkerboard_5050,       // square checkerboard at equal fractions
};

struct CompositeModel {
    CompositeKind kind = CompositeKind::laminate_parallel;
    double p = 0.5;  // volume fraction of the contrasting phase

    static CompositeModel laminate_parallel(double p);
    static CompositeModel laminate_perpendicular(double p);
    static CompositeModel hashin_shtrikman_2d(double p);
    static CompositeModel checkerboard();  // p fixed at 1/2
};

enum class PermittivityKind { constant, drude };

/// Frequency-dependent scalar permittivity of one constituent.
struct PermittivityModel {
    PermittivityKind kind = PermittivityKind::constant;
    std::complex<double> constant_value{1.0, 0.0};
    double eps_inf = 1.0;  // drude parameters; omega_p and gamma in rad/s
    double omega_p = 0.0;
    double gamma = 0.0;

    static PermittivityModel constant(std::complex<double> c);
    static PermittivityModel drude(double eps_inf, double omega_p, double gamma);

    /// eps(omega); the drude form eps_inf - omega_p^2/(omega^2 + i*gamma*omega)
    /// requires omega > 0 and has Im >= 0 (passive medium).
    std::complex<double> operator()(double omega) const;
};

/// Ground-truth spectral measure of each archetype: one atom for the
/// laminates and coated cylinders, the inverse-square-root density for the
/// checkerboard.
SpectralMeasure spectral_measure_of(const CompositeModel& model);

/// Closed-form F(s); agrees with eval_F of spectral_measure_of(model).
std::complex<double> effective_F(const CompositeModel& model, SPoint s);

/// Synthetic measurement set: s_k from the permittivity pair at each omega,
/// d_k = F(s_k) * (1 + noise * eta_k) with eta_k seeded complex normals.
FrequencyDataset generate_dataset(const CompositeModel& model,
                                  const PermittivityModel& pm1,
                                  const PermittivityModel& pm2,
                                  const std::vector<double>& omegas,
                                  double noise, std::uint64_t seed);

/// Same noise model, but d_k evaluated from an arbitrary measure at given
/// s points (no permittivity metadata).
FrequencyDataset dataset_from_measure(const SpectralMeasure& measure,
                                      const std::vector<std::complex<double>>& s_points,
                                      double noise, std::uint64_t seed);

} // namespace stpade

#endif
