#ifndef STPADE_RANDOM_HPP
#define STPADE_RANDOM_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace stpade {

/// Seeded draws built directly on the mt19937_64 word stream.  The
/// transformations are written out here instead of using the standard
/// distribution objects because those are implementation-defined and would
/// break the byte-for-byte reproducibility promised for generated datasets.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0,1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard normal via Box-Muller; the paired draw is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0,1], keeps log finite
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Complex normal with E|z|^2 = 1 (real and imaginary variance 1/2).
    std::complex<double> complex_normal() {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    /// Uniform integer in [0, n).
    std::uint64_t integer(std::uint64_t n) { return engine_() % n; }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace stpade

#endif
