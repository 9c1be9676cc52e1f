#ifndef STPADE_BENCHMARKS_HPP
#define STPADE_BENCHMARKS_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stpade {

struct BenchmarkCase {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Randomized end-to-end checks of the library's structural guarantees.
/// Each returns a single pass/fail with a human-readable summary; all
/// tolerances are fixed inside the implementations.
BenchmarkCase run_exact_recovery(std::uint64_t seed);
BenchmarkCase run_existence_grid(std::uint64_t seed);
BenchmarkCase run_pole_structure(std::uint64_t seed);
BenchmarkCase run_nonstandard_form(std::uint64_t seed);
BenchmarkCase run_series_match(std::uint64_t seed);
BenchmarkCase run_moment_reconstruction(std::uint64_t seed);
BenchmarkCase run_equivalence_pairs(std::uint64_t seed);
BenchmarkCase run_oracle_agreement(std::uint64_t seed);
BenchmarkCase run_sign_law(std::uint64_t seed);
BenchmarkCase run_noise_robustness(std::uint64_t seed);

/// The nine structural checks above, in a fixed order.
std::vector<BenchmarkCase> acceptance_suite(std::uint64_t seed);

/// Named groupings for the command-line front end: roundtrip, existence,
/// structure, series, reconstruction, equivalence, oracle, signlaw, noise,
/// all.  Unknown names raise ConfigError.
std::vector<BenchmarkCase> run_suite(std::string_view name, std::uint64_t seed);

} // namespace stpade

#endif
