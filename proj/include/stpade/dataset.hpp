#ifndef STPADE_DATASET_HPP
#define STPADE_DATASET_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "stpade/errors.hpp"

namespace stpade {

/// s = 1/(1 - eps2/eps1).  Throws DomainError when the contrast ratio is
/// exactly 1 (homogeneous medium, s at infinity) and ConfigError for a zero
/// host permittivity.
std::complex<double> s_from_permittivities(std::complex<double> eps1,
                                           std::complex<double> eps2);

struct DataRecord {
    double omega = 0.0;  // rad/s; 0 when the record has no physical frequency
    std::optional<std::complex<double>> eps1;
    std::optional<std::complex<double>> eps2;
    std::complex<double> s;
    std::complex<double> d;  // measured F-value at s
};

/// Measurement set (s_k, d_k), optionally carrying the permittivity pair
/// each s_k was derived from.  Construction re-derives s from the
/// permittivities when present (mismatch beyond 1e-12 is rejected) and
/// requires every s_k off the real segment [0,1].
class FrequencyDataset {
public:
    FrequencyDataset() = default;
    FrequencyDataset(std::vector<DataRecord> records, double noise_level);

    const std::vector<DataRecord>& records() const { return records_; }
    double noise_level() const { return noise_level_; }
    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }

    /// Number of distinct s values; 1 flags a degenerate constant-contrast set.
    std::size_t distinct_s_count() const;

private:
    std::vector<DataRecord> records_;
    double noise_level_ = 0.0;
};

} // namespace stpade

#endif
