#ifndef STPADE_MOMENT_SEQUENCE_HPP
#define STPADE_MOMENT_SEQUENCE_HPP

#include <cstddef>
#include <vector>

#include "stpade/errors.hpp"

namespace stpade {

/// Stieltjes moment sequence mu_0, mu_1, ..., mu_{count-1} of a positive
/// measure supported on [0,1].  Entries are nonnegative and non-increasing;
/// both are checked at construction with a small numerical slack.
class MomentSequence {
public:
    MomentSequence() = default;
    explicit MomentSequence(std::vector<double> values);

    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    double operator[](std::size_t m) const { return values_[m]; }
    const std::vector<double>& values() const { return values_; }

    /// mu_j with the convention mu_j = 0 for j < 0.
    double at_or_zero(long j) const {
        if (j < 0 || static_cast<std::size_t>(j) >= values_.size()) return 0.0;
        return values_[static_cast<std::size_t>(j)];
    }

    /// First `count` entries.  Throws if fewer are available.
    MomentSequence truncated(std::size_t count) const;

    /// Consistency flag: smallest eigenvalue of every leading Hankel block
    /// [mu_{i+j}] that the sequence can fill is >= -tol.
    bool hankel_consistent(double tol = 1e-10) const;

private:
    std::vector<double> values_;
};

} // namespace stpade

#endif
