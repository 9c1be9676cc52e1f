#include "stpade/moment_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <Eigen/Dense>

namespace stpade {

MomentSequence::MomentSequence(std::vector<double> values) : values_(std::move(values)) {
    const double scale = values_.empty() ? 1.0 : std::max(1.0, values_.front());
    const double slack = 1e-9 * scale;
    for (std::size_t m = 0; m < values_.size(); ++m) {
        if (values_[m] < -slack)
            throw ConfigError("moment sequence entries must be nonnegative");
        if (m > 0 && values_[m] > values_[m - 1] + slack)
            throw ConfigError("moment sequence must be non-increasing (support is [0,1])");
    }
}

MomentSequence MomentSequence::truncated(std::size_t count) const {
    if (count > values_.size())
        throw InsufficientDataError("truncation length exceeds available moments");
    return MomentSequence(std::vector<double>(values_.begin(),
                                              values_.begin() + static_cast<long>(count)));
}

bool MomentSequence::hankel_consistent(double tol) const {
    const double scale = values_.empty() ? 1.0 : std::max(1.0, values_.front());
    for (std::size_t k = 1; 2 * (k - 1) < values_.size(); ++k) {
        Eigen::MatrixXd H(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) H(i, j) = values_[i + j];
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -tol * scale) return false;
    }
    return true;
}

} // namespace stpade
