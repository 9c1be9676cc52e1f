#include "stpade/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace stpade {

namespace {

constexpr double kCutImagTol = 1e-14;

bool on_segment_cut(std::complex<double> s) {
    return std::abs(s.imag()) <= kCutImagTol && s.real() >= 0.0 && s.real() <= 1.0;
}

} // namespace

std::complex<double> s_from_permittivities(std::complex<double> eps1,
                                           std::complex<double> eps2) {
    if (eps1 == std::complex<double>(0.0, 0.0))
        throw ConfigError("host permittivity eps1 must be nonzero");
    const std::complex<double> ratio = eps2 / eps1;
    if (ratio == std::complex<double>(1.0, 0.0))
        throw DomainError("contrast ratio eps2/eps1 = 1 (homogeneous medium) has no finite s");
    return 1.0 / (1.0 - ratio);
}

FrequencyDataset::FrequencyDataset(std::vector<DataRecord> records, double noise_level)
    : records_(std::move(records)), noise_level_(noise_level) {
    if (noise_level_ < 0.0) throw ConfigError("noise level must be nonnegative");
    for (std::size_t k = 0; k < records_.size(); ++k) {
        const DataRecord& rec = records_[k];
        if (!(rec.omega >= 0.0)) {
            std::ostringstream os;
            os << "record " << k << ": omega must be nonnegative, got " << rec.omega;
            throw ConfigError(os.str());
        }
        if (rec.eps1.has_value() != rec.eps2.has_value())
            throw ConfigError("records must carry both permittivities or neither");
        if (rec.eps1) {
            const std::complex<double> derived = s_from_permittivities(*rec.eps1, *rec.eps2);
            const double scale = std::max(1.0, std::abs(derived));
            if (std::abs(derived - rec.s) > 1e-12 * scale) {
                std::ostringstream os;
                os << "record " << k << ": stored s = (" << rec.s.real() << ", "
                   << rec.s.imag() << ") disagrees with the permittivity pair";
                throw ConfigError(os.str());
            }
        }
        if (on_segment_cut(rec.s)) {
            std::ostringstream os;
            os << "record " << k << ": s = (" << rec.s.real() << ", " << rec.s.imag()
               << ") lies on the spectral segment [0,1]";
            throw DomainError(os.str());
        }
    }
}

std::size_t FrequencyDataset::distinct_s_count() const {
    std::vector<std::complex<double>> values;
    values.reserve(records_.size());
    for (const auto& rec : records_) values.push_back(rec.s);
    std::sort(values.begin(), values.end(), [](std::complex<double> a, std::complex<double> b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values.size();
}

} // namespace stpade
