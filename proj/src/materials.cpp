#include "stpade/materials.hpp"

#include <cmath>
#include <sstream>

#include "stpade/random.hpp"

namespace stpade {

namespace {

constexpr double kCutImagTol = 1e-14;

bool on_segment_cut(std::complex<double> s) {
    return std::abs(s.imag()) <= kCutImagTol && s.real() >= 0.0 && s.real() <= 1.0;
}

void check_fraction(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        std::ostringstream os;
        os << "volume fraction must lie in (0,1), got " << p;
        throw ConfigError(os.str());
    }
}

} // namespace

CompositeModel CompositeModel::laminate_parallel(double p) {
    check_fraction(p);
    return {CompositeKind::laminate_parallel, p};
}

CompositeModel CompositeModel::laminate_perpendicular(double p) {
    check_fraction(p);
    return {CompositeKind::laminate_perpendicular, p};
}

CompositeModel CompositeModel::hashin_shtrikman_2d(double p) {
    check_fraction(p);
    return {CompositeKind::hashin_shtrikman_2d, p};
}

CompositeModel CompositeModel::checkerboard() {
    return {CompositeKind::checkerboard_5050, 0.5};
}

PermittivityModel PermittivityModel::constant(std::complex<double> c) {
    PermittivityModel out;
    out.kind = PermittivityKind::constant;
    out.constant_value = c;
    return out;
}

PermittivityModel PermittivityModel::drude(double eps_inf, double omega_p, double gamma) {
    if (!(gamma > 0.0)) throw ConfigError("drude damping gamma must be positive");
    if (!(omega_p >= 0.0)) throw ConfigError("drude plasma frequency must be nonnegative");
    PermittivityModel out;
    out.kind = PermittivityKind::drude;
    out.eps_inf = eps_inf;
    out.omega_p = omega_p;
    out.gamma = gamma;
    return out;
}

std::complex<double> PermittivityModel::operator()(double omega) const {
    if (kind == PermittivityKind::constant) return constant_value;
    if (!(omega > 0.0))
        throw ConfigError("drude permittivity requires omega > 0");
    return eps_inf - omega_p * omega_p /
                        std::complex<double>(omega * omega, gamma * omega);
}

SpectralMeasure spectral_measure_of(const CompositeModel& model) {
    switch (model.kind) {
    case CompositeKind::laminate_parallel:
        return SpectralMeasure({Atom{0.0, model.p}});
    case CompositeKind::laminate_perpendicular:
        return SpectralMeasure({Atom{1.0 - model.p, model.p}});
    case CompositeKind::hashin_shtrikman_2d:
        return SpectralMeasure({Atom{(1.0 - model.p) / 2.0, model.p}});
    case CompositeKind::checkerboard_5050:
        return SpectralMeasure(ContinuousDensity::checkerboard());
    }
    throw ConfigError("unknown composite kind");
}

std::complex<double> effective_F(const CompositeModel& model, SPoint s) {
    if (on_segment_cut(s.value))
        throw DomainError("F(s) is undefined on the spectral segment [0,1]");
    switch (model.kind) {
    case CompositeKind::laminate_parallel:
        return model.p / s.value;
    case CompositeKind::laminate_perpendicular:
        return model.p / (s.value - (1.0 - model.p));
    case CompositeKind::hashin_shtrikman_2d:
        return model.p / (s.value - (1.0 - model.p) / 2.0);
    case CompositeKind::checkerboard_5050:
        // sqrt((s-1)/s) with the principal branch: the cut of 1 - 1/s falls
        // exactly on s in [0,1] and F ~ 1/(2s) at infinity.
        return 1.0 - std::sqrt(1.0 - 1.0 / s.value);
    }
    throw ConfigError("unknown composite kind");
}

FrequencyDataset generate_dataset(const CompositeModel& model,
                                  const PermittivityModel& pm1,
                                  const PermittivityModel& pm2,
                                  const std::vector<double>& omegas,
                                  double noise, std::uint64_t seed) {
    if (noise < 0.0) throw ConfigError("noise level must be nonnegative");
    Rng rng(seed);
    std::vector<DataRecord> records;
    records.reserve(omegas.size());
    for (double omega : omegas) {
        const std::complex<double> e1 = pm1(omega);
        const std::complex<double> e2 = pm2(omega);
        const std::complex<double> s = s_from_permittivities(e1, e2);
        if (on_segment_cut(s)) {
            std::ostringstream os;
            os << "omega = " << omega << " maps to s = (" << s.real() << ", "
               << s.imag() << ") on the spectral segment [0,1]";
            throw DomainError(os.str());
        }
        DataRecord rec;
        rec.omega = omega;
        rec.eps1 = e1;
        rec.eps2 = e2;
        rec.s = s;
        rec.d = effective_F(model, SPoint{s});
        if (noise > 0.0) rec.d *= 1.0 + noise * rng.complex_normal();
        records.push_back(rec);
    }
    return FrequencyDataset(std::move(records), noise);
}

FrequencyDataset dataset_from_measure(const SpectralMeasure& measure,
                                      const std::vector<std::complex<double>>& s_points,
                                      double noise, std::uint64_t seed) {
    if (noise < 0.0) throw ConfigError("noise level must be nonnegative");
    Rng rng(seed);
    std::vector<DataRecord> records;
    records.reserve(s_points.size());
    for (std::complex<double> s : s_points) {
        DataRecord rec;
        rec.s = s;
        rec.d = eval_F(measure, SPoint{s});
        if (noise > 0.0) rec.d *= 1.0 + noise * rng.complex_normal();
        records.push_back(rec);
    }
    return FrequencyDataset(std::move(records), noise);
}

} // namespace stpade
