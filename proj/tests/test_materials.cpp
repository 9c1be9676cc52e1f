#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "stpade/dataset.hpp"
#include "stpade/errors.hpp"
#include "stpade/materials.hpp"
#include "stpade/measure.hpp"
#include "stpade/stieltjes.hpp"

using namespace stpade;

TEST_SUITE("materials") {

TEST_CASE("contrast variable from permittivity pairs") {
    const std::complex<double> one{1.0, 0.0};
    CHECK(std::abs(s_from_permittivities(one, {-1.0, 0.0}) -
                   std::complex<double>(0.5, 0.0)) < 1e-15);
    CHECK(std::abs(s_from_permittivities(one, {2.0, 0.0}) -
                   std::complex<double>(-1.0, 0.0)) < 1e-15);
    CHECK(std::abs(s_from_permittivities(one, {0.5, 0.5}) -
                   std::complex<double>(1.0, 1.0)) < 1e-14);
    CHECK_THROWS_AS(s_from_permittivities(one, one), DomainError);
    CHECK_THROWS_AS(s_from_permittivities({0.0, 0.0}, one), ConfigError);
}

TEST_CASE("laminate with the field along the layers") {
    const CompositeModel model = CompositeModel::laminate_parallel(0.3);
    const SpectralMeasure measure = spectral_measure_of(model);
    REQUIRE(measure.atoms().size() == 1);
    CHECK(measure.atoms()[0].position == 0.0);
    CHECK(measure.atoms()[0].weight == 0.3);
    CHECK(std::abs(effective_F(model, SPoint{{2.0, 0.0}}) -
                   std::complex<double>(0.15, 0.0)) < 1e-15);
    CHECK(std::abs(effective_F(model, SPoint{{2.0, 0.0}}) -
                   eval_F(measure, SPoint{{2.0, 0.0}})) < 1e-14);
}

TEST_CASE("laminate with the field across the layers") {
    const CompositeModel model = CompositeModel::laminate_perpendicular(0.3);
    const SpectralMeasure measure = spectral_measure_of(model);
    REQUIRE(measure.atoms().size() == 1);
    CHECK(measure.atoms()[0].position == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(measure.atoms()[0].weight == 0.3);
    const SPoint s{{2.0, 0.0}};
    CHECK(std::abs(effective_F(model, s) - std::complex<double>(0.3 / 1.3, 0.0)) < 1e-14);
}

TEST_CASE("coated-cylinder geometry puts its pole at (1-p)/2") {
    const CompositeModel model = CompositeModel::hashin_shtrikman_2d(0.5);
    const SpectralMeasure measure = spectral_measure_of(model);
    REQUIRE(measure.atoms().size() == 1);
    CHECK(measure.atoms()[0].position == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(measure.atoms()[0].weight == 0.5);
    const SPoint s{{1.5, 0.4}};
    CHECK(std::abs(effective_F(model, s) - eval_F(measure, s)) < 1e-14);
}

TEST_CASE("checkerboard closed form equals the quadrature of its density") {
    const CompositeModel model = CompositeModel::checkerboard();
    CHECK(model.p == 0.5);
    const SpectralMeasure measure = spectral_measure_of(model);
    CHECK(measure.density().has_value());
    CHECK(effective_F(model, SPoint{{2.0, 0.0}}).real() ==
          doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-14));
    const SPoint points[] = {SPoint{{2.0, 0.0}}, SPoint{{0.3, 0.8}}, SPoint{{-0.6, 0.2}}};
    for (const SPoint s : points)
        CHECK(std::abs(effective_F(model, s) - eval_F(measure, s)) < 1e-8);
}

TEST_CASE("volume fractions are validated") {
    CHECK_THROWS_AS(CompositeModel::laminate_parallel(0.0), ConfigError);
    CHECK_THROWS_AS(CompositeModel::laminate_parallel(1.0), ConfigError);
    CHECK_THROWS_AS(CompositeModel::hashin_shtrikman_2d(-0.2), ConfigError);
}

TEST_CASE("closed forms reject the spectral segment") {
    CHECK_THROWS_AS(effective_F(CompositeModel::laminate_parallel(0.3), SPoint{{0.5, 0.0}}),
                    DomainError);
    CHECK_THROWS_AS(effective_F(CompositeModel::checkerboard(), SPoint{{1.0, 0.0}}),
                    DomainError);
}

TEST_CASE("drude permittivity is passive and validated") {
    const PermittivityModel drude = PermittivityModel::drude(1.0, 1.0, 0.1);
    for (double omega : {0.2, 0.7, 1.3, 4.0}) {
        const std::complex<double> eps = drude(omega);
        CHECK(eps.imag() > 0.0);  // passive constituent
        const std::complex<double> expected =
            1.0 - 1.0 / (omega * omega + std::complex<double>(0.0, 0.1) * omega);
        CHECK(std::abs(eps - expected) < 1e-14);
    }
    CHECK_THROWS_AS(drude(0.0), ConfigError);
    CHECK_THROWS_AS(drude(-1.0), ConfigError);
    CHECK_THROWS_AS(PermittivityModel::drude(1.0, 1.0, 0.0), ConfigError);
    CHECK_THROWS_AS(PermittivityModel::drude(1.0, -1.0, 0.1), ConfigError);

    const PermittivityModel fixed = PermittivityModel::constant({3.0, 0.5});
    CHECK(fixed(2.0) == std::complex<double>(3.0, 0.5));
}

TEST_CASE("generated datasets carry consistent records") {
    const CompositeModel model = CompositeModel::laminate_perpendicular(0.4);
    const PermittivityModel host = PermittivityModel::constant({1.0, 0.0});
    const PermittivityModel inclusion = PermittivityModel::drude(1.0, 2.0, 0.3);
    const std::vector<double> omegas{0.5, 0.9, 1.4, 2.2};
    const FrequencyDataset data = generate_dataset(model, host, inclusion, omegas, 0.0, 1);
    REQUIRE(data.size() == 4);
    for (std::size_t k = 0; k < data.size(); ++k) {
        const DataRecord& rec = data.records()[k];
        CHECK(rec.omega == omegas[k]);
        REQUIRE(rec.eps1.has_value());
        REQUIRE(rec.eps2.has_value());
        CHECK(std::abs(rec.s - s_from_permittivities(*rec.eps1, *rec.eps2)) < 1e-14);
        CHECK(std::abs(rec.d - effective_F(model, SPoint{rec.s})) < 1e-14);
        // passivity transfers: measured response in the lower half plane
        CHECK(rec.s.imag() * rec.d.imag() < 0.0);
    }
}

TEST_CASE("noise is seeded and multiplicative") {
    const SpectralMeasure measure({{0.25, 0.3}, {0.75, 0.2}});
    const std::vector<std::complex<double>> pts{{1.5, 0.5}, {-0.3, 0.9}, {0.4, 1.2}};
    const FrequencyDataset clean = dataset_from_measure(measure, pts, 0.0, 77);
    const FrequencyDataset noisy_a = dataset_from_measure(measure, pts, 0.02, 77);
    const FrequencyDataset noisy_b = dataset_from_measure(measure, pts, 0.02, 77);
    const FrequencyDataset noisy_c = dataset_from_measure(measure, pts, 0.02, 78);
    for (std::size_t k = 0; k < pts.size(); ++k) {
        CHECK(noisy_a.records()[k].d == noisy_b.records()[k].d);  // same seed
        CHECK(noisy_a.records()[k].d != noisy_c.records()[k].d);  // different seed
        const double rel = std::abs(noisy_a.records()[k].d - clean.records()[k].d) /
                           std::abs(clean.records()[k].d);
        CHECK(rel < 0.2);  // multiplicative at the 2% scale
        CHECK(rel > 0.0);
    }
    CHECK(noisy_a.noise_level() == 0.02);
}

TEST_CASE("contrast ratios that land on the segment are rejected with the frequency") {
    const CompositeModel model = CompositeModel::laminate_parallel(0.3);
    const PermittivityModel host = PermittivityModel::constant({1.0, 0.0});
    const PermittivityModel inclusion = PermittivityModel::constant({-1.0, 0.0});
    CHECK_THROWS_AS(generate_dataset(model, host, inclusion, {1.0}, 0.0, 1), DomainError);
}

TEST_CASE("dataset validation re-derives s and rejects cut points") {
    DataRecord bad;
    bad.s = {0.5, 0.0};
    bad.d = {0.1, 0.0};
    CHECK_THROWS_AS(FrequencyDataset({bad}, 0.0), DomainError);

    DataRecord mismatched;
    mismatched.eps1 = std::complex<double>(1.0, 0.0);
    mismatched.eps2 = std::complex<double>(-1.0, 0.5);
    mismatched.s = {0.9, 0.9};  // contradicts the permittivity pair
    mismatched.d = {0.1, 0.0};
    CHECK_THROWS_AS(FrequencyDataset({mismatched}, 0.0), ConfigError);

    DataRecord half;
    half.eps1 = std::complex<double>(1.0, 0.0);
    half.s = {0.9, 0.9};
    half.d = {0.1, 0.0};
    CHECK_THROWS_AS(FrequencyDataset({half}, 0.0), ConfigError);

    DataRecord good;
    good.s = {0.9, 0.9};
    good.d = {0.1, -0.05};
    const FrequencyDataset data({good}, 0.0);
    CHECK(data.distinct_s_count() == 1);
}

} // TEST_SUITE("materials")
