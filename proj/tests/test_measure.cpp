#include <doctest.h>

#include <cmath>

#include "stpade/errors.hpp"
#include "stpade/measure.hpp"
#include "stpade/moment_sequence.hpp"

using namespace stpade;

TEST_SUITE("measure") {

TEST_CASE("checkerboard moments match the closed-form beta integrals") {
    // (1/pi) * int_0^1 z^m sqrt((1-z)/z) dz, rational for every m.
    const SpectralMeasure cb(ContinuousDensity::checkerboard());
    const double expected[6] = {0.5,         0.125,       0.0625,
                                5.0 / 128.0, 7.0 / 256.0, 21.0 / 1024.0};
    const MomentSequence mu = moments(cb, 6);
    for (std::size_t m = 0; m < 6; ++m) CHECK(std::abs(mu[m] - expected[m]) < 1e-10);
}

TEST_CASE("atomic moments are exact power sums") {
    const SpectralMeasure measure({{0.25, 0.3}, {0.75, 0.2}});
    const MomentSequence mu = moments(measure, 3);
    CHECK(mu[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mu[1] == doctest::Approx(0.225).epsilon(1e-15));
    CHECK(mu[2] == doctest::Approx(0.13125).epsilon(1e-15));
}

TEST_CASE("an atom at z = 0 contributes only to the zeroth moment") {
    const SpectralMeasure measure({{0.0, 0.3}});
    const MomentSequence mu = moments(measure, 4);
    CHECK(mu[0] == 0.3);
    CHECK(mu[1] == 0.0);
    CHECK(mu[2] == 0.0);
    CHECK(mu[3] == 0.0);
}

TEST_CASE("moments of any positive measure on [0,1] are non-increasing") {
    const SpectralMeasure measure({{0.1, 0.2}, {0.6, 0.3}, {0.95, 0.4}});
    const MomentSequence mu = moments(measure, 10);
    for (std::size_t m = 1; m < mu.size(); ++m) CHECK(mu[m] <= mu[m - 1] + 1e-15);
    CHECK(mu.hankel_consistent());
}

TEST_CASE("atoms are sorted and validated at construction") {
    const SpectralMeasure measure({{0.75, 0.2}, {0.25, 0.3}});
    CHECK(measure.atoms()[0].position == 0.25);
    CHECK(measure.atoms()[1].position == 0.75);
    CHECK(measure.total_mass() == 0.5);
    CHECK_FALSE(measure.mass_exceeds_unity());

    CHECK_THROWS_AS(SpectralMeasure({{1.5, 0.2}}), ConfigError);
    CHECK_THROWS_AS(SpectralMeasure({{-0.1, 0.2}}), ConfigError);
    CHECK_THROWS_AS(SpectralMeasure({{0.5, 0.0}}), ConfigError);
    CHECK_THROWS_AS(SpectralMeasure({{0.5, -0.2}}), ConfigError);
    CHECK_THROWS_AS(SpectralMeasure({{0.5, 0.1}, {0.5 + 1e-13, 0.1}}), ConfigError);
}

TEST_CASE("total mass at or above one is flagged but not rejected") {
    const SpectralMeasure measure({{0.2, 0.6}, {0.8, 0.7}});
    CHECK(measure.mass_exceeds_unity());
    CHECK(measure.total_mass() == doctest::Approx(1.3));
}

TEST_CASE("zero measure") {
    const SpectralMeasure zero;
    CHECK(zero.is_zero());
    CHECK(zero.total_mass() == 0.0);
    const MomentSequence mu = moments(zero, 3);
    for (std::size_t m = 0; m < 3; ++m) CHECK(mu[m] == 0.0);
}

TEST_CASE("table density integrates piecewise-linearly") {
    const SpectralMeasure flat(ContinuousDensity::table({0.0, 1.0}, {0.5, 0.5}));
    CHECK(moment(flat, 0) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(moment(flat, 1) == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(moment(flat, 2) == doctest::Approx(0.5 / 3.0).epsilon(1e-10));

    CHECK_THROWS_AS(ContinuousDensity::table({0.0}, {1.0}), ConfigError);
    CHECK_THROWS_AS(ContinuousDensity::table({0.0, 1.5}, {1.0, 1.0}), ConfigError);
    CHECK_THROWS_AS(ContinuousDensity::table({0.5, 0.25}, {1.0, 1.0}), ConfigError);
    CHECK_THROWS_AS(ContinuousDensity::table({0.0, 1.0}, {1.0, -1.0}), ConfigError);
}

TEST_CASE("custom density with an inverse-square-root endpoint") {
    const auto density = ContinuousDensity::custom(
        [](double z) { return 0.25 / std::sqrt(z); }, QuadratureHint::inverse_sqrt_at_zero);
    const SpectralMeasure measure(density);
    CHECK(moment(measure, 0) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(moment(measure, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
}

TEST_CASE("value count classification") {
    CHECK(value_count_class(SpectralMeasure()).cls == ValueCountClass::zero);
    const SpectralMeasure atoms({{0.25, 0.3}, {0.75, 0.2}});
    const ValueCount finite = value_count_class(atoms);
    CHECK(finite.cls == ValueCountClass::finite);
    CHECK(finite.atom_count == 2);
    CHECK(value_count_class(SpectralMeasure(ContinuousDensity::checkerboard())).cls ==
          ValueCountClass::infinite);
}

TEST_CASE("moment sequence validation and access") {
    CHECK_THROWS_AS(MomentSequence({0.5, 0.6}), ConfigError);   // increasing
    CHECK_THROWS_AS(MomentSequence({0.5, -0.1}), ConfigError);  // negative
    const MomentSequence mu({0.5, 0.225, 0.13125});
    CHECK(mu.at_or_zero(-1) == 0.0);
    CHECK(mu.at_or_zero(3) == 0.0);
    CHECK(mu.at_or_zero(1) == 0.225);
    CHECK(mu.truncated(2).size() == 2);
    CHECK_THROWS_AS(mu.truncated(4), InsufficientDataError);
}

TEST_CASE("hankel consistency rejects a non-increasing but indefinite sequence") {
    const MomentSequence bad({0.5, 0.4, 0.1});  // 2x2 block has negative determinant
    CHECK_FALSE(bad.hankel_consistent());
    const SpectralMeasure measure({{0.25, 0.3}, {0.75, 0.2}});
    CHECK(moments(measure, 7).hankel_consistent());
}

TEST_CASE("degenerate requests are rejected") {
    const SpectralMeasure measure({{0.5, 0.25}});
    CHECK_THROWS_AS(moment(measure, -1), ConfigError);
    CHECK_THROWS_AS(moments(measure, 0), ConfigError);
}

} // TEST_SUITE("measure")
