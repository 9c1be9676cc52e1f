#include <doctest.h>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "stpade/errors.hpp"
#include "stpade/inverse.hpp"
#include "stpade/materials.hpp"
#include "stpade/measure.hpp"
#include "stpade/stieltjes.hpp"

using namespace stpade;

namespace {

std::vector<std::complex<double>> line_points(int count) {
    std::vector<std::complex<double>> pts;
    for (int k = 0; k < count; ++k)
        pts.push_back({-0.5 + 0.35 * k, 0.5});
    return pts;
}

} // namespace

TEST_SUITE("inverse") {

TEST_CASE("a single pole is recovered from noiseless data") {
    const SpectralMeasure one({{0.5, 0.25}});
    const FrequencyDataset data = dataset_from_measure(one, line_points(8), 0.0, 3);
    ReconstructionConfig config;
    config.M = 1;
    config.seed = 11;
    const ReconstructionResult result = reconstruct(data, config);
    CHECK(result.status == ReconstructionStatus::converged);
    REQUIRE(result.form.pairs.size() == 1);
    CHECK(result.form.pairs[0].pole == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(result.form.pairs[0].residue == doctest::Approx(0.25).epsilon(1e-6));
    CHECK(result.relative_residual < 1e-8);
    CHECK(result.certificate.feasible);
    CHECK(result.form.certificate.passed);
    REQUIRE(result.moments.size() == 3);
    CHECK(result.moments[0] == doctest::Approx(0.25).epsilon(1e-6));
    CHECK(result.moments[1] == doctest::Approx(0.125).epsilon(1e-6));
    CHECK(result.moments[2] == doctest::Approx(0.0625).epsilon(1e-6));
    CHECK(result.per_point_residuals.size() == 8);
}

TEST_CASE("noiseless atomic data is identifiable up to four poles") {
    const double pi = 3.14159265358979323846;
    const std::vector<std::vector<Atom>> truths = {
        {{0.25, 0.3}, {0.75, 0.2}},
        {{0.2, 0.25}, {0.5, 0.2}, {0.8, 0.15}},
        {{0.15, 0.2}, {0.4, 0.15}, {0.65, 0.18}, {0.85, 0.12}},
    };
    for (const auto& atoms : truths) {
        const int n = static_cast<int>(atoms.size());
        CAPTURE(n);
        const SpectralMeasure measure(atoms);
        std::vector<std::complex<double>> pts;
        const int count = 4 * n + 2;
        for (int k = 0; k < count; ++k) {
            const double theta = pi * (k + 0.5) / count;
            pts.push_back(std::complex<double>(0.5, 0.0) +
                          std::complex<double>(std::cos(theta), std::sin(theta)));
        }
        const FrequencyDataset data = dataset_from_measure(measure, pts, 0.0, 17);
        ReconstructionConfig config;
        config.M = n;
        config.seed = 100 + n;
        const ReconstructionResult result = reconstruct(data, config);
        CHECK(result.relative_residual < 1e-8);
        CHECK(result.certificate.feasible);
        CHECK(result.form.certificate.passed);
        REQUIRE(result.form.pairs.size() == atoms.size());
        double sum = 0.0;
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            CHECK(std::abs(result.form.pairs[i].pole - atoms[i].position) < 1e-5);
            CHECK(std::abs(result.form.pairs[i].residue - atoms[i].weight) < 1e-5);
            sum += result.form.pairs[i].residue;
        }
        CHECK(std::abs(sum - moment(measure, 0)) < 1e-4);
    }
}

TEST_CASE("identical configuration gives bitwise identical results") {
    const SpectralMeasure two({{0.25, 0.3}, {0.75, 0.2}});
    const FrequencyDataset data = dataset_from_measure(two, line_points(10), 0.0, 5);
    ReconstructionConfig config;
    config.M = 2;
    config.seed = 42;
    const ReconstructionResult a = reconstruct(data, config);
    const ReconstructionResult b = reconstruct(data, config);
    REQUIRE(a.form.pairs.size() == b.form.pairs.size());
    for (std::size_t i = 0; i < a.form.pairs.size(); ++i) {
        CHECK(a.form.pairs[i].pole == b.form.pairs[i].pole);
        CHECK(a.form.pairs[i].residue == b.form.pairs[i].residue);
    }
    CHECK(a.residual == b.residual);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("zero data short-circuits to the no-contrast status") {
    std::vector<DataRecord> records;
    for (int k = 0; k < 6; ++k) {
        DataRecord rec;
        rec.s = {0.2 * k - 0.4, 0.8};
        rec.d = {0.0, 0.0};
        records.push_back(rec);
    }
    ReconstructionConfig config;
    config.M = 2;
    const ReconstructionResult result =
        reconstruct(FrequencyDataset(std::move(records), 0.0), config);
    CHECK(result.status == ReconstructionStatus::no_contrast);
    CHECK(result.form.pairs.empty());
    for (std::size_t m = 0; m < result.moments.size(); ++m)
        CHECK(result.moments[m] == 0.0);
}

TEST_CASE("order too large for the record count is a configuration error") {
    const SpectralMeasure one({{0.5, 0.25}});
    const FrequencyDataset data = dataset_from_measure(one, line_points(4), 0.0, 3);
    ReconstructionConfig config;
    config.M = 3;  // needs 6 records
    bool thrown = false;
    try {
        reconstruct(data, config);
    } catch (const ConfigError& e) {
        thrown = true;
        CHECK(std::string(e.what()).find("p+q+1 <= N") != std::string::npos);
    }
    CHECK(thrown);
}

TEST_CASE("noisy data ends in best effort when the tolerance is unreachable") {
    const SpectralMeasure two({{0.25, 0.3}, {0.75, 0.2}});
    const FrequencyDataset data = dataset_from_measure(two, line_points(10), 0.05, 7);
    ReconstructionConfig config;
    config.M = 2;
    config.seed = 9;
    const ReconstructionResult result = reconstruct(data, config);
    CHECK(result.status == ReconstructionStatus::best_effort);
    CHECK(result.relative_residual > 1e-8);
    CHECK(result.certificate.feasible);  // projection keeps iterates in the box
}

TEST_CASE("model selection finds the elbow at the true order") {
    const double pi = 3.14159265358979323846;
    const SpectralMeasure two({{0.25, 0.3}, {0.75, 0.2}});
    std::vector<std::complex<double>> pts;
    for (int k = 0; k < 12; ++k) {
        const double theta = pi * (k + 0.5) / 12.0;
        pts.push_back(std::complex<double>(0.5, 0.0) +
                      0.9 * std::complex<double>(std::cos(theta), std::sin(theta)));
    }
    const FrequencyDataset data = dataset_from_measure(two, pts, 0.0, 21);
    ReconstructionConfig base;
    base.seed = 5;
    const ModelSelection selection = model_select(data, 4, base);
    REQUIRE(selection.results.size() == 4);
    CHECK(selection.selected_M == 2);
    CHECK(selection.warnings.empty());
}

TEST_CASE("model selection truncates orders the dataset cannot support") {
    const SpectralMeasure one({{0.5, 0.25}});
    const FrequencyDataset data = dataset_from_measure(one, line_points(7), 0.0, 3);
    const ModelSelection selection = model_select(data, 5);
    CHECK(selection.results.size() == 3);  // floor(7/2)
    REQUIRE(selection.warnings.size() == 1);
    CHECK(selection.warnings[0].find("truncated") != std::string::npos);
}

TEST_CASE("configuration validation") {
    const SpectralMeasure one({{0.5, 0.25}});
    const FrequencyDataset data = dataset_from_measure(one, line_points(6), 0.0, 3);
    ReconstructionConfig config;
    config.M = 0;
    CHECK_THROWS_AS(reconstruct(data, config), ConfigError);
    config.M = 1;
    config.tolerance = 0.0;
    CHECK_THROWS_AS(reconstruct(data, config), ConfigError);
    config.tolerance = 1e-10;
    config.multistart_count = 0;
    CHECK_THROWS_AS(reconstruct(data, config), ConfigError);
    CHECK_THROWS_AS(reconstruct(FrequencyDataset(), ReconstructionConfig{}), ConfigError);
    CHECK_THROWS_AS(model_select(data, 0), ConfigError);
}

} // TEST_SUITE("inverse")
