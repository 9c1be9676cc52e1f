#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "stpade/errors.hpp"
#include "stpade/measure.hpp"
#include "stpade/pade.hpp"
#include "stpade/spectral.hpp"
#include "stpade/stieltjes.hpp"

using namespace stpade;

namespace {
const SpectralMeasure& two_atom() {
    static const SpectralMeasure m({{0.25, 0.3}, {0.75, 0.2}});
    return m;
}

PadeApproximant manual_xi(std::vector<double> num, std::vector<double> den) {
    PadeApproximant a;
    a.numerator = std::move(num);
    a.denominator = std::move(den);
    a.L = static_cast<int>(a.numerator.size()) - 1;
    a.M = static_cast<int>(a.denominator.size()) - 1;
    a.variable = PadeVariable::xi_standard;
    return a;
}
} // namespace

TEST_SUITE("spectral") {

TEST_CASE("two-atom partial fractions in the xi variable") {
    // f = 0.3/(1+0.25 xi) + 0.2/(1+0.75 xi): poles -4 and -4/3 with
    // residues 1.2 and 4/15 once written as sum l/(xi - p).
    const PadeApproximant approx = solve_standard_pade(moments(two_atom(), 4), 1, 2);
    const PoleResidueForm form = to_pole_residue(approx);
    REQUIRE(form.pairs.size() == 2);
    CHECK(form.variable == PoleVariable::xi);
    CHECK(form.pairs[0].pole == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(form.pairs[0].residue == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(form.pairs[1].pole == doctest::Approx(-4.0 / 3.0).epsilon(1e-12));
    CHECK(form.pairs[1].residue == doctest::Approx(0.2 / 0.75).epsilon(1e-12));
    CHECK(form.certificate.passed);

    const std::complex<double> xi{0.4, 1.1};
    CHECK(std::abs(form.eval(xi) - eval_f(two_atom(), xi)) < 1e-13);
    CHECK(form.residue_sum() == doctest::Approx(1.2 + 0.2 / 0.75).epsilon(1e-12));
}

TEST_CASE("single-atom partial fraction") {
    const SpectralMeasure one({{0.5, 0.25}});
    const PoleResidueForm form = to_pole_residue(solve_standard_pade(moments(one, 2), 0, 1));
    REQUIRE(form.pairs.size() == 1);
    CHECK(form.pairs[0].pole == doctest::Approx(-2.0).epsilon(1e-13));
    CHECK(form.pairs[0].residue == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("decomposition requires the proper shape") {
    const MomentSequence mu = moments(two_atom(), 4);
    CHECK_THROWS_AS(to_pole_residue(solve_standard_pade(mu, 1, 1)), ConfigError);  // L != M-1
    CHECK_THROWS_AS(to_pole_residue(solve_standard_pade(mu, 2, 0)), ConfigError);  // M = 0
}

TEST_CASE("complex denominator roots are a structural violation") {
    const PadeApproximant bad = manual_xi({1.0, 0.0}, {1.0, 0.0, 1.0});  // roots +-i
    CHECK_THROWS_AS(to_pole_residue(bad), StructureViolationError);
}

TEST_CASE("coincident roots are reported as multiple poles") {
    const PadeApproximant bad = manual_xi({1.0, 0.0}, {1.0, -1.0, 0.25});  // (1 - t/2)^2
    CHECK_THROWS_AS(to_pole_residue(bad), MultiplePoleError);
}

TEST_CASE("range and sign defects go to the certificate, not exceptions") {
    // Root t = -1/2 gives a pole at xi = +1/2 (wrong side) with residue -2.
    const PoleResidueForm form = to_pole_residue(manual_xi({1.0}, {1.0, 2.0}));
    CHECK_FALSE(form.certificate.passed);
    CHECK(form.certificate.violations.size() >= 1);
}

TEST_CASE("degree collapse with a surviving numerator is structural") {
    CHECK_THROWS_AS(to_pole_residue(manual_xi({1.0}, {1.0, 0.0})), StructureViolationError);
}

TEST_CASE("zero numerator yields an empty, certified decomposition") {
    const PoleResidueForm form = to_pole_residue(manual_xi({0.0}, {1.0, -0.5}));
    CHECK(form.pairs.empty());
    CHECK(form.certificate.passed);
}

TEST_CASE("validation rules for each variable") {
    StructureCertificate xi_cert = validate_pole_residue({{-2.0, 0.5}}, PoleVariable::xi);
    CHECK(xi_cert.passed);
    xi_cert = validate_pole_residue({{-0.999999999999, 0.5}}, PoleVariable::xi);
    CHECK_FALSE(xi_cert.passed);  // inside the forbidden band at -1
    xi_cert = validate_pole_residue({{-2.0, -0.5}}, PoleVariable::xi);
    CHECK_FALSE(xi_cert.passed);

    StructureCertificate s_cert =
        validate_pole_residue({{0.25, 0.3}, {0.75, 0.2}}, PoleVariable::s);
    CHECK(s_cert.passed);
    s_cert = validate_pole_residue({{1.0, 0.3}}, PoleVariable::s);  // pole must be < 1
    CHECK_FALSE(s_cert.passed);
    s_cert = validate_pole_residue({{0.25, 0.6}, {0.75, 0.6}}, PoleVariable::s);  // sum >= 1
    CHECK_FALSE(s_cert.passed);
}

TEST_CASE("transform to the s variable recovers positions and weights") {
    const PoleResidueForm xi_form =
        to_pole_residue(solve_standard_pade(moments(two_atom(), 4), 1, 2));
    const NonstandardForm ns = to_nonstandard(xi_form);
    REQUIRE(ns.form_s.pairs.size() == 2);
    CHECK(ns.form_s.pairs[0].pole == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(ns.form_s.pairs[0].residue == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(ns.form_s.pairs[1].pole == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(ns.form_s.pairs[1].residue == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(ns.form_s.variable == PoleVariable::s);
    CHECK(ns.form_s.residue_sum() == doctest::Approx(0.5).epsilon(1e-12));

    CHECK(ns.approximant.variable == PadeVariable::s_nonstandard);
    CHECK(ns.approximant.denominator[1] == 1.0);  // exactly, by construction
    CHECK(ns.prenormalization_linear_coefficient != 0.0);
    CHECK(ns.approximant.series_offset == 1);

    // The polynomial form and the pole/residue form agree with F itself.
    const SPoint s{{1.4, 0.9}};
    const std::complex<double> truth = eval_F(two_atom(), s);
    CHECK(std::abs(ns.form_s.eval(s.value) - truth) < 1e-12);
    CHECK(std::abs(ns.approximant.eval_s(s.value) - truth) < 1e-12);
}

TEST_CASE("transform rejects forms it cannot represent") {
    PoleResidueForm wrong_side;
    wrong_side.variable = PoleVariable::xi;
    wrong_side.pairs = {{-0.5, 1.0}};  // pole right of -1: s = -1/p leaves [0,1)
    CHECK_THROWS_AS(to_nonstandard(wrong_side), StructureViolationError);

    PoleResidueForm s_input;
    s_input.variable = PoleVariable::s;
    s_input.pairs = {{0.5, 0.25}};
    CHECK_THROWS_AS(to_nonstandard(s_input), ConfigError);

    PoleResidueForm empty;
    empty.variable = PoleVariable::xi;
    CHECK_THROWS_AS(to_nonstandard(empty), ConfigError);
}

TEST_CASE("moments of a pole/residue form are geometric sums") {
    PoleResidueForm s_form;
    s_form.variable = PoleVariable::s;
    s_form.pairs = {{0.25, 0.3}, {0.75, 0.2}};
    const MomentSequence mu = moments_from_poles(s_form, 3);
    CHECK(mu[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(mu[1] == doctest::Approx(0.225).epsilon(1e-15));
    CHECK(mu[2] == doctest::Approx(0.13125).epsilon(1e-15));

    PoleResidueForm xi_form;
    xi_form.variable = PoleVariable::xi;
    xi_form.pairs = {{-2.0, 0.5}};
    CHECK_THROWS_AS(moments_from_poles(xi_form, 3), ConfigError);
}

TEST_CASE("moment equivalence and table equivalence decide alike") {
    // The one-atom barycenter shares mu_0 and mu_1 with the two-atom measure
    // but separates at mu_2.
    const SpectralMeasure collapsed({{0.45, 0.5}});
    const MomentSequence mu_a = moments(two_atom(), 4);
    const MomentSequence mu_b = moments(collapsed, 4);
    for (int N = 1; N <= 3; ++N) {
        const bool expected = N <= 2;
        CHECK(sn_equivalent(mu_a, mu_b, N) == expected);
        CHECK(pade_table_equal(mu_a, mu_b, N) == expected);
    }
    CHECK(sn_equivalent(mu_a, mu_a, 4));
    CHECK(pade_table_equal(mu_a, mu_a, 4));
}

TEST_CASE("zero measure is inequivalent to any laminate at the first order") {
    const MomentSequence zero_mu({0.0, 0.0});
    const MomentSequence lam_mu({0.3, 0.0});
    CHECK_FALSE(sn_equivalent(zero_mu, lam_mu, 1));
    CHECK_FALSE(pade_table_equal(zero_mu, lam_mu, 1));
}

TEST_CASE("denominator roots reported as xi poles in increasing order") {
    const PadeApproximant approx = solve_standard_pade(moments(two_atom(), 4), 1, 2);
    const std::vector<double> poles = denominator_poles_xi(approx);
    REQUIRE(poles.size() == 2);
    CHECK(poles[0] == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(poles[1] == doctest::Approx(-4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("consecutive pole sets interlace strictly") {
    const SpectralMeasure three({{0.2, 0.2}, {0.5, 0.3}, {0.8, 0.3}});
    const InterlacingReport r0 = check_pole_interlacing(moments(three, 8), 0, 3);
    CHECK(r0.strict);
    CHECK(r0.violations.empty());
    const InterlacingReport r1 = check_pole_interlacing(moments(three, 9), 1, 3);
    CHECK(r1.strict);

    CHECK_THROWS_AS(check_pole_interlacing(moments(three, 8), -1, 2), ConfigError);
}

} // TEST_SUITE("spectral")
