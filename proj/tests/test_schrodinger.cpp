#include "dcalc/schrodinger.hpp"
#include "dcalc/errors.hpp"
#include "dcalc/published_tables.hpp"
#include "dcalc/vop_engine.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace dcalc;

namespace {

SchrodingerSpec spec_for(PotentialKind kind, double lambda, long b = 25) {
    SchrodingerSpec spec;
    spec.kind = kind;
    spec.lambda = lambda;
    spec.b = b;
    return spec;
}

SchrodingerSpec free_spec(long b) {
    auto spec = spec_for(PotentialKind::custom, 1.0, b);
    spec.q = RealSequence::constant(0.0);
    return spec;
}

}  // namespace

TEST_CASE("lambda classification") {
    const auto one = classify_lambda(1.0);
    REQUIRE(one.oscillatory());
    CHECK(*one.theta == doctest::Approx(std::numbers::pi / 3.0));
    CHECK(*classify_lambda(2.0 - std::sqrt(2.0)).theta == doctest::Approx(std::numbers::pi / 4.0));
    CHECK(classify_lambda(0.0).tag == LambdaClass::Tag::zero);
    CHECK(classify_lambda(4.0).tag == LambdaClass::Tag::four);
    CHECK(classify_lambda(5.0).tag == LambdaClass::Tag::outside);
    CHECK(classify_lambda(-0.5).tag == LambdaClass::Tag::outside);
}

TEST_CASE("effective potentials") {
    CHECK(effective_potential(spec_for(PotentialKind::hydrogen, 1.0), 1) == doctest::Approx(2.0));
    CHECK(effective_potential(spec_for(PotentialKind::coulomb, 1.0), 1) == doctest::Approx(5.0));
    auto bare = spec_for(PotentialKind::coulomb, 1.0);
    bare.l = 0;
    bare.q = RealSequence::constant(0.0);
    CHECK(effective_potential(bare, 2) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(effective_potential(bare, 0), OutOfDomain);
}

TEST_CASE("hydrogen sum representation at lambda = 1") {
    const auto x = sum_representation_solve(spec_for(PotentialKind::hydrogen, 1.0));
    CHECK(x[0] == 0.0);
    CHECK(x[1] == doctest::Approx(0.866025).epsilon(1e-5));
    CHECK(x[2] == doctest::Approx(2.59808).epsilon(1e-5));
    CHECK(x[3] == doctest::Approx(4.86821).epsilon(1e-5));
    CHECK(x[4] == doctest::Approx(6.70353).epsilon(1e-5));
    CHECK(x.relative_residual < 1e-9);
}

TEST_CASE("Coulomb sum representation at lambda = 1") {
    const auto x = sum_representation_solve(spec_for(PotentialKind::coulomb, 1.0));
    CHECK(x[2] == doctest::Approx(5.19615).epsilon(1e-5));
    CHECK(x[3] == doctest::Approx(10.6024).epsilon(1e-5));
}

TEST_CASE("hydrogen at lambda = 2 - sqrt 2") {
    const auto x = sum_representation_solve(spec_for(PotentialKind::hydrogen, 2.0 - std::sqrt(2.0)));
    CHECK(x[1] == doctest::Approx(0.707107).epsilon(1e-5));
    CHECK(x[2] == doctest::Approx(2.41421).epsilon(1e-5));
}

TEST_CASE("tabulated hydrogen column at lambda = 1") {
    const auto x = sum_representation_solve(spec_for(PotentialKind::hydrogen, 1.0));
    const auto& column = published::kHydrogenLambda1;
    for (std::size_t i = 0; i < column.rows.size(); ++i) {
        CAPTURE(column.rows[i]);
        CHECK(std::abs(x[column.rows[i]] - column.values[i]) <= 1e-4 * std::max(1.0, std::abs(column.values[i])));
    }
}

TEST_CASE("non-oscillatory lambda is rejected") {
    CHECK_THROWS_AS(sum_representation_solve(spec_for(PotentialKind::hydrogen, 4.5)), NotOscillatory);
    CHECK_THROWS_AS(sum_representation_solve(spec_for(PotentialKind::hydrogen, 0.0)), NotOscillatory);
}

TEST_CASE("free potential reduces to sin n theta") {
    auto spec = free_spec(64);
    spec.lambda = 0.7;
    const auto x = sum_representation_solve(spec);
    const double theta = *classify_lambda(0.7).theta;
    for (long n = 0; n <= 64; ++n) CHECK(std::abs(x[n] - std::sin(n * theta)) < 1e-12);
}

TEST_CASE("hydrogen Casoratian") {
    for (double lambda : {0.5, 1.0, 3.5}) {
        const auto basis = hydrogen_basis(lambda);
        const Complex expected = hydrogen_casoratian(lambda);
        CHECK(std::abs(expected + std::sqrt(Complex(lambda * (lambda - 4.0)))) < 1e-15);
        for (long n = 0; n < 10; ++n) CHECK(std::abs(casoratian(basis, n) - expected) < 1e-10 * std::abs(expected));
    }
}

TEST_CASE("free spectrum scans") {
    const auto four = eigenvalue_scan(free_spec(4));
    REQUIRE(four.size() == 3);
    for (int k = 1; k <= 3; ++k) {
        CHECK(four[k - 1].lambda == doctest::Approx(2.0 - 2.0 * std::cos(k * std::numbers::pi / 4.0)).epsilon(1e-12));
    }
    const auto three = eigenvalue_scan(free_spec(3));
    // sin 3 theta vanishes at theta = pi/3 and 2 pi/3 only
    REQUIRE(three.size() == 2);
    CHECK(three[0].lambda == doctest::Approx(1.0));
    CHECK(three[1].lambda == doctest::Approx(3.0));
    const auto two = eigenvalue_scan(free_spec(2));
    REQUIRE(two.size() == 1);
    CHECK(two[0].lambda == doctest::Approx(2.0));
}

TEST_CASE("scan range limits the result") {
    ScanOptions options;
    options.lambda_min = 1.5;
    options.lambda_max = 2.5;
    const auto found = eigenvalue_scan(free_spec(4), options);
    REQUIRE(found.size() == 1);
    CHECK(found[0].lambda == doctest::Approx(2.0));
}
