#include "dcalc/delta_calculus.hpp"
#include "dcalc/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace dcalc;

TEST_CASE("delta of simple sequences") {
    CHECK(std::abs(delta(Sequence::constant(3.0), 11)) == doctest::Approx(0.0));
    CHECK(delta(Sequence([](long n) { return Complex(static_cast<double>(n)); }), 5).real() == doctest::Approx(1.0));
    const Sequence tri([](long n) { return Complex(n * (n - 1) / 2.0); });
    CHECK(delta(tri, 3).real() == doctest::Approx(3.0));
    CHECK(delta_power(tri, 3, 2).real() == doctest::Approx(1.0));
}

TEST_CASE("delta exponential values") {
    CHECK(delta_exp(Complex(0.0), 7, 0).real() == doctest::Approx(1.0));
    CHECK(delta_exp(Complex(1.0), 5, 0).real() == doctest::Approx(32.0));
    CHECK(delta_exp(Complex(1.0), 0, 3).real() == doctest::Approx(0.125));
    const RegressiveSequence ramp(Sequence([](long t) { return Complex(static_cast<double>(t)); }), 1);
    CHECK(delta_exp(ramp, 4, 1).real() == doctest::Approx(24.0));
}

TEST_CASE("delta exponential rejects p = -1") {
    CHECK_THROWS_AS(delta_exp(Complex(-1.0), 3, 0), NonRegressive);
}

TEST_CASE("circle plus") {
    CHECK(circle_plus(2.0, 3.0).real() == doctest::Approx(11.0));
    const Complex p(0.3, -0.7);
    CHECK(std::abs(circle_plus(p, 0.0) - p) < 1e-15);
    const Complex i(0.0, 1.0);
    CHECK(std::abs(circle_plus(i, -i) - Complex(1.0)) < 1e-15);
}

TEST_CASE("delta cos and sin") {
    CHECK(delta_cos(1.0, 0, 0).real() == doctest::Approx(1.0));
    CHECK(std::abs(delta_sin(1.0, 0, 0)) < 1e-15);
    CHECK(std::abs(delta_cos(1.0, 2, 0)) < 1e-15);
    CHECK(delta_sin(1.0, 2, 0).real() == doctest::Approx(2.0));
    const double theta = std::numbers::pi / 3.0;
    const Complex bridged = delta_exp(Complex(std::cos(theta) - 1.0), 3, 0) * delta_sin(std::tan(theta), 3, 0);
    CHECK(std::abs(bridged) < 1e-12);
}

TEST_CASE("delta integral over half-open ranges") {
    const Sequence id([](long n) { return Complex(static_cast<double>(n)); });
    CHECK(delta_integral(id, 0, 4).real() == doctest::Approx(6.0));
    CHECK(std::abs(delta_integral(id, 5, 5)) == 0.0);
    CHECK(delta_integral(Sequence::constant(1.0), 0, 10).real() == doctest::Approx(10.0));
}

TEST_CASE("real extraction guard") {
    CHECK(real_part_checked(Complex(2.0, 1e-14)) == doctest::Approx(2.0));
    CHECK_THROWS_AS(real_part_checked(Complex(2.0, 0.1)), ImaginaryResidue);
}
