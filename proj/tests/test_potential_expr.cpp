#include "dcalc/potential_expr.hpp"
#include "dcalc/errors.hpp"
#include "dcalc/sequence.hpp"

#include <doctest.h>

#include <cmath>

using namespace dcalc;

TEST_CASE("evaluation") {
    CHECK(PotentialExpr::parse("1/sqrt(n)")(4) == doctest::Approx(0.5));
    CHECK(PotentialExpr::parse("2/n - 6/n^2")(1) == doctest::Approx(-4.0));
    CHECK(PotentialExpr::parse("1/(n+1)")(0) == doctest::Approx(1.0));
    CHECK(PotentialExpr::parse("1/sqrt(n+1)")(3) == doctest::Approx(0.5));
    CHECK(PotentialExpr::parse("exp(0) + log(1) + cos(0) + sin(0)")(7) == doctest::Approx(2.0));
}

TEST_CASE("syntax errors carry the offset") {
    try {
        PotentialExpr::parse("1/(");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.offset() == 3);
    }
    CHECK_THROWS_AS(PotentialExpr::parse("2 +* n"), SyntaxError);
    CHECK_THROWS_AS(PotentialExpr::parse("foo(n)"), SyntaxError);
    CHECK_THROWS_AS(PotentialExpr::parse("n)"), SyntaxError);
}

TEST_CASE("evaluation errors") {
    CHECK_THROWS_AS(PotentialExpr::parse("1/sqrt(n)")(0), EvalError);
    CHECK_THROWS_AS(PotentialExpr::parse("sqrt(n - 5)")(1), EvalError);
    CHECK_THROWS_AS(PotentialExpr::parse("log(n)")(0), EvalError);
}

TEST_CASE("precedence") {
    CHECK(PotentialExpr::parse("2+3*4")(0) == 14.0);
    CHECK(PotentialExpr::parse("2^3^2")(0) == 512.0);
    CHECK(PotentialExpr::parse("-n^2")(3) == -9.0);
    CHECK(PotentialExpr::parse("(2+3)*4")(0) == 20.0);
    CHECK(PotentialExpr::parse("8/4/2")(0) == 1.0);
}

TEST_CASE("exact evaluation of rational expressions") {
    const auto exact = PotentialExpr::parse("1/(n+1) - n^2/3").evaluate_exact(2);
    REQUIRE(exact.has_value());
    CHECK(*exact == Rational(1, 3) - Rational(4, 3));
    CHECK_FALSE(PotentialExpr::parse("1/sqrt(n)").evaluate_exact(4).has_value());
}

TEST_CASE("printing round-trips") {
    const char* sources[] = {"1/sqrt(n)", "2/n - 6/n^2", "1/(n+1)", "-n^2", "(-n)^2", "2^3^2", "(2^3)^2",
                             "1 - (2 - n)", "1 - 2 - n", "n/(2*n)", "n/2*n", "-(n + 1)", "exp(-n/4)*cos(n)",
                             "3.25e-2*n", "sqrt(n)*log(n + 1)/sin(n + 0.5)"};
    for (const char* text : sources) {
        CAPTURE(text);
        const auto expr = PotentialExpr::parse(text);
        const auto again = PotentialExpr::parse(expr.to_string());
        CHECK(again == expr);
        CHECK(again.to_string() == expr.to_string());
        for (long n = 1; n < 5; ++n) CHECK(again(n) == expr(n));
    }
}

TEST_CASE("sequences built from expressions") {
    const auto q = RealSequence::parse("1/(n+1)");
    CHECK(q(3) == 0.25);
    CHECK(q.exact(3) == Rational(1, 4));
    CHECK(q.shifted(1)(3) == 0.2);
    CHECK((q + RealSequence::constant(1.0))(0) == 2.0);
}
