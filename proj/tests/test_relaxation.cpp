#include "dcalc/relaxation.hpp"
#include "dcalc/errors.hpp"
#include "dcalc/vop_engine.hpp"

#include <doctest.h>

#include <cmath>

using namespace dcalc;

TEST_CASE("relaxation basis values") {
    const auto basis = relaxation_basis(0.5);
    CHECK(basis.value(0, 2).real() == doctest::Approx(0.25));
    CHECK(basis.value(2, 2).real() == doctest::Approx(0.75));
    for (double s : {0.3, 0.5, 0.9}) {
        const auto b = relaxation_basis(s);
        CHECK(b.value(0, 0).real() == doctest::Approx(1.0));
        CHECK(b.value(1, 0).real() == doctest::Approx(1.0));
        CHECK(b.value(2, 0).real() == doctest::Approx(1.0));
        CHECK(std::abs(b.value(3, 0)) < 1e-15);
    }
    CHECK_THROWS_AS(relaxation_basis(1.0), NonRegressiveRoot);
}

TEST_CASE("parameter sums vanish without forcing") {
    const auto spec = RelaxationSpec::make(0.0625, RealSequence::constant(0.0), 13);
    for (long n : {0L, 5L, 13L}) {
        for (auto v : parameter_sums(spec, n)) CHECK(std::abs(v) == 0.0);
    }
}

TEST_CASE("parameter terms at n = 0 with unit forcing") {
    const auto spec = RelaxationSpec::make(0.0625, RealSequence::constant(1.0), 13);
    const auto terms = parameter_terms(spec, 0);
    CHECK(terms[0].real() == doctest::Approx(-4.0));
    CHECK(terms[1].real() == doctest::Approx(4.0 / 3.0));
    CHECK(terms[2].real() == doctest::Approx(1.6));
    CHECK(terms[3].real() == doctest::Approx(-3.2));
    const auto sums = parameter_sums(spec, 0);
    for (int j = 0; j < 4; ++j) CHECK(std::abs(sums[j] - terms[j]) == 0.0);
}

TEST_CASE("printed summands equal the Cramer increments") {
    const auto spec = RelaxationSpec::make(0.1296, RealSequence::parse("1/sqrt(n+1)"), 13);
    const auto basis = relaxation_basis(spec.s);
    for (long i = 0; i < 10; ++i) {
        const auto printed = parameter_terms(spec, i);
        const auto cramer = parameter_deltas(casoratian_system(basis, i), spec.q, i);
        for (int j = 0; j < 4; ++j) CHECK(std::abs(printed[j] - cramer[j]) <= 1e-9 * std::max(1.0, std::abs(cramer[j])));
    }
}

TEST_CASE("closed form meets the initial values and the equation") {
    const auto spec = RelaxationSpec::make(0.0625, RealSequence::parse("1/(n+1)"), 20);
    const auto solved = closed_form(spec);
    for (long n = 0; n < 4; ++n) CHECK(solved.solution[n] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(solved.solution[4] == doctest::Approx(2.0625).epsilon(1e-12));
    CHECK(solved.solution.relative_residual <= 1e-8);
}

TEST_CASE("printed closed form fails the equation once forced") {
    const auto spec = RelaxationSpec::make(0.0625, RealSequence::parse("1/(n+1)"), 13);
    CHECK(std::abs(published_closed_form(spec, 4) - 2.0625) > 0.1);
    CHECK_FALSE(closed_form(spec).published_form_used);
}

TEST_CASE("homogeneous closed form agrees with the oracle") {
    const auto spec = RelaxationSpec::make(0.1296, RealSequence::constant(0.0), 20);
    const auto solved = closed_form(spec);
    const auto oracle = relaxation_oracle(spec, OracleMode::exact);
    for (long n = 0; n <= 20; ++n) {
        CHECK(std::abs(solved.solution[n] - oracle.solution[n]) <= 1e-9 * std::max(1.0, std::abs(oracle.solution[n])));
    }
}

TEST_CASE("comparison report columns") {
    const auto spec = RelaxationSpec::make(0.0625, RealSequence::parse("1/(n+1)"), 13);
    std::vector<double> printed(14, 1.0);
    const auto report = table_compare(spec, printed);
    REQUIRE(report.rows.size() == 14);
    CHECK(report.rows[4].oracle == 2.0625);
    REQUIRE(report.rows[4].published.has_value());
    CHECK(*report.rows[4].abs_dev_oracle_published == doctest::Approx(1.0625));
    CHECK(report.rows[4].abs_dev_closed_oracle < 1e-10);
    const auto bare = table_compare(spec);
    CHECK_FALSE(bare.rows[0].published.has_value());
}

TEST_CASE("invalid relaxation parameters") {
    CHECK_THROWS_AS(RelaxationSpec::make(-1.0, RealSequence::constant(0.0), 13), InvalidArgument);
    CHECK_THROWS_AS(RelaxationSpec::make(1.0, RealSequence::constant(0.0), 13), InvalidArgument);
}
