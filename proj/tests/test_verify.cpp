#include "dcalc/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace dcalc;

TEST_CASE("at least twelve property groups") {
    CHECK(verification_groups().size() >= 12);
}

TEST_CASE("law suite passes") {
    for (const char* group : {"exponential-identity", "difference-law", "product-law", "reciprocity", "pythagorean"}) {
        VerifyOptions options;
        options.group = group;
        const auto results = run_verification(options);
        REQUIRE(results.size() == 1);
        CAPTURE(results[0].detail);
        CHECK(results[0].passed);
    }
}

TEST_CASE("faulty circle plus is caught by the product law") {
    VerifyOptions options;
    options.group = "product-law";
    options.circle_plus = [](Complex p, Complex q) { return p + q; };
    const auto results = run_verification(options);
    REQUIRE(results.size() == 1);
    CHECK_FALSE(results[0].passed);
    CHECK(results[0].name.find("product law") != std::string::npos);
}

TEST_CASE("random problems are well separated") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 20; ++t) {
        const auto p = random_problem(rng);
        CHECK(p.op.order() >= 1);
        CHECK(p.op.order() <= 4);
        CHECK(p.conditions.size() == static_cast<std::size_t>(p.op.order()));
    }
}

TEST_CASE("relative deviation") {
    CHECK(max_relative_deviation({1.0, 10.0}, {1.0, 20.0}) == doctest::Approx(0.5));
    CHECK(max_relative_deviation({0.1}, {0.0}) == doctest::Approx(0.1));
}
