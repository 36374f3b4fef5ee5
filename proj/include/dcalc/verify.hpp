#pragma once

// Property suite behind `dcalc verify`: delta-calculus laws, root and basis
// checks, variation of parameters against the recurrence oracle, published
// table goldens, the free spectrum and the relaxation closed form.

#include "dcalc/problem.hpp"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace dcalc {

struct PropertyResult {
    std::string group;  // key accepted by --group
    std::string name;   // human-readable property name
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    std::optional<std::string> group;
    /// The group operation under test in the product law.
    std::function<Complex(Complex, Complex)> circle_plus;
    std::uint64_t seed = 0x5eed'd1ffULL;
    int vop_problems = 200;
};

/// Keys of all property groups, in execution order.
std::vector<std::string> verification_groups();

/// Runs every group (or only options.group). Throws InvalidArgument for an
/// unknown group key.
std::vector<PropertyResult> run_verification(const VerifyOptions& options = {});

/// A random constant-coefficient problem of order 1..4 with coefficients in
/// [-2, 2], forcing from {0, 1, n, 1/(n+1)} and random initial values. Roots
/// closer than 0.05 to -1 or to each other are rejected and redrawn.
DifferenceProblem random_problem(std::mt19937_64& rng, int order = 0);

/// Pointwise |a - b| <= tolerance * max(1, |b|) over the common range;
/// returns the largest ratio |a - b| / max(1, |b|).
double max_relative_deviation(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace dcalc
