#pragma once

// Brute-force ground truth: expands the delta operator through
//
//   D^N x(n) = sum_{k=0}^{N} (-1)^k C(N, k) x(n + N - k)
//
// into a plain forward recurrence x(n + N) = sum_j a_j x(n + j) + q(n + offset)
// and steps it, in doubles or exactly in rationals.

#include "dcalc/problem.hpp"
#include "dcalc/rational.hpp"

#include <optional>
#include <vector>

namespace dcalc {

enum class OracleMode { floating, exact };

struct ExpandedRecurrence {
    int horizon = 0;
    std::vector<Rational> taps;  // a_0..a_{N-1}, exact
    RealSequence forcing;
    long forcing_offset = 0;
    /// Optional varying term added to the last tap at n + forcing_offset
    /// (the potential of -D^2 x(n-1) + V x = lambda x).
    std::optional<RealSequence> potential;
    ShiftConvention shift = ShiftConvention::unshifted;

    std::vector<double> taps_as_double() const;
};

/// Throws UnsupportedShift for operators the expansion does not cover.
ExpandedRecurrence expand(const DifferenceProblem& problem);
ExpandedRecurrence expand(const DeltaOperator& op, const RealSequence& forcing);

/// x(n+1) = (2 - lambda + V(n)) x(n) - x(n-1), the expansion of
/// -D^2 x(n-1) + V(n) x(n) = lambda x(n).
ExpandedRecurrence expand_schrodinger(double lambda, const RealSequence& potential);

/// r_0..r_{N-1} recovered from the taps (unshifted recurrences only).
std::vector<Rational> collapse(const ExpandedRecurrence& rec);

struct OracleRun {
    GridSolution solution;
    std::vector<Rational> exact;  // filled in exact mode
};

/// Steps from `seeds` = x(0..N-1) to n_max. Throws OutOfDomain if the
/// forcing or potential cannot be evaluated.
OracleRun run(const ExpandedRecurrence& rec, const std::vector<double>& seeds, long n_max,
              OracleMode mode = OracleMode::floating);
OracleRun run_exact(const ExpandedRecurrence& rec, const std::vector<Rational>& seeds, long n_max);

/// max_n |x(n+N) - predicted| / max(1, |x(n+N)|).
double residual(const ExpandedRecurrence& rec, const GridSolution& candidate);

/// |x(n) - predicted(n)| for n >= N from the candidate's own previous values;
/// rows below the horizon compare against `seeds`.
std::vector<double> pointwise_residual(const ExpandedRecurrence& rec, const GridSolution& candidate,
                                       const std::vector<double>& seeds);

/// Initial values x(0..N-1) implied by the problem's point conditions.
/// Throws InvalidArgument unless the conditions are exactly x(0..N-1).
std::vector<double> seeds_from_conditions(const DifferenceProblem& problem);

}  // namespace dcalc
