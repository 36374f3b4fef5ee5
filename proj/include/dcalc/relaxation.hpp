#pragma once

// Fourth-order relaxation problem
//
//   D^4 x(n) - lambda x(n) = q(n),   x(0) = x(1) = x(2) = x(3) = 1,
//
// with lambda = s^4. The characteristic roots are +-s, +-is, giving the basis
// (1 - s)^n, (1 + s)^n, ((1 + is)^n + (1 - is)^n) / 2, ((1 + is)^n - (1 - is)^n) / (2i).
//
// Two closed forms are provided. The published one (constants c_1..c_4 and
// parameter sums up to i = n, as printed) meets the initial values but not the
// equation once q != 0. The assembled one keeps the published summands (they
// equal the Cramer increments exactly), sums them over i < n, and fits the
// constants to the initial values. closed_form() uses the published form only
// when it passes the equation check.

#include "dcalc/characteristic_basis.hpp"
#include "dcalc/problem.hpp"
#include "dcalc/recurrence_oracle.hpp"

#include <array>
#include <optional>
#include <vector>

namespace dcalc {

struct RelaxationSpec {
    double lambda = 0.0;
    double s = 0.0;  // lambda^(1/4)
    RealSequence q;
    long n_max = 13;

    /// Throws InvalidArgument unless lambda > 0 and s != 1.
    static RelaxationSpec make(double lambda, RealSequence q, long n_max);

    DeltaOperator op() const { return DeltaOperator({-lambda, 0.0, 0.0, 0.0}); }
    DifferenceProblem problem() const;
};

/// The four basis functions in the order above. Throws NonRegressiveRoot for s = 1.
SolutionBasis relaxation_basis(double s);

/// Published summands of v_1..v_4 at index i (the Cramer increments D v_j(i)).
std::array<Complex, 4> parameter_terms(const RelaxationSpec& spec, long i);

/// v_1..v_4 as printed: sum_{i=0}^{n} of parameter_terms.
std::array<Complex, 4> parameter_sums(const RelaxationSpec& spec, long n);

/// Published c_1..c_4.
std::array<double, 4> published_constants(const RelaxationSpec& spec);

/// The published closed form at n, verbatim. Throws ClosedFormDivergence if
/// the imaginary part exceeds the real-extraction guard.
double published_closed_form(const RelaxationSpec& spec, long n);

struct RelaxationSolution {
    GridSolution solution;               // x(0..n_max) with the equation residual
    std::array<Complex, 4> constants{};  // coefficients of the basis
    bool published_form_used = false;
    double published_relative_residual = 0.0;
};

/// Closed-form solution on 0..n_max (see the header comment for which form).
RelaxationSolution closed_form(const RelaxationSpec& spec);

OracleRun relaxation_oracle(const RelaxationSpec& spec, OracleMode mode = OracleMode::floating);

struct ComparisonRow {
    long n = 0;
    double closed_form = 0.0;
    double oracle = 0.0;
    std::optional<double> published;
    double abs_dev_closed_oracle = 0.0;
    std::optional<double> abs_dev_oracle_published;
    std::optional<double> rel_dev_oracle_published;
};

struct ComparisonReport {
    std::string title;
    std::vector<ComparisonRow> rows;
    bool published_form_used = false;
};

/// Side-by-side closed form, exact oracle and (when given) published values.
/// Reports deviations; never asserts agreement with published values.
ComparisonReport table_compare(const RelaxationSpec& spec, const std::vector<double>& published = {});

}  // namespace dcalc
