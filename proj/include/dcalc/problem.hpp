#pragma once

// Shared problem and solution types for constant-coefficient difference
// equations
//
//   unshifted:             D^N x(n) + r_{N-1} D^{N-1} x(n) + ... + r_0 x(n) = q(n)
//   second_order_shifted:  D^2 x(n-1) + r_0 x(n) = q(n)      (N = 2, r_1 = 0)
//
// where D is the forward difference.

#include "dcalc/sequence.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace dcalc {

enum class ShiftConvention { unshifted, second_order_shifted };

/// The linear operator D^N + sum_k r_k D^k with monic leading term.
class DeltaOperator {
public:
    DeltaOperator(std::vector<double> coefficients,
                  ShiftConvention shift = ShiftConvention::unshifted);

    int order() const noexcept { return static_cast<int>(coefficients_.size()); }
    const std::vector<double>& coefficients() const noexcept { return coefficients_; }
    ShiftConvention shift() const noexcept { return shift_; }

    /// First grid point where the operator can be applied (1 for the shifted form).
    long first_point() const noexcept { return shift_ == ShiftConvention::unshifted ? 0 : 1; }

    /// Left-hand side at n for values x(0..); needs x up to n + N (unshifted)
    /// or n + 1 (shifted).
    double apply(const std::vector<double>& x, long n) const;

    /// Sum of |c_j x(.)| over the terms of apply(); the natural scale of the
    /// residual at n.
    double magnitude(const std::vector<double>& x, long n) const;

    /// Last n at which apply() fits inside a grid 0..n_max.
    long last_point(long n_max) const noexcept;

private:
    std::vector<double> coefficients_;
    ShiftConvention shift_;
};

/// x(point) = value.
struct PointCondition {
    long point = 0;
    double value = 0.0;
};

struct DifferenceProblem {
    DeltaOperator op;
    RealSequence forcing;
    std::vector<PointCondition> conditions;  // N conditions

    /// Conditions x(first..first+N-1) = values.
    static std::vector<PointCondition> initial_values(const std::vector<double>& values, long first = 0);
};

/// A solution sampled on n = 0..n_max.
struct GridSolution {
    std::vector<double> values;
    /// max over interior n of |equation residual|
    double residual_norm = 0.0;
    /// the same maximum, each point divided by max(1, |q(n)|, operator magnitude)
    double relative_residual = 0.0;
    std::map<std::string, double> parameters;
    std::string description;

    long n_max() const noexcept { return static_cast<long>(values.size()) - 1; }
    double operator[](long n) const { return values.at(static_cast<std::size_t>(n)); }
};

/// Fills residual_norm / relative_residual of `solution` for op x = q.
void record_residual(GridSolution& solution, const DeltaOperator& op, const RealSequence& forcing);

}  // namespace dcalc
