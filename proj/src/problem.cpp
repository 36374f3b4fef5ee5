#include "dcalc/problem.hpp"

#include "dcalc/errors.hpp"

#include <algorithm>
#include <cmath>

namespace dcalc {

namespace {

// Coefficients c_j of x(n+j), j = 0..N, in the binomial expansion of the operator.
std::vector<double> expanded(const std::vector<double>& r) {
    const int order = static_cast<int>(r.size());
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    for (int k = 0; k <= order; ++k) {
        const double rk = k == order ? 1.0 : r[static_cast<std::size_t>(k)];
        double binom = 1.0;
        for (int j = 0; j <= k; ++j) {
            const double sign = (k - j) % 2 == 0 ? 1.0 : -1.0;
            c[static_cast<std::size_t>(j)] += rk * sign * binom;
            binom = binom * (k - j) / (j + 1);
        }
    }
    return c;
}

}  // namespace

DeltaOperator::DeltaOperator(std::vector<double> coefficients, ShiftConvention shift)
    : coefficients_(std::move(coefficients)), shift_(shift) {
    if (coefficients_.empty()) throw InvalidArgument("difference operator needs order >= 1");
    for (double r : coefficients_) {
        if (!std::isfinite(r)) throw InvalidArgument("non-finite operator coefficient");
    }
    if (shift_ == ShiftConvention::second_order_shifted &&
        (coefficients_.size() != 2 || coefficients_[1] != 0.0)) {
        throw UnsupportedShift("the shifted form is D^2 x(n-1) + r_0 x(n); expected coefficients {r_0, 0}");
    }
}

double DeltaOperator::apply(const std::vector<double>& x, long n) const {
    if (shift_ == ShiftConvention::second_order_shifted) {
        const auto i = static_cast<std::size_t>(n);
        return x.at(i + 1) - 2.0 * x.at(i) + x.at(i - 1) + coefficients_[0] * x.at(i);
    }
    const auto c = expanded(coefficients_);
    double sum = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) sum += c[j] * x.at(static_cast<std::size_t>(n) + j);
    return sum;
}

double DeltaOperator::magnitude(const std::vector<double>& x, long n) const {
    if (shift_ == ShiftConvention::second_order_shifted) {
        const auto i = static_cast<std::size_t>(n);
        return std::abs(x.at(i + 1)) + std::abs((coefficients_[0] - 2.0) * x.at(i)) + std::abs(x.at(i - 1));
    }
    const auto c = expanded(coefficients_);
    double sum = 0.0;
    for (std::size_t j = 0; j < c.size(); ++j) sum += std::abs(c[j] * x.at(static_cast<std::size_t>(n) + j));
    return sum;
}

long DeltaOperator::last_point(long n_max) const noexcept {
    return shift_ == ShiftConvention::unshifted ? n_max - order() : n_max - 1;
}

std::vector<PointCondition> DifferenceProblem::initial_values(const std::vector<double>& values, long first) {
    std::vector<PointCondition> out;
    for (std::size_t i = 0; i < values.size(); ++i) out.push_back({first + static_cast<long>(i), values[i]});
    return out;
}

void record_residual(GridSolution& solution, const DeltaOperator& op, const RealSequence& forcing) {
    double worst = 0.0;
    double worst_relative = 0.0;
    for (long n = op.first_point(); n <= op.last_point(solution.n_max()); ++n) {
        const double q = forcing(n);
        const double r = std::abs(op.apply(solution.values, n) - q);
        const double scale = std::max({1.0, std::abs(q), op.magnitude(solution.values, n)});
        worst = std::max(worst, r);
        worst_relative = std::max(worst_relative, r / scale);
    }
    solution.residual_norm = worst;
    solution.relative_residual = worst_relative;
}

}  // namespace dcalc
