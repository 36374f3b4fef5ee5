#include "dcalc/recurrence_oracle.hpp"

#include "dcalc/errors.hpp"

#include <algorithm>
#include <cmath>

namespace dcalc {

namespace {

using boost::multiprecision::cpp_int;

cpp_int binomial(int n, int k) {
    cpp_int b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

}  // namespace

std::vector<double> ExpandedRecurrence::taps_as_double() const {
    std::vector<double> out;
    for (const auto& t : taps) out.push_back(to_double(t));
    return out;
}

ExpandedRecurrence expand(const DeltaOperator& op, const RealSequence& forcing) {
    ExpandedRecurrence rec;
    rec.forcing = forcing;
    rec.shift = op.shift();
    if (op.shift() == ShiftConvention::second_order_shifted) {
        // x(m+2) = -x(m) + (2 - r_0) x(m+1) + q(m+1)
        rec.horizon = 2;
        rec.taps = {Rational{-1}, Rational{2 - to_rational(op.coefficients()[0])}};
        rec.forcing_offset = 1;
        return rec;
    }
    if (op.shift() != ShiftConvention::unshifted) throw UnsupportedShift("unknown shift convention");
    const int order = op.order();
    rec.horizon = order;
    // c_j = sum_{k >= j} r_k (-1)^{k-j} C(k, j), r_N = 1; x(n+N) = q - sum_{j<N} c_j x(n+j)
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational{0});
    for (int k = 0; k <= order; ++k) {
        const Rational rk = k == order ? Rational{1} : to_rational(op.coefficients()[static_cast<std::size_t>(k)]);
        for (int j = 0; j <= k; ++j) {
            const Rational term = rk * Rational{binomial(k, j)};
            c[static_cast<std::size_t>(j)] += (k - j) % 2 == 0 ? term : Rational{-term};
        }
    }
    for (int j = 0; j < order; ++j) rec.taps.push_back(-c[static_cast<std::size_t>(j)]);
    return rec;
}

ExpandedRecurrence expand(const DifferenceProblem& problem) { return expand(problem.op, problem.forcing); }

ExpandedRecurrence expand_schrodinger(double lambda, const RealSequence& potential) {
    ExpandedRecurrence rec;
    rec.horizon = 2;
    rec.taps = {Rational{-1}, Rational{2 - to_rational(lambda)}};
    rec.forcing = RealSequence::constant(0.0);
    rec.forcing_offset = 1;
    rec.potential = potential;
    rec.shift = ShiftConvention::second_order_shifted;
    return rec;
}

std::vector<Rational> collapse(const ExpandedRecurrence& rec) {
    if (rec.shift != ShiftConvention::unshifted) throw UnsupportedShift("collapse needs an unshifted recurrence");
    const int order = rec.horizon;
    // c_j from the taps, c_N = 1; then r_i = sum_{j >= i} c_j C(j, i)
    std::vector<Rational> c;
    for (const auto& t : rec.taps) c.push_back(-t);
    c.emplace_back(1);
    std::vector<Rational> r(static_cast<std::size_t>(order), Rational{0});
    for (int i = 0; i < order; ++i) {
        for (int j = i; j <= order; ++j) r[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(j)] * Rational{binomial(j, i)};
    }
    return r;
}

OracleRun run(const ExpandedRecurrence& rec, const std::vector<double>& seeds, long n_max, OracleMode mode) {
    if (static_cast<int>(seeds.size()) != rec.horizon) {
        throw InvalidArgument("oracle needs " + std::to_string(rec.horizon) + " seed values");
    }
    if (mode == OracleMode::exact) {
        std::vector<Rational> exact_seeds;
        for (double s : seeds) exact_seeds.push_back(to_rational(s));
        return run_exact(rec, exact_seeds, n_max);
    }
    const auto taps = rec.taps_as_double();
    const auto horizon = static_cast<std::size_t>(rec.horizon);
    OracleRun out;
    auto& x = out.solution.values;
    x.assign(seeds.begin(), seeds.end());
    for (long n = 0; static_cast<long>(x.size()) <= n_max; ++n) {
        const long at = n + rec.forcing_offset;
        double next = rec.forcing(at);
        for (std::size_t j = 0; j < horizon; ++j) {
            double tap = taps[j];
            if (rec.potential && j + 1 == horizon) tap += (*rec.potential)(at);
            next += tap * x[static_cast<std::size_t>(n) + j];
        }
        x.push_back(next);
    }
    x.resize(static_cast<std::size_t>(std::max(n_max + 1, 0L)));
    out.solution.description = "recurrence oracle (floating point)";
    return out;
}

OracleRun run_exact(const ExpandedRecurrence& rec, const std::vector<Rational>& seeds, long n_max) {
    if (static_cast<int>(seeds.size()) != rec.horizon) {
        throw InvalidArgument("oracle needs " + std::to_string(rec.horizon) + " seed values");
    }
    const auto horizon = static_cast<std::size_t>(rec.horizon);
    OracleRun out;
    auto& x = out.exact;
    x = seeds;
    for (long n = 0; static_cast<long>(x.size()) <= n_max; ++n) {
        const long at = n + rec.forcing_offset;
        Rational next = rec.forcing.exact(at);
        for (std::size_t j = 0; j < horizon; ++j) {
            Rational tap = rec.taps[j];
            if (rec.potential && j + 1 == horizon) tap += rec.potential->exact(at);
            next += tap * x[static_cast<std::size_t>(n) + j];
        }
        x.push_back(std::move(next));
    }
    x.resize(static_cast<std::size_t>(std::max(n_max + 1, 0L)));
    for (const auto& v : x) out.solution.values.push_back(to_double(v));
    out.solution.description = "recurrence oracle (exact rational)";
    return out;
}

double residual(const ExpandedRecurrence& rec, const GridSolution& candidate) {
    const auto taps = rec.taps_as_double();
    const auto horizon = static_cast<std::size_t>(rec.horizon);
    const auto& x = candidate.values;
    double worst = 0.0;
    for (std::size_t n = 0; n + horizon < x.size(); ++n) {
        const long at = static_cast<long>(n) + rec.forcing_offset;
        double predicted = rec.forcing(at);
        for (std::size_t j = 0; j < horizon; ++j) {
            double tap = taps[j];
            if (rec.potential && j + 1 == horizon) tap += (*rec.potential)(at);
            predicted += tap * x[n + j];
        }
        const double actual = x[n + horizon];
        worst = std::max(worst, std::abs(actual - predicted) / std::max(1.0, std::abs(actual)));
    }
    return worst;
}

std::vector<double> pointwise_residual(const ExpandedRecurrence& rec, const GridSolution& candidate,
                                       const std::vector<double>& seeds) {
    const auto taps = rec.taps_as_double();
    const auto horizon = static_cast<std::size_t>(rec.horizon);
    const auto& x = candidate.values;
    std::vector<double> out(x.size(), 0.0);
    for (std::size_t n = 0; n < std::min(horizon, x.size()); ++n) {
        out[n] = n < seeds.size() ? std::abs(x[n] - seeds[n]) : 0.0;
    }
    for (std::size_t n = 0; n + horizon < x.size(); ++n) {
        const long at = static_cast<long>(n) + rec.forcing_offset;
        double predicted = rec.forcing(at);
        for (std::size_t j = 0; j < horizon; ++j) {
            double tap = taps[j];
            if (rec.potential && j + 1 == horizon) tap += (*rec.potential)(at);
            predicted += tap * x[n + j];
        }
        out[n + horizon] = std::abs(x[n + horizon] - predicted);
    }
    return out;
}

std::vector<double> seeds_from_conditions(const DifferenceProblem& problem) {
    const int order = problem.op.order();
    std::vector<std::optional<double>> seeds(static_cast<std::size_t>(order));
    for (const auto& c : problem.conditions) {
        if (c.point < 0 || c.point >= order) {
            throw InvalidArgument("the oracle needs initial values x(0.." + std::to_string(order - 1) + ")");
        }
        seeds[static_cast<std::size_t>(c.point)] = c.value;
    }
    std::vector<double> out;
    for (const auto& s : seeds) {
        if (!s) throw InvalidArgument("the oracle needs initial values x(0.." + std::to_string(order - 1) + ")");
        out.push_back(*s);
    }
    return out;
}

}  // namespace dcalc
