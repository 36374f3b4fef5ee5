#include "dcalc/vop_engine.hpp"

#include "dcalc/delta_calculus.hpp"
#include "dcalc/errors.hpp"

#include <algorithm>
#include <cmath>

namespace dcalc {

namespace {

void require_nonsingular(const CasoratianSystem& system) {
    if (!(std::abs(system.determinant) > kCasoratianThreshold * std::pow(system.scale, system.matrix.rows()) &&
          system.scale > 0.0)) {
        throw SingularCasoratian("Casoratian vanishes at n + 1 = " + std::to_string(system.point + 1) +
                                 " (basis is linearly dependent)");
    }
}

}  // namespace

CasoratianSystem casoratian_system(const SolutionBasis& basis, long n) {
    const int size = basis.size();
    if (size < 1) throw InvalidArgument("Casoratian of an empty basis");
    CasoratianSystem system;
    system.point = n;
    system.matrix.resize(size, size);
    for (int j = 0; j < size; ++j) {
        // D^k x_j(n+1) from the values x_j(n+1..n+size) by repeated differencing
        std::vector<Complex> values(static_cast<std::size_t>(size));
        for (int t = 0; t < size; ++t) values[static_cast<std::size_t>(t)] = basis.value(j, n + 1 + t);
        for (int k = 0; k < size; ++k) {
            system.matrix(k, j) = values[0];
            for (int t = 0; t + 1 < size - k; ++t) {
                values[static_cast<std::size_t>(t)] =
                    values[static_cast<std::size_t>(t) + 1] - values[static_cast<std::size_t>(t)];
            }
        }
    }
    system.determinant = detail::determinant(system.matrix);
    system.scale = detail::column_norm_scale(system.matrix);
    system.cofactors.resize(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) {
        detail::ComplexMatrix replaced = system.matrix;
        replaced.col(i).setZero();
        replaced(size - 1, i) = 1.0;
        system.cofactors[static_cast<std::size_t>(i)] = detail::determinant(replaced);
    }
    return system;
}

Complex casoratian(const SolutionBasis& basis, long n) {
    auto system = casoratian_system(basis, n);
    require_nonsingular(system);
    return system.determinant;
}

std::vector<Complex> parameter_deltas(const CasoratianSystem& system, const RealSequence& q, long n) {
    require_nonsingular(system);
    const double qn = q(n);
    std::vector<Complex> out;
    out.reserve(system.cofactors.size());
    for (const auto& w : system.cofactors) out.push_back(qn * w / system.determinant);
    return out;
}

ParticularSolution particular_solution(const SolutionBasis& basis, const RealSequence& q, long n_max,
                                       const DeltaOperator& op) {
    const auto size = static_cast<std::size_t>(basis.size());
    ParticularSolution out;
    out.parameters.assign(static_cast<std::size_t>(n_max) + 1, std::vector<Complex>(size, 0.0));
    out.solution.values.assign(static_cast<std::size_t>(n_max) + 1, 0.0);
    std::vector<Complex> v(size, 0.0);
    for (long n = 0; n <= n_max; ++n) {
        out.parameters[static_cast<std::size_t>(n)] = v;
        Complex x{0.0, 0.0};
        for (std::size_t i = 0; i < size; ++i) x += v[i] * basis.value(static_cast<int>(i), n);
        out.solution.values[static_cast<std::size_t>(n)] = real_part_checked(x);
        if (n == n_max) break;
        const auto deltas = parameter_deltas(casoratian_system(basis, n), q, n);
        for (std::size_t i = 0; i < size; ++i) v[i] += deltas[i];
    }
    out.solution.description = "particular solution (variation of parameters)";
    record_residual(out.solution, op, q);
    return out;
}

std::vector<Complex> fit_constants(const SolutionBasis& basis, const GridSolution& particular,
                                   const std::vector<PointCondition>& conditions) {
    const int size = basis.size();
    if (static_cast<int>(conditions.size()) != size) {
        throw SingularConditions("need exactly " + std::to_string(size) + " side conditions, got " +
                                 std::to_string(conditions.size()));
    }
    detail::ComplexMatrix m(size, size);
    detail::ComplexVector rhs(size);
    for (int i = 0; i < size; ++i) {
        const auto& c = conditions[static_cast<std::size_t>(i)];
        for (int j = 0; j < size; ++j) m(i, j) = basis.value(j, c.point);
        rhs(i) = c.value - particular[c.point];
    }
    const Complex det = detail::determinant(m);
    const double scale = detail::column_norm_scale(m);
    if (!(std::abs(det) > 1e-12 * std::pow(scale, size)) || scale == 0.0) {
        throw SingularConditions("side conditions are singular for this basis");
    }
    const detail::ComplexVector c = Eigen::PartialPivLU<detail::ComplexMatrix>(m).solve(rhs);
    return {c.data(), c.data() + c.size()};
}

GridSolution assemble(const SolutionBasis& basis, const std::vector<Complex>& constants,
                      const GridSolution& particular) {
    GridSolution out = particular;
    for (long n = 0; n <= particular.n_max(); ++n) {
        Complex x = particular[n];
        for (int j = 0; j < basis.size(); ++j) x += constants[static_cast<std::size_t>(j)] * basis.value(j, n);
        out.values[static_cast<std::size_t>(n)] = real_part_checked(x);
    }
    return out;
}

GridSolution solve(const DifferenceProblem& problem, long n_max) {
    const DeltaOperator& op = problem.op;
    if (static_cast<int>(problem.conditions.size()) != op.order()) {
        throw SingularConditions("need exactly " + std::to_string(op.order()) + " side conditions");
    }
    long last_condition = 0;
    for (const auto& c : problem.conditions) last_condition = std::max(last_condition, c.point);
    if (n_max < last_condition) throw InvalidArgument("n_max lies before the last side condition");

    const RootSet roots = find_roots(char_poly_from_equation(op));
    SolutionBasis basis = [&] {
        try {
            return build_basis(roots, 0);
        } catch (const DegenerateComplexPair&) {
            return build_basis(roots, 0, PairForm::exponential);
        }
    }();

    // D^2 x(n-1) + r_0 x(n) = q(n) is D^2 x(m) + r_0 D x(m) + r_0 x(m) = q(m + 1) with m = n - 1
    const bool shifted = op.shift() == ShiftConvention::second_order_shifted;
    const DeltaOperator internal_op = shifted ? DeltaOperator({op.coefficients()[0], op.coefficients()[0]}) : op;
    const RealSequence forcing = shifted ? problem.forcing.shifted(1) : problem.forcing;

    auto particular = particular_solution(basis, forcing, n_max, internal_op);
    const auto constants = fit_constants(basis, particular.solution, problem.conditions);
    GridSolution solution = assemble(basis, constants, particular.solution);
    solution.description = "variation of parameters, order " + std::to_string(op.order());
    record_residual(solution, op, problem.forcing);
    for (std::size_t k = 0; k < op.coefficients().size(); ++k) {
        solution.parameters["r" + std::to_string(k)] = op.coefficients()[k];
    }
    return solution;
}

}  // namespace dcalc
