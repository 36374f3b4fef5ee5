#pragma once

// Variation of parameters for D^N x + r_{N-1} D^{N-1} x + ... + r_0 x = q.
//
// With homogeneous basis x_1..x_N, the particular solution is
// X(n) = sum_i v_i(n) x_i(n) where the increments D v_i(n) solve
//
//   sum_i D v_i(n) D^k x_i(n+1) = 0     k = 0..N-2
//   sum_i D v_i(n) D^{N-1} x_i(n+1) = q(n)
//
// i.e. D v_i(n) = q(n) W_i(n) / W(n+1), W the Casoratian and W_i the
// determinant with column i replaced by (0, ..., 0, 1). The sums start at
// v_i(0) = 0; any additive constant is absorbed by the fitted c_i.

#include "dcalc/characteristic_basis.hpp"
#include "dcalc/detail/linalg.hpp"
#include "dcalc/problem.hpp"

#include <vector>

namespace dcalc {

/// The Cramer system at grid point n (matrix entries D^k x_j(n+1)).
struct CasoratianSystem {
    long point = 0;
    detail::ComplexMatrix matrix;
    Complex determinant;            // W(n+1)
    std::vector<Complex> cofactors; // W_i(n)
    double scale = 0.0;             // geometric mean of column norms
};

/// Relative singularity threshold for W against the column-norm scale.
inline constexpr double kCasoratianThreshold = 1e-12;

CasoratianSystem casoratian_system(const SolutionBasis& basis, long n);

/// W(x_1..x_N)(n+1). Throws SingularCasoratian.
Complex casoratian(const SolutionBasis& basis, long n);

/// q(n) W_i(n) / W(n+1), i = 1..N.
std::vector<Complex> parameter_deltas(const CasoratianSystem& system, const RealSequence& q, long n);

/// Particular solution on 0..n_max together with the parameter sums.
struct ParticularSolution {
    GridSolution solution;
    std::vector<std::vector<Complex>> parameters;  // parameters[n][i] = v_i(n)
};

ParticularSolution particular_solution(const SolutionBasis& basis, const RealSequence& q, long n_max,
                                       const DeltaOperator& op);

/// Constants c_i such that sum c_i x_i + X meets every condition.
/// Throws SingularConditions.
std::vector<Complex> fit_constants(const SolutionBasis& basis, const GridSolution& particular,
                                   const std::vector<PointCondition>& conditions);

/// sum_i c_i x_i(n) + X(n) on 0..n_max, real part after the guard check.
GridSolution assemble(const SolutionBasis& basis, const std::vector<Complex>& constants,
                      const GridSolution& particular);

/// Characteristic roots -> basis -> particular solution -> constants.
GridSolution solve(const DifferenceProblem& problem, long n_max);

}  // namespace dcalc
