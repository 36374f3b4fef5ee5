#pragma once

// Discrete second-order eigenvalue problems
//
//   -D^2 x(n-1) + V(n) x(n) = lambda x(n),   x(0) = x(b) = 0
//
// with the hydrogen potential V = A/n + q(n) or the Coulomb potential
// V = q(n) - 2/n + l(l+1)/n^2. For 0 < lambda < 4, lambda = 2 - 2 cos(theta),
// the homogeneous solutions are cos(n theta), sin(n theta) and the solution
// normalized by x(0) = 0, x(1) = sin(theta) satisfies
//
//   x(n) = sin(n theta) + (1 / sin theta) sum_{s=1}^{n-1} V(s) x(s) sin((n - s) theta).

#include "dcalc/characteristic_basis.hpp"
#include "dcalc/problem.hpp"

#include <optional>
#include <vector>

namespace dcalc {

enum class PotentialKind {
    hydrogen,  ///< A/n + q(n)
    coulomb,   ///< q(n) - 2/n + l(l+1)/n^2
    custom     ///< q(n)
};

struct SchrodingerSpec {
    PotentialKind kind = PotentialKind::hydrogen;
    double A = 1.0;
    int l = 2;
    RealSequence q = RealSequence::parse("1/sqrt(n)");
    long b = 25;
    double lambda = 1.0;

    /// Throws InvalidArgument unless b >= 2 and l >= 0.
    void validate() const;
};

struct LambdaClass {
    enum class Tag { zero, four, outside, oscillatory };
    Tag tag = Tag::outside;
    std::optional<double> theta;  // oscillatory only

    bool oscillatory() const noexcept { return tag == Tag::oscillatory; }
};

/// lambda = 0 or 4: only the trivial solution; lambda outside [0, 4]: no
/// nontrivial solution; 0 < lambda < 4: theta = arccos(1 - lambda/2).
LambdaClass classify_lambda(double lambda);

/// V(n) for n >= 1; throws OutOfDomain for n <= 0.
double effective_potential(const SchrodingerSpec& spec, long n);
RealSequence potential_sequence(const SchrodingerSpec& spec);

/// x(0..b) from the sum representation. Throws NotOscillatory unless
/// 0 < lambda < 4. The result records the recurrence defect.
GridSolution sum_representation_solve(const SchrodingerSpec& spec);

/// The complex exponential basis e_{m1}(n, 0), e_{m2}(n, 0) of
/// D^2 x(n-1) + lambda x(n) = 0, m_{1,2} = (-lambda +- sqrt(lambda (lambda - 4))) / 2
/// with the principal square root.
SolutionBasis hydrogen_basis(double lambda);

/// m2 - m1 = -sqrt(lambda (lambda - 4)), principal branch; the Casoratian of
/// hydrogen_basis at every n.
Complex hydrogen_casoratian(double lambda);

struct Eigenvalue {
    double lambda = 0.0;
    double theta = 0.0;
    double abs_xb = 0.0;  // |x(b, lambda)| after refinement
};

struct ScanOptions {
    int resolution = 1024;  // theta samples on (0, pi); at least 16
    double lambda_min = 0.0;
    double lambda_max = 4.0;
};

/// Eigenvalues x(b, lambda) = 0 inside (lambda_min, lambda_max), ascending.
/// Sign changes of x(b) over a uniform theta grid are refined by bisection.
std::vector<Eigenvalue> eigenvalue_scan(const SchrodingerSpec& spec, const ScanOptions& options = {});

}  // namespace dcalc
