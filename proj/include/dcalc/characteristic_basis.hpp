#pragma once

// Characteristic polynomials of constant-coefficient delta equations, their
// roots, and the homogeneous solution bases built from delta exponentials.
//
// Substituting x(n) = e_m(n, 0) into D^N x + ... + r_0 x = 0 gives
// m^N + r_{N-1} m^{N-1} + ... + r_0 = 0. A real root m contributes e_m(n, a);
// a complex pair alpha +- i beta contributes e_alpha cos_gamma and
// e_alpha sin_gamma with gamma = beta / (1 + alpha); a root of multiplicity k
// contributes (n - a)^j times those functions, j = 0..k-1. Only k <= 2 is the
// classical statement; higher multiplicities follow the same pattern and are
// checked against the recurrence oracle in the tests.

#include "dcalc/problem.hpp"

#include <string>
#include <vector>

namespace dcalc {

/// Monic polynomial m^N + r_{N-1} m^{N-1} + ... + r_0.
struct CharPolynomial {
    std::vector<double> coefficients;  // r_0..r_{N-1}

    int degree() const noexcept { return static_cast<int>(coefficients.size()); }
    Complex evaluate(Complex m) const;
    /// sum_k |r_k| |m|^k including the leading term
    double scale(Complex m) const;
};

CharPolynomial char_poly_from_equation(const DeltaOperator& op);
CharPolynomial char_poly_from_equation(const DifferenceProblem& problem);

struct Root {
    Complex value;
    int multiplicity = 1;
};

/// Real roots ascending, then complex pairs by ascending |Im|, each pair
/// listed as (alpha + i beta, alpha - i beta) with beta > 0.
using RootSet = std::vector<Root>;

/// Closed formulas for degree <= 2, Aberth-Ehrlich simultaneous iteration
/// above. Throws NonRegressiveRoot or NumericalFailure.
RootSet find_roots(const CharPolynomial& poly);

/// Monic polynomial with the given roots (coefficients r_0..r_{N-1}).
std::vector<Complex> polynomial_from_roots(const RootSet& roots);

struct BasisFunction {
    Sequence eval;
    std::string label;
};

class SolutionBasis {
public:
    SolutionBasis(std::vector<BasisFunction> functions, long origin);

    int size() const noexcept { return static_cast<int>(functions_.size()); }
    long origin() const noexcept { return origin_; }
    const BasisFunction& function(int j) const { return functions_.at(static_cast<std::size_t>(j)); }

    Complex value(int j, long n) const { return function(j).eval(n); }
    /// D^k x_j(n) by repeated forward differencing.
    Complex difference(int j, long n, int k) const;

private:
    std::vector<BasisFunction> functions_;
    long origin_;
};

enum class PairForm {
    trigonometric,  ///< e_alpha cos_gamma, e_alpha sin_gamma (real valued)
    exponential     ///< e_{alpha + i beta}, e_{alpha - i beta}
};

/// Throws DegenerateComplexPair for a trigonometric pair with alpha = -1.
SolutionBasis build_basis(const RootSet& roots, long origin, PairForm form = PairForm::trigonometric);

}  // namespace dcalc
