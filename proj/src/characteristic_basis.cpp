#include "dcalc/characteristic_basis.hpp"

#include "dcalc/delta_calculus.hpp"
#include "dcalc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dcalc {

namespace {

constexpr double kMergeTolerance = 1e-8;
constexpr double kClusterCandidate = 1e-4;
constexpr double kRegressiveFloor = 1e-12;
constexpr double kResidualTolerance = 1e-10;
constexpr int kMaxIterations = 500;

Complex derivative(const CharPolynomial& poly, Complex m, int order) {
    // coefficients of the full polynomial a_0..a_N, a_N = 1
    std::vector<Complex> a(poly.coefficients.begin(), poly.coefficients.end());
    a.emplace_back(1.0);
    for (int d = 0; d < order; ++d) {
        std::vector<Complex> next(a.size() > 1 ? a.size() - 1 : 1, 0.0);
        for (std::size_t k = 1; k < a.size(); ++k) next[k - 1] = a[k] * static_cast<double>(k);
        a = std::move(next);
    }
    Complex value{0.0, 0.0};
    for (auto it = a.rbegin(); it != a.rend(); ++it) value = value * m + *it;
    return value;
}

std::vector<Complex> quadratic_roots(double b, double c) {
    const double disc = b * b - 4.0 * c;
    if (disc >= 0.0) {
        // q = -(b + sign(b) sqrt(disc)) / 2 avoids cancellation
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (b + std::copysign(sq, b));
        if (q == 0.0) return {0.0, 0.0};
        return {q, c / q};
    }
    const double re = -0.5 * b;
    const double im = 0.5 * std::sqrt(-disc);
    return {{re, im}, {re, -im}};
}

std::vector<Complex> aberth(const CharPolynomial& poly) {
    const int n = poly.degree();
    double radius = 0.0;
    for (double r : poly.coefficients) radius = std::max(radius, std::abs(r));
    radius += 1.0;
    std::vector<Complex> z(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * k / n + 0.4;
        z[static_cast<std::size_t>(k)] = std::polar(radius, angle);
    }
    for (int iter = 0; iter < kMaxIterations; ++iter) {
        double largest_step = 0.0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            const Complex p = poly.evaluate(z[i]);
            if (p == 0.0) continue;
            const Complex ratio = p / derivative(poly, z[i], 1);
            Complex repulsion{0.0, 0.0};
            for (std::size_t j = 0; j < z.size(); ++j) {
                if (j != i) repulsion += 1.0 / (z[i] - z[j]);
            }
            const Complex step = ratio / (1.0 - ratio * repulsion);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
            z[i] -= step;
            largest_step = std::max(largest_step, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (largest_step < 1e-16) return z;
    }
    // converged to within rounding only near multiple roots; validated below
    return z;
}

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * (1.0 + std::abs(a)); }

// A root of multiplicity k is a simple root of the (k-1)th derivative.
Complex polish(const CharPolynomial& poly, Complex m, int multiplicity) {
    if (multiplicity < 2) return m;
    Complex z = m;
    for (int iter = 0; iter < 8; ++iter) {
        const Complex d = derivative(poly, z, multiplicity);
        if (d == 0.0) break;
        const Complex step = derivative(poly, z, multiplicity - 1) / d;
        if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
        z -= step;
        if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
    }
    return close(z, m, kClusterCandidate) ? z : m;
}


// Groups raw roots into (value, multiplicity). Roots within the merge tolerance
// always join; looser clusters join when their centroid is a root to working
// precision (the signature of a multiple root found by simultaneous iteration).
RootSet cluster(const CharPolynomial& poly, std::vector<Complex> raw) {
    RootSet out;
    std::vector<bool> used(raw.size(), false);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::size_t> tight{i};
        std::vector<std::size_t> loose{i};
        for (std::size_t j = i + 1; j < raw.size(); ++j) {
            if (used[j]) continue;
            if (close(raw[i], raw[j], kMergeTolerance)) tight.push_back(j);
            if (close(raw[i], raw[j], kClusterCandidate)) loose.push_back(j);
        }
        auto centroid = [&](const std::vector<std::size_t>& idx) {
            Complex c{0.0, 0.0};
            for (auto k : idx) c += raw[k];
            return c / static_cast<double>(idx.size());
        };
        std::vector<std::size_t> chosen = tight;
        if (loose.size() > tight.size()) {
            const Complex c = centroid(loose);
            if (std::abs(poly.evaluate(c)) <= 1e-12 * poly.scale(c)) chosen = loose;
        }
        for (auto k : chosen) used[k] = true;
        out.push_back({polish(poly, centroid(chosen), static_cast<int>(chosen.size())), static_cast<int>(chosen.size())});
    }
    return out;
}

// For real coefficients: snap near-real roots onto the axis and make complex
// partners exact conjugates.
RootSet symmetrize(RootSet roots) {
    RootSet real_roots;
    RootSet upper;
    std::vector<Root> lower;
    for (auto& r : roots) {
        if (std::abs(r.value.imag()) <= 1e-12 * (1.0 + std::abs(r.value))) {
            real_roots.push_back({{r.value.real(), 0.0}, r.multiplicity});
        } else if (r.value.imag() > 0.0) {
            upper.push_back(r);
        } else {
            lower.push_back(r);
        }
    }
    // an unpaired root with a tiny imaginary part is a perturbed real root
    auto snap_unpaired = [&](auto& side) {
        auto it = std::min_element(side.begin(), side.end(), [](const Root& a, const Root& b) {
            return std::abs(a.value.imag()) < std::abs(b.value.imag());
        });
        if (std::abs(it->value.imag()) > 1e-6 * (1.0 + std::abs(it->value))) {
            throw NumericalFailure("complex roots of a real polynomial did not pair up");
        }
        real_roots.push_back({{it->value.real(), 0.0}, it->multiplicity});
        side.erase(it);
    };
    while (upper.size() != lower.size()) {
        if (upper.size() > lower.size()) {
            snap_unpaired(upper);
        } else {
            snap_unpaired(lower);
        }
    }
    RootSet pairs;
    for (auto& u : upper) {
        auto best = std::min_element(lower.begin(), lower.end(), [&](const Root& a, const Root& b) {
            return std::abs(a.value - std::conj(u.value)) < std::abs(b.value - std::conj(u.value));
        });
        if (best == lower.end() || best->multiplicity != u.multiplicity ||
            std::abs(best->value - std::conj(u.value)) > 1e-6 * (1.0 + std::abs(u.value))) {
            throw NumericalFailure("complex roots of a real polynomial did not pair up");
        }
        const Complex v = 0.5 * (u.value + std::conj(best->value));
        pairs.push_back({v, u.multiplicity});
        lower.erase(best);
    }
    std::sort(real_roots.begin(), real_roots.end(),
              [](const Root& a, const Root& b) { return a.value.real() < b.value.real(); });
    std::sort(pairs.begin(), pairs.end(), [](const Root& a, const Root& b) {
        if (a.value.imag() != b.value.imag()) return a.value.imag() < b.value.imag();
        return a.value.real() < b.value.real();
    });
    RootSet out = real_roots;
    for (auto& p : pairs) {
        out.push_back(p);
        out.push_back({std::conj(p.value), p.multiplicity});
    }
    return out;
}

}  // namespace

Complex CharPolynomial::evaluate(Complex m) const {
    Complex value{1.0, 0.0};
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) value = value * m + *it;
    return value;
}

double CharPolynomial::scale(Complex m) const {
    const double am = std::abs(m);
    double power = 1.0;
    double sum = 0.0;
    for (double r : coefficients) {
        sum += std::abs(r) * power;
        power *= am;
    }
    return sum + power;
}

CharPolynomial char_poly_from_equation(const DeltaOperator& op) {
    if (op.shift() == ShiftConvention::second_order_shifted) {
        // m^2 / (1 + m) + r_0 = 0 with the denominator cleared
        const double lambda = op.coefficients()[0];
        return CharPolynomial{{lambda, lambda}};
    }
    return CharPolynomial{op.coefficients()};
}

CharPolynomial char_poly_from_equation(const DifferenceProblem& problem) {
    return char_poly_from_equation(problem.op);
}

RootSet find_roots(const CharPolynomial& poly) {
    const int degree = poly.degree();
    if (degree < 1) throw InvalidArgument("characteristic polynomial needs degree >= 1");
    std::vector<Complex> raw;
    if (degree == 1) {
        raw = {-poly.coefficients[0]};
    } else if (degree == 2) {
        raw = quadratic_roots(poly.coefficients[1], poly.coefficients[0]);
    } else {
        raw = aberth(poly);
    }
    RootSet roots = symmetrize(cluster(poly, raw));
    for (const auto& r : roots) {
        const double bound = kResidualTolerance * std::max(1.0, std::pow(std::abs(r.value), degree));
        if (!(std::abs(poly.evaluate(r.value)) <= bound)) {
            throw NumericalFailure("root finder did not converge: residual " +
                                   std::to_string(std::abs(poly.evaluate(r.value))));
        }
        if (std::abs(1.0 + r.value) <= kRegressiveFloor) throw NonRegressiveRoot(r.value);
    }
    return roots;
}

std::vector<Complex> polynomial_from_roots(const RootSet& roots) {
    std::vector<Complex> c{1.0};  // ascending powers
    for (const auto& r : roots) {
        for (int k = 0; k < r.multiplicity; ++k) {
            std::vector<Complex> next(c.size() + 1, 0.0);
            for (std::size_t i = 0; i < c.size(); ++i) {
                next[i + 1] += c[i];
                next[i] -= r.value * c[i];
            }
            c = std::move(next);
        }
    }
    c.pop_back();
    return c;
}

SolutionBasis::SolutionBasis(std::vector<BasisFunction> functions, long origin)
    : functions_(std::move(functions)), origin_(origin) {}

Complex SolutionBasis::difference(int j, long n, int k) const { return delta_power(function(j).eval, n, k); }

namespace {

std::string power_label(int j, long origin) {
    if (j == 0) return {};
    const std::string base = origin == 0 ? "n" : "(n - " + std::to_string(origin) + ")";
    return j == 1 ? base + " " : base + "^" + std::to_string(j) + " ";
}

double ramp(long n, long origin, int j) { return std::pow(static_cast<double>(n - origin), j); }

}  // namespace

SolutionBasis build_basis(const RootSet& roots, long origin, PairForm form) {
    std::vector<BasisFunction> functions;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        const Root& root = roots[i];
        const Complex m = root.value;
        if (std::abs(1.0 + m) <= kRegressiveFloor) throw NonRegressiveRoot(m);
        const bool upper_of_pair = m.imag() > 0.0 && i + 1 < roots.size() && roots[i + 1].value == std::conj(m);
        if (upper_of_pair && form == PairForm::trigonometric) {
            const double alpha = m.real();
            const double beta = m.imag();
            if (std::abs(1.0 + alpha) <= kRegressiveFloor) {
                throw DegenerateComplexPair("complex pair with alpha = -1 has no trigonometric form");
            }
            const double gamma = beta / (1.0 + alpha);
            for (int j = 0; j < root.multiplicity; ++j) {
                functions.push_back({Sequence([=](long n) {
                                         return ramp(n, origin, j) * delta_exp(alpha, n, origin) *
                                                delta_cos(gamma, n, origin);
                                     }),
                                     power_label(j, origin) + "e_" + std::to_string(alpha) + " cos_" +
                                         std::to_string(gamma)});
                functions.push_back({Sequence([=](long n) {
                                         return ramp(n, origin, j) * delta_exp(alpha, n, origin) *
                                                delta_sin(gamma, n, origin);
                                     }),
                                     power_label(j, origin) + "e_" + std::to_string(alpha) + " sin_" +
                                         std::to_string(gamma)});
            }
            ++i;  // conjugate consumed
            continue;
        }
        for (int j = 0; j < root.multiplicity; ++j) {
            functions.push_back(
                {Sequence([=](long n) { return ramp(n, origin, j) * delta_exp(m, n, origin); }),
                 power_label(j, origin) + "e_m(n) with m = " + std::to_string(m.real()) +
                     (m.imag() != 0.0 ? (m.imag() > 0 ? "+" : "") + std::to_string(m.imag()) + "i" : "")});
        }
    }
    return SolutionBasis(std::move(functions), origin);
}

}  // namespace dcalc
