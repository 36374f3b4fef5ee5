#include "dcalc/schrodinger.hpp"

#include "dcalc/delta_calculus.hpp"
#include "dcalc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <thread>

namespace dcalc {

namespace {

constexpr double kThetaSlack = 1e-15;
constexpr double kPi = std::numbers::pi;

double theta_of(double lambda) {
    double c = 1.0 - lambda / 2.0;
    if (c > 1.0 && c <= 1.0 + kThetaSlack) c = 1.0;
    if (c < -1.0 && c >= -1.0 - kThetaSlack) c = -1.0;
    return std::acos(c);
}

// x(0..b) at angle theta.
std::vector<double> sum_representation(const std::vector<double>& potential, double theta, long b) {
    const double sin_theta = std::sin(theta);
    std::vector<double> x(static_cast<std::size_t>(b) + 1, 0.0);
    std::vector<double> weighted(static_cast<std::size_t>(b) + 1, 0.0);  // V(s) x(s)
    for (long n = 1; n <= b; ++n) {
        double sum = 0.0;
        for (long s = 1; s < n; ++s) {
            sum += weighted[static_cast<std::size_t>(s)] * std::sin(static_cast<double>(n - s) * theta);
        }
        const double xn = std::sin(static_cast<double>(n) * theta) + sum / sin_theta;
        x[static_cast<std::size_t>(n)] = xn;
        if (n < b) weighted[static_cast<std::size_t>(n)] = potential[static_cast<std::size_t>(n)] * xn;
    }
    return x;
}

std::vector<double> tabulate_potential(const SchrodingerSpec& spec) {
    std::vector<double> v(static_cast<std::size_t>(spec.b) + 1, 0.0);
    for (long n = 1; n < spec.b; ++n) v[static_cast<std::size_t>(n)] = effective_potential(spec, n);
    return v;
}

}  // namespace

void SchrodingerSpec::validate() const {
    if (b < 2) throw InvalidArgument("right endpoint b must be at least 2");
    if (l < 0) throw InvalidArgument("angular quantum number l must be nonnegative");
    if (!std::isfinite(lambda) || !std::isfinite(A)) throw InvalidArgument("lambda and A must be finite");
}

LambdaClass classify_lambda(double lambda) {
    if (lambda == 0.0) return {LambdaClass::Tag::zero, std::nullopt};
    if (lambda == 4.0) return {LambdaClass::Tag::four, std::nullopt};
    if (lambda < 0.0 || lambda > 4.0) return {LambdaClass::Tag::outside, std::nullopt};
    return {LambdaClass::Tag::oscillatory, theta_of(lambda)};
}

double effective_potential(const SchrodingerSpec& spec, long n) {
    if (n <= 0) throw OutOfDomain("potential is singular at n = " + std::to_string(n));
    const double dn = static_cast<double>(n);
    switch (spec.kind) {
    case PotentialKind::hydrogen:
        return spec.A / dn + spec.q(n);
    case PotentialKind::coulomb:
        return spec.q(n) - 2.0 / dn + static_cast<double>(spec.l) * (spec.l + 1) / (dn * dn);
    case PotentialKind::custom:
        return spec.q(n);
    }
    throw InvalidArgument("unknown potential kind");
}

RealSequence potential_sequence(const SchrodingerSpec& spec) {
    return RealSequence([spec](long n) { return effective_potential(spec, n); }, "effective potential");
}

GridSolution sum_representation_solve(const SchrodingerSpec& spec) {
    spec.validate();
    const auto cls = classify_lambda(spec.lambda);
    if (!cls.oscillatory()) {
        throw NotOscillatory("lambda = " + std::to_string(spec.lambda) +
                             " is outside (0, 4); only the trivial solution satisfies x(0) = x(b) = 0");
    }
    const double theta = *cls.theta;
    const auto potential = tabulate_potential(spec);

    GridSolution out;
    out.values = sum_representation(potential, theta, spec.b);
    out.parameters = {{"lambda", spec.lambda}, {"theta", theta}, {"b", static_cast<double>(spec.b)}};
    out.description = spec.kind == PotentialKind::hydrogen  ? "hydrogen sum representation"
                      : spec.kind == PotentialKind::coulomb ? "Coulomb sum representation"
                                                            : "sum representation";
    double worst = 0.0;
    double worst_relative = 0.0;
    const auto& x = out.values;
    for (long n = 1; n < spec.b; ++n) {
        const auto i = static_cast<std::size_t>(n);
        const double factor = 2.0 - spec.lambda + potential[i];
        const double r = std::abs(x[i + 1] - factor * x[i] + x[i - 1]);
        const double scale = std::max({1.0, std::abs(x[i + 1]), std::abs(factor * x[i]), std::abs(x[i - 1])});
        worst = std::max(worst, r);
        worst_relative = std::max(worst_relative, r / scale);
    }
    out.residual_norm = worst;
    out.relative_residual = worst_relative;
    return out;
}

SolutionBasis hydrogen_basis(double lambda) {
    const Complex root = std::sqrt(Complex{lambda * (lambda - 4.0), 0.0});
    const Complex m1 = (-lambda + root) / 2.0;
    const Complex m2 = (-lambda - root) / 2.0;
    if (std::abs(1.0 + m1) == 0.0) throw NonRegressiveRoot(m1);
    if (std::abs(1.0 + m2) == 0.0) throw NonRegressiveRoot(m2);
    return SolutionBasis({{Sequence([m1](long n) { return delta_exp(m1, n, 0); }), "e_m1(n, 0)"},
                          {Sequence([m2](long n) { return delta_exp(m2, n, 0); }), "e_m2(n, 0)"}},
                         0);
}

Complex hydrogen_casoratian(double lambda) { return -std::sqrt(Complex{lambda * (lambda - 4.0), 0.0}); }

std::vector<Eigenvalue> eigenvalue_scan(const SchrodingerSpec& spec, const ScanOptions& options) {
    spec.validate();
    if (options.resolution < 16) throw InvalidArgument("scan resolution must be at least 16");
    const auto potential = tabulate_potential(spec);
    const long b = spec.b;
    auto xb = [&](double theta) { return sum_representation(potential, theta, b).back(); };

    const double theta_lo = theta_of(std::clamp(options.lambda_min, 0.0, 4.0));
    const double theta_hi = theta_of(std::clamp(options.lambda_max, 0.0, 4.0));
    const int steps = options.resolution;

    // samples are independent; evaluate them concurrently, merge in order
    std::vector<double> thetas(static_cast<std::size_t>(steps) - 1);
    for (int k = 1; k < steps; ++k) thetas[static_cast<std::size_t>(k) - 1] = kPi * k / steps;
    std::vector<double> values(thetas.size());
    {
        const std::size_t chunks = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
        const std::size_t per = (thetas.size() + chunks - 1) / chunks;
        std::vector<std::future<void>> jobs;
        for (std::size_t c = 0; c < chunks; ++c) {
            jobs.push_back(std::async(std::launch::async, [&, c] {
                for (std::size_t i = c * per; i < std::min(thetas.size(), (c + 1) * per); ++i) {
                    values[i] = xb(thetas[i]);
                }
            }));
        }
        for (auto& j : jobs) j.get();
    }

    double scale = 1.0;
    for (double v : values) scale = std::max(scale, std::abs(v));

    std::vector<Eigenvalue> out;
    auto record = [&](double theta, double value) {
        const double lambda = 2.0 - 2.0 * std::cos(theta);
        if (theta <= theta_lo || theta >= theta_hi) return;
        out.push_back({lambda, theta, std::abs(value)});
    };
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0.0) {
            record(thetas[i], 0.0);
            continue;
        }
        if (i + 1 == values.size() || values[i + 1] == 0.0) continue;
        if ((values[i] > 0.0) == (values[i + 1] > 0.0)) continue;
        double lo = thetas[i];
        double hi = thetas[i + 1];
        double f_lo = values[i];
        double mid = 0.5 * (lo + hi);
        double f_mid = xb(mid);
        for (int iter = 0; iter < 200; ++iter) {
            mid = 0.5 * (lo + hi);
            f_mid = xb(mid);
            if (f_mid == 0.0 || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * mid) break;
            if ((f_mid > 0.0) == (f_lo > 0.0)) {
                lo = mid;
                f_lo = f_mid;
            } else {
                hi = mid;
            }
        }
        if (std::abs(f_mid) > 1e-10 * scale) {
            throw NumericalFailure("bisection could not reduce |x(b)| below tolerance near theta = " +
                                   std::to_string(mid));
        }
        record(mid, f_mid);
    }
    return out;
}

}  // namespace dcalc
