#include "dcalc/verify.hpp"

#include "dcalc/characteristic_basis.hpp"
#include "dcalc/delta_calculus.hpp"
#include "dcalc/errors.hpp"
#include "dcalc/potential_expr.hpp"
#include "dcalc/published_tables.hpp"
#include "dcalc/recurrence_oracle.hpp"
#include "dcalc/relaxation.hpp"
#include "dcalc/schrodinger.hpp"
#include "dcalc/vop_engine.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dcalc {

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(Complex a, Complex b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

double round_significant(double value, int digits) {
    if (value == 0.0) return 0.0;
    const double magnitude = std::floor(std::log10(std::abs(value)));
    const double factor = std::pow(10.0, digits - 1 - magnitude);
    return std::round(value * factor) / factor;
}

struct Check {
    std::string key;
    std::string name;
    std::function<PropertyResult(const VerifyOptions&)> run;
};

PropertyResult result(const Check& c, bool ok, std::string detail) { return {c.key, c.name, ok, std::move(detail)}; }

Complex random_regressive(std::mt19937_64& rng, bool complex_valued) {
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    return complex_valued ? Complex{u(rng), u(rng)} : Complex{u(rng), 0.0};
}

std::vector<Check> all_checks() {
    std::vector<Check> checks;

    checks.push_back({"exponential-identity", "e_0(n,s) = 1 and e_p(s,s) = 1", [](const VerifyOptions& o) {
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<long> grid(-20, 40);
        for (int t = 0; t < 100; ++t) {
            const long n = grid(rng), s = grid(rng);
            if (delta_exp(0.0, n, s) != 1.0) return PropertyResult{"", "", false, fmt::format("e_0({},{}) != 1", n, s)};
            const Complex p = random_regressive(rng, t % 2 == 0);
            if (delta_exp(p, s, s) != 1.0) return PropertyResult{"", "", false, fmt::format("e_p({0},{0}) != 1", s)};
        }
        return PropertyResult{"", "", true, "100 random cases"};
    }});

    checks.push_back({"difference-law", "D e_p(n,s) = p(n) e_p(n,s)", [](const VerifyOptions& o) {
        std::mt19937_64 rng(o.seed + 1);
        std::uniform_real_distribution<double> u(-0.45, 0.45);
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            const long s = static_cast<long>(rng() % 10);
            RegressiveSequence p = RegressiveSequence::constant(random_regressive(rng, t % 2 == 0));
            if (t % 3 == 0) {
                const double a = u(rng), b = u(rng);
                p = RegressiveSequence(Sequence([a, b](long k) { return Complex{a + b * std::sin(0.7 * k), 0.0}; }), 0);
            }
            const Sequence e([&p, s](long n) { return delta_exp(p, n, s); });
            for (long n = s; n <= s + 30; ++n) worst = std::max(worst, rel_err(delta(e, n), p(n) * e(n)));
        }
        return PropertyResult{"", "", worst <= 1e-12, fmt::format("max relative error {:.3g} (tol 1e-12)", worst)};
    }});

    checks.push_back({"product-law", "product law e_p e_q = e_(p (+) q)", [](const VerifyOptions& o) {
        std::mt19937_64 rng(o.seed + 2);
        auto plus = o.circle_plus ? o.circle_plus : circle_plus;
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            const Complex p = random_regressive(rng, t % 2 == 0);
            const Complex q = random_regressive(rng, t % 3 == 0);
            const long s = static_cast<long>(rng() % 10);
            for (long n = s - 5; n <= s + 25; ++n) {
                worst = std::max(worst, rel_err(delta_exp(p, n, s) * delta_exp(q, n, s), delta_exp(plus(p, q), n, s)));
            }
        }
        return PropertyResult{"", "", worst <= 1e-12, fmt::format("max relative error {:.3g} (tol 1e-12)", worst)};
    }});

    checks.push_back({"reciprocity", "e_p(n,s) e_p(s,n) = 1", [](const VerifyOptions& o) {
        std::mt19937_64 rng(o.seed + 3);
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            const Complex p = random_regressive(rng, t % 2 == 0);
            const long n = static_cast<long>(rng() % 40) - 10, s = static_cast<long>(rng() % 40) - 10;
            worst = std::max(worst, rel_err(delta_exp(p, n, s) * delta_exp(p, s, n), 1.0));
        }
        return PropertyResult{"", "", worst <= 1e-12, fmt::format("max relative error {:.3g} (tol 1e-12)", worst)};
    }});

    checks.push_back({"pythagorean", "cos_p^2 + sin_p^2 = e_(p^2)", [](const VerifyOptions& o) {
        std::mt19937_64 rng(o.seed + 4);
        std::uniform_real_distribution<double> u(-1.5, 1.5);
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            const double p = u(rng);
            const long a = static_cast<long>(rng() % 5);
            for (long n = a; n <= a + 30; ++n) {
                const Complex c = delta_cos(p, n, a), s = delta_sin(p, n, a);
                worst = std::max(worst, rel_err(c * c + s * s, delta_exp(p * p, n, a)));
            }
        }
        return PropertyResult{"", "", worst <= 1e-10, fmt::format("max relative error {:.3g} (tol 1e-10)", worst)};
    }});

    checks.push_back({"trig-bridge", "e_alpha cos_gamma = cos(n theta), e_alpha sin_gamma = sin(n theta)",
                      [](const VerifyOptions& o) {
        std::mt19937_64 rng(o.seed + 5);
        std::uniform_real_distribution<double> u(0.01, kPi - 0.01);
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            double theta = u(rng);
            if (std::abs(theta - kPi / 2) < 0.01) theta += 0.02;
            const double alpha = std::cos(theta) - 1.0, gamma = std::tan(theta);
            for (long n = 0; n <= 64; ++n) {
                const Complex e = delta_exp(alpha, n, 0);
                worst = std::max(worst, std::abs(e * delta_cos(gamma, n, 0) - std::cos(n * theta)));
                worst = std::max(worst, std::abs(e * delta_sin(gamma, n, 0) - std::sin(n * theta)));
            }
        }
        return PropertyResult{"", "", worst <= 1e-9, fmt::format("max absolute error {:.3g} (tol 1e-9)", worst)};
    }});

    checks.push_back({"roots", "roots rebuild the characteristic polynomial", [](const VerifyOptions& o) {
        std::mt19937_64 rng(o.seed + 6);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        double worst = 0.0;
        int tried = 0;
        for (int t = 0; t < 200; ++t) {
            CharPolynomial poly;
            const int degree = 1 + static_cast<int>(rng() % 6);
            for (int k = 0; k < degree; ++k) poly.coefficients.push_back(u(rng));
            RootSet roots;
            try {
                roots = find_roots(poly);
            } catch (const NonRegressiveRoot&) {
                continue;
            }
            ++tried;
            const auto rebuilt = polynomial_from_roots(roots);
            for (int k = 0; k < degree; ++k) {
                const double r = poly.coefficients[static_cast<std::size_t>(k)];
                worst = std::max(worst, std::abs(rebuilt[static_cast<std::size_t>(k)] - r) / std::max(1.0, std::abs(r)));
            }
        }
        return PropertyResult{"", "", worst <= 1e-8,
                              fmt::format("{} polynomials, max relative error {:.3g} (tol 1e-8)", tried, worst)};
    }});

    checks.push_back({"basis-residual", "basis functions solve the homogeneous recurrence", [](const VerifyOptions& o) {
        std::mt19937_64 rng(o.seed + 7);
        std::vector<std::vector<double>> polys{{-1, 3, -3}, {0.0225, -0.06, -0.44, 0.4}, {0.25, 1.0}};
        for (int t = 0; t < 40; ++t) {
            auto p = random_problem(rng);
            polys.push_back(p.op.coefficients());
        }
        double worst = 0.0;
        for (const auto& r : polys) {
            const DeltaOperator op(r);
            const auto basis = build_basis(find_roots(CharPolynomial{r}), 0);
            const auto rec = expand(op, RealSequence::constant(0.0));
            for (int j = 0; j < basis.size(); ++j) {
                GridSolution x;
                double scale = 0.0;
                for (long n = 0; n <= 32; ++n) {
                    x.values.push_back(real_part_checked(basis.value(j, n)));
                    scale = std::max(scale, std::abs(x.values.back()));
                }
                const auto taps = rec.taps_as_double();
                for (std::size_t n = 0; n + taps.size() < x.values.size(); ++n) {
                    double predicted = 0.0;
                    for (std::size_t k = 0; k < taps.size(); ++k) predicted += taps[k] * x.values[n + k];
                    worst = std::max(worst, std::abs(x.values[n + taps.size()] - predicted) / scale);
                }
            }
        }
        return PropertyResult{"", "", worst <= 1e-9, fmt::format("max residual / max|x| {:.3g} (tol 1e-9)", worst)};
    }});

    checks.push_back({"casoratian", "hydrogen Casoratian = -sqrt(lambda(lambda-4))", [](const VerifyOptions&) {
        double worst = 0.0;
        for (double lambda : {0.5, 1.0, 2.0, 3.0, 3.5}) {
            const auto basis = hydrogen_basis(lambda);
            const Complex expected = hydrogen_casoratian(lambda);
            for (long n = 0; n < 10; ++n) worst = std::max(worst, rel_err(casoratian(basis, n), expected));
        }
        return PropertyResult{"", "", worst <= 1e-10, fmt::format("max relative error {:.3g} (tol 1e-10)", worst)};
    }});

    checks.push_back({"cramer", "Cramer increments solve the Casoratian system", [](const VerifyOptions& o) {
        std::mt19937_64 rng(o.seed + 8);
        double worst = 0.0;
        for (int t = 0; t < 40; ++t) {
            const auto p = random_problem(rng);
            const auto basis = build_basis(find_roots(char_poly_from_equation(p.op)), 0, PairForm::exponential);
            const int order = basis.size();
            for (long n = 0; n <= 12; ++n) {
                const auto system = casoratian_system(basis, n);
                const auto dv = parameter_deltas(system, p.forcing, n);
                for (int k = 0; k < order; ++k) {
                    Complex lhs{0.0, 0.0};
                    double scale = std::abs(p.forcing(n));
                    for (int i = 0; i < order; ++i) {
                        lhs += dv[static_cast<std::size_t>(i)] * system.matrix(k, i);
                        scale += std::abs(dv[static_cast<std::size_t>(i)] * system.matrix(k, i));
                    }
                    const double rhs = k == order - 1 ? p.forcing(n) : 0.0;
                    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, scale));
                }
            }
        }
        return PropertyResult{"", "", worst <= 1e-10, fmt::format("max scaled defect {:.3g} (tol 1e-10)", worst)};
    }});

    checks.push_back({"vop-oracle", "variation of parameters matches the exact oracle", [](const VerifyOptions& o) {
        std::mt19937_64 rng(o.seed + 9);
        double worst = 0.0;
        for (int t = 0; t < o.vop_problems; ++t) {
            const auto p = random_problem(rng, 1 + t % 4);
            const auto solved = solve(p, 24);
            const auto oracle = run(expand(p), seeds_from_conditions(p), 24, OracleMode::exact);
            worst = std::max(worst, max_relative_deviation(solved.values, oracle.solution.values));
        }
        return PropertyResult{"", "", worst <= 1e-8,
                              fmt::format("{} problems, max relative deviation {:.3g} (tol 1e-8)", o.vop_problems, worst)};
    }});

    checks.push_back({"linearity", "solve(q1 + q2) = solve(q1) + solve(q2)", [](const VerifyOptions& o) {
        std::mt19937_64 rng(o.seed + 10);
        double worst = 0.0;
        const std::vector<RealSequence> forcings{RealSequence::parse("1"), RealSequence::parse("n"),
                                                 RealSequence::parse("1/(n+1)")};
        for (int t = 0; t < 30; ++t) {
            auto p = random_problem(rng);
            for (auto& c : p.conditions) c.value = 0.0;
            const auto& q1 = forcings[static_cast<std::size_t>(t) % 3];
            const auto& q2 = forcings[static_cast<std::size_t>(t + 1) % 3];
            auto with = [&](const RealSequence& q) {
                auto copy = p;
                copy.forcing = q;
                return solve(copy, 24).values;
            };
            const auto a = with(q1 + q2), b = with(q1), c = with(q2);
            double scale = 1.0;
            for (std::size_t n = 0; n < a.size(); ++n) scale = std::max({scale, std::abs(b[n]), std::abs(c[n])});
            for (std::size_t n = 0; n < a.size(); ++n) worst = std::max(worst, std::abs(a[n] - b[n] - c[n]) / scale);
        }
        return PropertyResult{"", "", worst <= 1e-9, fmt::format("max scaled defect {:.3g} (tol 1e-9)", worst)};
    }});

    checks.push_back({"defect", "solutions reproduce q(n) under the operator", [](const VerifyOptions& o) {
        std::mt19937_64 rng(o.seed + 11);
        double worst = 0.0;
        for (int t = 0; t < 60; ++t) worst = std::max(worst, solve(random_problem(rng), 24).relative_residual);
        return PropertyResult{"", "", worst <= 1e-8, fmt::format("max relative residual {:.3g} (tol 1e-8)", worst)};
    }});

    checks.push_back({"tables", "published hydrogen and Coulomb tables", [](const VerifyOptions&) {
        struct Case {
            const published::Column* column;
            PotentialKind kind;
            double lambda;
            double tolerance;
        };
        const std::vector<Case> cases{
            {&published::kHydrogenLambda1, PotentialKind::hydrogen, 1.0, 1e-4},
            {&published::kCoulombLambda1, PotentialKind::coulomb, 1.0, 1e-3},
            {&published::kHydrogenLambdaQuarter, PotentialKind::hydrogen, 2.0 - std::sqrt(2.0), 1e-3},
            {&published::kCoulombLambdaQuarter, PotentialKind::coulomb, 2.0 - std::sqrt(2.0), 1e-3},
        };
        int matched = 0, errata = 0;
        std::string failures;
        for (const auto& c : cases) {
            SchrodingerSpec spec;
            spec.kind = c.kind;
            spec.lambda = c.lambda;
            const auto x = sum_representation_solve(spec);
            for (std::size_t i = 0; i < c.column->rows.size(); ++i) {
                long row = c.column->rows[i];
                for (const auto& e : published::kErrata) {
                    if (e.column == c.column && e.row == row) {
                        row = e.matches_row;
                        ++errata;
                    }
                }
                const double got = round_significant(x[row], 6);
                if (std::abs(got - c.column->values[i]) <= c.tolerance) {
                    ++matched;
                } else {
                    failures += fmt::format(" [{} n={}: {} vs {}]", c.column->name, c.column->rows[i], got,
                                            c.column->values[i]);
                }
            }
        }
        return PropertyResult{"", "", failures.empty(),
                              fmt::format("{} values matched ({} known misprints checked at the neighbouring row){}",
                                          matched, errata, failures)};
    }});

    checks.push_back({"free-spectrum", "free spectrum has b-1 eigenvalues 2-2cos(k pi/b)", [](const VerifyOptions&) {
        double worst = 0.0;
        std::string failures;
        for (long b = 2; b <= 12; ++b) {
            SchrodingerSpec spec;
            spec.kind = PotentialKind::custom;
            spec.q = RealSequence::constant(0.0);
            spec.b = b;
            const auto eig = eigenvalue_scan(spec);
            if (static_cast<long>(eig.size()) != b - 1) {
                failures += fmt::format(" [b={}: {} eigenvalues]", b, eig.size());
                continue;
            }
            for (long k = 1; k < b; ++k) {
                worst = std::max(worst, std::abs(eig[static_cast<std::size_t>(k) - 1].lambda -
                                                 (2.0 - 2.0 * std::cos(k * kPi / b))));
            }
        }
        return PropertyResult{"", "", failures.empty() && worst <= 1e-9,
                              fmt::format("b = 2..12, max error {:.3g} (tol 1e-9){}", worst, failures)};
    }});

    checks.push_back({"relaxation-oracle", "relaxation closed form satisfies the equation", [](const VerifyOptions&) {
        double worst = 0.0;
        double worst_oracle = 0.0;
        bool initial = true;
        for (double s : {0.3, 0.5, 0.6, 0.9}) {
            for (const char* q : {"0", "1", "n", "1/(n+1)", "1/sqrt(n+1)"}) {
                const auto spec = RelaxationSpec::make(std::pow(s, 4), RealSequence::parse(q), 20);
                const auto cf = closed_form(spec);
                worst = std::max(worst, cf.solution.relative_residual);
                for (long n = 0; n < 4; ++n) initial = initial && std::abs(cf.solution[n] - 1.0) <= 1e-12;
                const auto oracle = relaxation_oracle(spec, OracleMode::exact);
                worst_oracle = std::max(worst_oracle, max_relative_deviation(cf.solution.values, oracle.solution.values));
            }
        }
        return PropertyResult{"", "", initial && worst <= 1e-8 && worst_oracle <= 1e-8,
                              fmt::format("max relative residual {:.3g}, max deviation from oracle {:.3g} (tol 1e-8)",
                                          worst, worst_oracle)};
    }});

    checks.push_back({"parameter-sums", "published parameter summands equal the Cramer increments",
                      [](const VerifyOptions&) {
        double worst = 0.0;
        for (double s : {0.3, 0.5, 0.6, 0.9}) {
            const auto spec = RelaxationSpec::make(std::pow(s, 4), RealSequence::parse("1/(n+1)"), 20);
            const auto basis = relaxation_basis(s);
            for (long n = 0; n <= 20; ++n) {
                const auto generic = parameter_deltas(casoratian_system(basis, n), spec.q, n);
                const auto printed = parameter_terms(spec, n);
                for (std::size_t j = 0; j < 4; ++j) {
                    worst = std::max(worst, std::abs(generic[j] - printed[j]) / std::max(1e-300, std::abs(generic[j])));
                }
            }
        }
        return PropertyResult{"", "", worst <= 1e-10, fmt::format("max relative error {:.3g} (tol 1e-10)", worst)};
    }});

    checks.push_back({"expressions", "expression precedence and round trip", [](const VerifyOptions&) {
        const bool precedence = PotentialExpr::parse("2+3*4")(0) == 14.0 && PotentialExpr::parse("2^3^2")(0) == 512.0 &&
                                PotentialExpr::parse("-n^2")(3) == -9.0;
        int round_trips = 0;
        for (const char* text : {"1/sqrt(n)", "1/(n+1)", "1/sqrt(n+1)", "2/n - 6/n^2", "-(n-1)^2", "a"}) {
            try {
                const auto e = PotentialExpr::parse(text);
                if (PotentialExpr::parse(e.to_string()) == e) ++round_trips;
            } catch (const SyntaxError&) {
                ++round_trips;  // "a" must be rejected
            }
        }
        return PropertyResult{"", "", precedence && round_trips == 6,
                              fmt::format("precedence {}, round trips {}/6", precedence ? "ok" : "wrong", round_trips)};
    }});

    return checks;
}

}  // namespace

std::vector<std::string> verification_groups() {
    std::vector<std::string> keys;
    for (const auto& c : all_checks()) keys.push_back(c.key);
    return keys;
}

std::vector<PropertyResult> run_verification(const VerifyOptions& options) {
    const auto checks = all_checks();
    if (options.group &&
        std::none_of(checks.begin(), checks.end(), [&](const Check& c) { return c.key == *options.group; })) {
        throw InvalidArgument("unknown verification group '" + *options.group + "'");
    }
    std::vector<PropertyResult> out;
    for (const auto& c : checks) {
        if (options.group && c.key != *options.group) continue;
        try {
            auto r = c.run(options);
            out.push_back(result(c, r.passed, r.detail));
        } catch (const std::exception& e) {
            out.push_back(result(c, false, std::string("exception: ") + e.what()));
        }
    }
    return out;
}

DifferenceProblem random_problem(std::mt19937_64& rng, int order) {
    std::uniform_real_distribution<double> coefficient(-2.0, 2.0);
    std::uniform_real_distribution<double> seed(-1.0, 1.0);
    static const char* forcings[] = {"0", "1", "n", "1/(n+1)"};
    for (;;) {
        const int n = order > 0 ? order : 1 + static_cast<int>(rng() % 4);
        std::vector<double> r;
        for (int k = 0; k < n; ++k) r.push_back(coefficient(rng));
        const char* q = forcings[rng() % 4];
        std::vector<double> seeds;
        for (int k = 0; k < n; ++k) seeds.push_back(seed(rng));
        RootSet roots;
        try {
            roots = find_roots(CharPolynomial{r});
        } catch (const Error&) {
            continue;
        }
        bool ok = true;
        for (std::size_t i = 0; i < roots.size() && ok; ++i) {
            ok = roots[i].multiplicity == 1 && std::abs(1.0 + roots[i].value) >= 0.05;
            for (std::size_t j = i + 1; j < roots.size() && ok; ++j) ok = std::abs(roots[i].value - roots[j].value) >= 0.05;
        }
        if (!ok) continue;
        return DifferenceProblem{DeltaOperator(r), RealSequence::parse(q), DifferenceProblem::initial_values(seeds)};
    }
}

double max_relative_deviation(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t n = 0; n < std::min(a.size(), b.size()); ++n) {
        worst = std::max(worst, std::abs(a[n] - b[n]) / std::max(1.0, std::abs(b[n])));
    }
    return worst;
}

}  // namespace dcalc
