// Acceptance checks, one line per criterion.
//
//   acceptance        run every criterion
//   acceptance K      run criterion K only (exit status reflects it)

#include "dcalc/delta_calculus.hpp"
#include "dcalc/published_tables.hpp"
#include "dcalc/recurrence_oracle.hpp"
#include "dcalc/relaxation.hpp"
#include "dcalc/schrodinger.hpp"
#include "dcalc/verify.hpp"
#include "dcalc/vop_engine.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace dcalc;

namespace {

struct Verdict {
    bool passed = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double time_limit;  // seconds, 0 for none
    std::function<Verdict()> check;
};

double round_sig(double v, int digits) {
    if (v == 0.0) return 0.0;
    return std::stod(fmt::format("{:.{}g}", v, digits));
}

SchrodingerSpec sturm_spec(PotentialKind kind, double lambda) {
    SchrodingerSpec spec;
    spec.kind = kind;
    spec.lambda = lambda;
    spec.A = 1.0;
    spec.l = 2;
    spec.q = RealSequence::parse("1/sqrt(n)");
    spec.b = 25;
    return spec;
}

// Compares a computed column with the tabulated one; returns the failing rows.
std::vector<std::string> column_mismatches(const GridSolution& x, const published::Column& column, double tol,
                                           double& worst) {
    std::vector<std::string> bad;
    for (std::size_t i = 0; i < column.rows.size(); ++i) {
        const long n = column.rows[i];
        const double dev = std::abs(round_sig(x[n], 6) - column.values[i]);
        worst = std::max(worst, dev);
        if (dev > tol) bad.push_back(fmt::format("n={} computed {} tabulated {}", n, round_sig(x[n], 6),
                                                 column.values[i]));
    }
    return bad;
}

bool anchor(const GridSolution& x, long n, double value) { return std::abs(round_sig(x[n], 6) - value) <= 1e-6; }

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
    return out;
}

Verdict hydrogen_table() {
    const auto x = sum_representation_solve(sturm_spec(PotentialKind::hydrogen, 1.0));
    double worst = 0.0;
    const auto bad = column_mismatches(x, published::kHydrogenLambda1, 1e-4, worst);
    const bool anchors = anchor(x, 1, 0.866025) && anchor(x, 2, 2.59808) && anchor(x, 3, 4.86821);
    return {bad.empty() && anchors, bad.empty() ? fmt::format("14 rows, max deviation {:.3g}", worst) : join(bad)};
}

Verdict coulomb_table() {
    const auto x = sum_representation_solve(sturm_spec(PotentialKind::coulomb, 1.0));
    double worst = 0.0;
    const auto bad = column_mismatches(x, published::kCoulombLambda1, 1e-3, worst);
    const bool anchors = anchor(x, 2, 5.19615) && anchor(x, 3, 10.6024);
    return {bad.empty() && anchors, bad.empty() ? fmt::format("14 rows, max deviation {:.3g}", worst) : join(bad)};
}

Verdict quarter_tables() {
    const double lambda = 2.0 - std::sqrt(2.0);
    const auto h = sum_representation_solve(sturm_spec(PotentialKind::hydrogen, lambda));
    const auto c = sum_representation_solve(sturm_spec(PotentialKind::coulomb, lambda));
    double worst = 0.0;
    auto bad = column_mismatches(h, published::kHydrogenLambdaQuarter, 1e-3, worst);
    for (auto& s : column_mismatches(c, published::kCoulombLambdaQuarter, 1e-3, worst)) bad.push_back("coulomb " + s);
    const bool anchors = anchor(h, 1, 0.707107) && anchor(h, 2, 2.41421);
    return {bad.empty() && anchors,
            bad.empty() ? fmt::format("28 rows, max deviation {:.3g}", worst) : join(bad)};
}

Verdict relaxation_property() {
    const char* forcings[] = {"0", "1", "1/(n+1)", "1/sqrt(n+1)", "n"};
    double worst = 0.0;
    double worst_start = 0.0;
    for (double s : {0.3, 0.5, 0.6, 0.9}) {
        for (const char* q : forcings) {
            const auto spec = RelaxationSpec::make(std::pow(s, 4), RealSequence::parse(q), 20);
            const auto solved = closed_form(spec);
            worst = std::max(worst, solved.solution.relative_residual);
            for (long n = 0; n < 4; ++n) worst_start = std::max(worst_start, std::abs(solved.solution[n] - 1.0));
        }
    }
    const auto report = table_compare(RelaxationSpec::make(0.0625, RealSequence::parse("1/(n+1)"), 13),
                                      published::kRelaxation0625Reciprocal.values);
    const bool columns = report.rows.size() == 14 && report.rows[4].oracle == 2.0625 &&
                         report.rows[4].published.has_value() && report.rows[4].abs_dev_oracle_published.has_value();
    return {worst <= 1e-8 && worst_start <= 1e-14 && columns,
            fmt::format("20 configurations, max relative residual {:.3g}, max |x(0..3) - 1| {:.3g}, report rows {}",
                        worst, worst_start, report.rows.size())};
}

Verdict law_suite() {
    std::vector<std::string> failed;
    int count = 0;
    for (const char* group : {"exponential-identity", "difference-law", "product-law", "reciprocity", "pythagorean"}) {
        VerifyOptions options;
        options.group = group;
        for (const auto& r : run_verification(options)) {
            ++count;
            if (!r.passed) failed.push_back(r.name + ": " + r.detail);
        }
    }
    return {failed.empty() && count == 5, failed.empty() ? "5 law groups, 100 random inputs each" : join(failed)};
}

Verdict vop_oracle() {
    std::mt19937_64 rng(20240607);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const auto problem = random_problem(rng, 1 + t % 4);
        const auto x = solve(problem, 24);
        const auto oracle = run(expand(problem), seeds_from_conditions(problem), 24, OracleMode::exact);
        worst = std::max(worst, max_relative_deviation(x.values, oracle.solution.values));
    }
    return {worst <= 1e-8, fmt::format("200 problems, N = 1..4, max pointwise relative deviation {:.3g}", worst)};
}

Verdict casoratian_constancy() {
    double worst = 0.0;
    for (double lambda : {0.5, 1.0, 2.0, 3.0, 3.5}) {
        const auto basis = hydrogen_basis(lambda);
        const Complex expected = -std::sqrt(Complex(lambda * (lambda - 4.0)));
        for (long n = 0; n < 10; ++n) worst = std::max(worst, std::abs(casoratian(basis, n) - expected) / std::abs(expected));
    }
    return {worst <= 1e-10, fmt::format("5 lambdas x 10 points, max relative error {:.3g}", worst)};
}

Verdict free_spectrum() {
    double worst = 0.0;
    std::vector<std::string> bad;
    for (long b = 2; b <= 12; ++b) {
        SchrodingerSpec spec;
        spec.kind = PotentialKind::custom;
        spec.q = RealSequence::constant(0.0);
        spec.b = b;
        const auto found = eigenvalue_scan(spec);
        if (found.size() != static_cast<std::size_t>(b - 1)) {
            bad.push_back(fmt::format("b={} found {}", b, found.size()));
            continue;
        }
        for (long k = 1; k < b; ++k) {
            const double expected = 2.0 - 2.0 * std::cos(k * std::numbers::pi / b);
            worst = std::max(worst, std::abs(found[k - 1].lambda - expected));
        }
    }
    return {bad.empty() && worst <= 1e-9,
            bad.empty() ? fmt::format("b = 2..12, max error {:.3g}", worst) : join(bad)};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria{
        {1, "hydrogen table at lambda = 1", 1.0, hydrogen_table},
        {2, "Coulomb table at lambda = 1", 1.0, coulomb_table},
        {3, "both tables at lambda = 2 - sqrt 2", 1.0, quarter_tables},
        {4, "relaxation solution satisfies the equation", 2.0, relaxation_property},
        {5, "delta-calculus law suite", 1.0, law_suite},
        {6, "variation of parameters matches the exact oracle", 10.0, vop_oracle},
        {7, "hydrogen Casoratian is constant", 0.0, casoratian_constancy},
        {8, "free-case spectrum", 2.0, free_spectrum},
    };
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failures = 0;
    int ran = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit > 0.0 && elapsed >= c.time_limit) {
            v.passed = false;
            v.detail += fmt::format(" (runtime {:.2f} s over the {:.0f} s limit)", elapsed, c.time_limit);
        }
        std::cout << fmt::format("criterion {}: {} | {} | {} ({:.3f} s)\n", c.id, v.passed ? "PASS" : "FAIL", c.title,
                                 v.detail, elapsed);
        if (!v.passed) ++failures;
    }
    if (ran == 0) {
        std::cerr << "error: unknown criterion\n";
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
