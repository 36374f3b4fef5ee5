// dcalc: command-line front end for the delta-calculus solvers.
//
//   dcalc solve   --problem hydrogen|coulomb|relaxation|custom ...
//   dcalc scan    --problem hydrogen|coulomb|custom --b B ...
//   dcalc compare-tables [--table ID]
//   dcalc verify  [--group KEY]
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 numerical failure.

#include "dcalc/errors.hpp"
#include "dcalc/published_tables.hpp"
#include "dcalc/recurrence_oracle.hpp"
#include "dcalc/relaxation.hpp"
#include "dcalc/report.hpp"
#include "dcalc/schrodinger.hpp"
#include "dcalc/verify.hpp"
#include "dcalc/vop_engine.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace dcalc;

enum class Problem { hydrogen, coulomb, relaxation, custom };
enum class Oracle { on, off, exact };
enum class Output { csv, pretty };

struct RunConfig {
    Problem problem = Problem::hydrogen;
    std::optional<double> lambda;
    double lambda_min = 0.0;
    double lambda_max = 4.0;
    std::optional<std::string> q;
    double A = 1.0;
    int l = 2;
    long b = 25;
    std::optional<long> n_max;
    std::vector<double> coeffs;
    std::vector<double> seeds;
    Oracle oracle = Oracle::on;
    int precision = 6;
    Output output = Output::csv;
    bool plot = false;
    int resolution = 1024;
    std::string table;
    std::string group;
    std::string inject_fault;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string num(double v, const RunConfig& cfg) { return format_number(v, cfg.precision); }

void emit(const TextTable& table, const RunConfig& cfg) {
    std::cout << (cfg.output == Output::csv ? table.csv() : table.pretty());
}

std::string default_q(Problem p) {
    switch (p) {
    case Problem::hydrogen:
    case Problem::coulomb:
        return "1/sqrt(n)";
    case Problem::relaxation:
        return "1/(n+1)";
    case Problem::custom:
        return "0";
    }
    return "0";
}

RealSequence forcing(const RunConfig& cfg) {
    try {
        return RealSequence::parse(cfg.q.value_or(default_q(cfg.problem)));
    } catch (const SyntaxError& e) {
        throw ValidationError(std::string("--q: ") + e.what());
    }
}

SchrodingerSpec schrodinger_spec(const RunConfig& cfg) {
    SchrodingerSpec spec;
    spec.kind = cfg.problem == Problem::coulomb  ? PotentialKind::coulomb
                : cfg.problem == Problem::custom ? PotentialKind::custom
                                                 : PotentialKind::hydrogen;
    spec.A = cfg.A;
    spec.l = cfg.l;
    spec.b = cfg.b;
    spec.q = forcing(cfg);
    spec.lambda = cfg.lambda.value_or(1.0);
    if (spec.b < 2) throw ValidationError("--b must be at least 2");
    if (spec.l < 0) throw ValidationError("--l must be nonnegative");
    return spec;
}

void validate(const RunConfig& cfg, const std::string& command) {
    const bool custom = cfg.problem == Problem::custom;
    if (command == "solve") {
        if (!custom && (!cfg.coeffs.empty() || !cfg.seeds.empty())) {
            throw ValidationError("--coeffs and --seeds apply only to --problem custom");
        }
        if (custom) {
            if (cfg.coeffs.empty()) throw ValidationError("--problem custom requires --coeffs r_0,...,r_{N-1}");
            if (cfg.seeds.size() != cfg.coeffs.size()) {
                throw ValidationError(fmt::format("--problem custom requires --seeds with {} initial values x(0..{})",
                                                  cfg.coeffs.size(), cfg.coeffs.size() - 1));
            }
        }
        if (cfg.n_max && *cfg.n_max < 0) throw ValidationError("--n-max must be nonnegative");
    }
    if (command == "scan") {
        if (cfg.problem == Problem::relaxation) throw ValidationError("scan supports hydrogen, coulomb and custom");
        if (cfg.lambda_min >= cfg.lambda_max) throw ValidationError("--lambda-min must be below --lambda-max");
        if (cfg.resolution < 16) throw ValidationError("--resolution must be at least 16");
    }
}

void maybe_plot(const std::vector<double>& values, long first, const RunConfig& cfg) {
    if (cfg.plot) std::cout << '\n' << ascii_plot(values, first);
}

int cmd_solve_schrodinger(const RunConfig& cfg) {
    const auto spec = schrodinger_spec(cfg);
    const auto solution = sum_representation_solve(spec);
    const auto rec = expand_schrodinger(spec.lambda, potential_sequence(spec));
    const std::vector<double> seeds{0.0, std::sin(solution.parameters.at("theta"))};
    const auto residuals = pointwise_residual(rec, solution, seeds);

    std::vector<std::string> headers{"n", "x_sum"};
    std::optional<OracleRun> oracle;
    if (cfg.oracle != Oracle::off) {
        oracle = run(rec, seeds, spec.b, cfg.oracle == Oracle::exact ? OracleMode::exact : OracleMode::floating);
        headers.push_back("x_oracle");
    }
    headers.push_back("residual");
    TextTable table(headers);
    for (long n = 1; n <= spec.b; ++n) {
        std::vector<std::string> row{std::to_string(n), num(solution[n], cfg)};
        if (oracle) row.push_back(num(oracle->solution[n], cfg));
        row.push_back(num(residuals[static_cast<std::size_t>(n)], cfg));
        table.add_row(std::move(row));
    }
    emit(table, cfg);
    maybe_plot({solution.values.begin() + 1, solution.values.end()}, 1, cfg);
    return 0;
}

int cmd_solve_relaxation(const RunConfig& cfg) {
    const auto spec = RelaxationSpec::make(cfg.lambda.value_or(0.0625), forcing(cfg), cfg.n_max.value_or(13));
    const auto closed = closed_form(spec);
    const auto rec = expand(spec.problem());
    const auto residuals = pointwise_residual(rec, closed.solution, {1.0, 1.0, 1.0, 1.0});
    return [&] {
        std::vector<std::string> headers{"n", "x_closed"};
        std::optional<OracleRun> oracle;
        if (cfg.oracle != Oracle::off) {
            oracle = relaxation_oracle(spec, cfg.oracle == Oracle::exact ? OracleMode::exact : OracleMode::floating);
            headers.push_back("x_oracle");
        }
        headers.push_back("residual");
        TextTable table(headers);
        for (long n = 0; n <= spec.n_max; ++n) {
            std::vector<std::string> row{std::to_string(n), num(closed.solution[n], cfg)};
            if (oracle) row.push_back(num(oracle->solution[n], cfg));
            row.push_back(num(residuals[static_cast<std::size_t>(n)], cfg));
            table.add_row(std::move(row));
        }
        emit(table, cfg);
        maybe_plot(closed.solution.values, 0, cfg);
        return 0;
    }();
}

int cmd_solve_custom(const RunConfig& cfg) {
    const DifferenceProblem problem{DeltaOperator(cfg.coeffs), forcing(cfg),
                                    DifferenceProblem::initial_values(cfg.seeds)};
    const long n_max = std::max<long>(cfg.n_max.value_or(24), static_cast<long>(cfg.coeffs.size()) - 1);
    const auto solution = solve(problem, n_max);
    const auto rec = expand(problem);
    const auto residuals = pointwise_residual(rec, solution, cfg.seeds);
    std::vector<std::string> headers{"n", "x_closed"};
    std::optional<OracleRun> oracle;
    if (cfg.oracle != Oracle::off) {
        oracle = run(rec, cfg.seeds, n_max, cfg.oracle == Oracle::exact ? OracleMode::exact : OracleMode::floating);
        headers.push_back("x_oracle");
    }
    headers.push_back("residual");
    TextTable table(headers);
    for (long n = 0; n <= n_max; ++n) {
        std::vector<std::string> row{std::to_string(n), num(solution[n], cfg)};
        if (oracle) row.push_back(num(oracle->solution[n], cfg));
        row.push_back(num(residuals[static_cast<std::size_t>(n)], cfg));
        table.add_row(std::move(row));
    }
    emit(table, cfg);
    maybe_plot(solution.values, 0, cfg);
    return 0;
}

int cmd_solve(const RunConfig& cfg) {
    switch (cfg.problem) {
    case Problem::hydrogen:
    case Problem::coulomb:
        return cmd_solve_schrodinger(cfg);
    case Problem::relaxation:
        return cmd_solve_relaxation(cfg);
    case Problem::custom:
        return cmd_solve_custom(cfg);
    }
    return 2;
}

int cmd_scan(const RunConfig& cfg) {
    const auto spec = schrodinger_spec(cfg);
    ScanOptions options;
    options.resolution = cfg.resolution;
    options.lambda_min = cfg.lambda_min;
    options.lambda_max = cfg.lambda_max;
    const auto eigenvalues = eigenvalue_scan(spec, options);
    TextTable table({"k", "lambda", "theta", "abs_xb"});
    for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
        const auto& e = eigenvalues[k];
        table.add_row({std::to_string(k + 1), num(e.lambda, cfg), num(e.theta, cfg), num(e.abs_xb, cfg)});
    }
    emit(table, cfg);
    return 0;
}

int cmd_compare_tables(const RunConfig& cfg) {
    TextTable table({"table", "n", "closed_form", "oracle", "published", "abs_dev_closed_oracle",
                     "abs_dev_oracle_published", "rel_dev_oracle_published"});
    auto add = [&](const std::string& id, long n, double closed, double oracle, double published) {
        const double dev = std::abs(oracle - published);
        table.add_row({id, std::to_string(n), num(closed, cfg), num(oracle, cfg), num(published, cfg),
                       num(std::abs(closed - oracle), cfg), num(dev, cfg),
                       num(dev / std::max(1.0, std::abs(published)), cfg)});
    };

    struct SturmCase {
        std::string id;
        const published::Column* column;
        Problem problem;
        double lambda;
    };
    const double quarter = 2.0 - std::sqrt(2.0);
    const std::vector<SturmCase> sturm{
        {"hydrogen_lambda_1", &published::kHydrogenLambda1, Problem::hydrogen, 1.0},
        {"coulomb_lambda_1", &published::kCoulombLambda1, Problem::coulomb, 1.0},
        {"hydrogen_lambda_2-sqrt2", &published::kHydrogenLambdaQuarter, Problem::hydrogen, quarter},
        {"coulomb_lambda_2-sqrt2", &published::kCoulombLambdaQuarter, Problem::coulomb, quarter},
    };
    bool any = false;
    for (const auto& c : sturm) {
        if (!cfg.table.empty() && cfg.table != c.id) continue;
        any = true;
        RunConfig local = cfg;
        local.problem = c.problem;
        local.lambda = c.lambda;
        local.q.reset();
        local.A = 1.0;
        local.l = 2;
        local.b = 25;
        const auto spec = schrodinger_spec(local);
        const auto solution = sum_representation_solve(spec);
        const auto oracle = run(expand_schrodinger(spec.lambda, potential_sequence(spec)),
                                {0.0, std::sin(solution.parameters.at("theta"))}, spec.b, OracleMode::exact);
        for (std::size_t i = 0; i < c.column->rows.size(); ++i) {
            const long n = c.column->rows[i];
            add(c.id, n, solution[n], oracle.solution[n], c.column->values[i]);
        }
    }

    struct RelaxationCase {
        std::string id;
        const published::Column* column;
        double lambda;
        const char* q;
    };
    const std::vector<RelaxationCase> relaxation{
        {"relaxation_0.0625_reciprocal", &published::kRelaxation0625Reciprocal, 0.0625, "1/(n+1)"},
        {"relaxation_0.0625_sqrt", &published::kRelaxation0625Sqrt, 0.0625, "1/sqrt(n+1)"},
        {"relaxation_0.1296_reciprocal", &published::kRelaxation1296Reciprocal, 0.1296, "1/(n+1)"},
        {"relaxation_0.1296_sqrt", &published::kRelaxation1296Sqrt, 0.1296, "1/sqrt(n+1)"},
    };
    for (const auto& c : relaxation) {
        if (!cfg.table.empty() && cfg.table != c.id) continue;
        any = true;
        const auto spec = RelaxationSpec::make(c.lambda, RealSequence::parse(c.q), 13);
        const auto report = table_compare(spec, c.column->values);
        for (const auto& row : report.rows) add(c.id, row.n, row.closed_form, row.oracle, *row.published);
    }
    if (!any) throw ValidationError("unknown --table '" + cfg.table + "'");
    emit(table, cfg);
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    VerifyOptions options;
    if (!cfg.group.empty()) options.group = cfg.group;
    if (cfg.inject_fault == "circle_plus") {
        options.circle_plus = [](Complex p, Complex q) { return p + q; };
    } else if (!cfg.inject_fault.empty()) {
        throw ValidationError("unknown --inject-fault '" + cfg.inject_fault + "'");
    }
    std::vector<PropertyResult> results;
    try {
        results = run_verification(options);
    } catch (const InvalidArgument& e) {
        throw ValidationError(e.what());
    }
    int failed = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << " [" << r.group << "]: " << r.detail << '\n';
        if (!r.passed) ++failed;
    }
    std::cout << fmt::format("{}/{} property groups passed\n", results.size() - failed, results.size());
    if (failed > 0) {
        for (const auto& r : results) {
            if (!r.passed) std::cerr << "error: property failed: " << r.name << '\n';
        }
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delta-calculus difference equation solvers"};
    app.set_config("--config", "", "flat key=value file mirroring the flag names; flags override it");
    app.require_subcommand(1);
    RunConfig cfg;

    const std::map<std::string, Problem> problems{{"hydrogen", Problem::hydrogen},
                                                  {"coulomb", Problem::coulomb},
                                                  {"relaxation", Problem::relaxation},
                                                  {"custom", Problem::custom}};
    const std::map<std::string, Oracle> oracles{{"on", Oracle::on}, {"off", Oracle::off}, {"exact", Oracle::exact}};
    const std::map<std::string, Output> outputs{{"csv", Output::csv}, {"pretty", Output::pretty}};

    app.add_option("--problem", cfg.problem, "hydrogen, coulomb, relaxation or custom")
        ->transform(CLI::CheckedTransformer(problems, CLI::ignore_case));
    app.add_option("--lambda", cfg.lambda, "spectral parameter");
    app.add_option("--lambda-min", cfg.lambda_min, "scan range lower end");
    app.add_option("--lambda-max", cfg.lambda_max, "scan range upper end");
    app.add_option("--q", cfg.q, "potential or forcing expression in n");
    app.add_option("--A", cfg.A, "hydrogen Coulomb strength");
    app.add_option("--l", cfg.l, "angular quantum number");
    app.add_option("--b", cfg.b, "right endpoint");
    app.add_option("--n-max", cfg.n_max, "last grid point");
    app.add_option("--coeffs", cfg.coeffs, "r_0,...,r_{N-1} for --problem custom")->delimiter(',');
    app.add_option("--seeds", cfg.seeds, "x(0),...,x(N-1) for --problem custom")->delimiter(',');
    app.add_option("--oracle", cfg.oracle, "on, off or exact")->transform(CLI::CheckedTransformer(oracles));
    app.add_option("--precision", cfg.precision, "significant digits")->check(CLI::Range(1, 17));
    app.add_option("--output", cfg.output, "csv or pretty")->transform(CLI::CheckedTransformer(outputs));
    app.add_flag("--plot", cfg.plot, "append a 64x16 ASCII plot");
    app.add_option("--resolution", cfg.resolution, "theta samples for scan");
    app.add_option("--table", cfg.table, "compare-tables: restrict to one table id");
    app.add_option("--group", cfg.group, "verify: run one property group");
    app.add_option("--inject-fault", cfg.inject_fault, "verify: replace circle_plus with a faulty version")
        ->group("");

    auto* solve_cmd = app.add_subcommand("solve", "solve one problem and print the solution table")->fallthrough();
    auto* scan_cmd = app.add_subcommand("scan", "find eigenvalues with x(b) = 0")->fallthrough();
    auto* compare_cmd =
        app.add_subcommand("compare-tables", "closed form vs oracle vs published values")->fallthrough();
    auto* verify_cmd = app.add_subcommand("verify", "run the property suite")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        std::string command = solve_cmd->parsed()     ? "solve"
                              : scan_cmd->parsed()    ? "scan"
                              : compare_cmd->parsed() ? "compare-tables"
                                                      : "verify";
        validate(cfg, command);
        if (solve_cmd->parsed()) return cmd_solve(cfg);
        if (scan_cmd->parsed()) return cmd_scan(cfg);
        if (compare_cmd->parsed()) return cmd_compare_tables(cfg);
        if (verify_cmd->parsed()) return cmd_verify(cfg);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: numerical failure: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
