#include "dcalc/relaxation.hpp"

#include "dcalc/delta_calculus.hpp"
#include "dcalc/errors.hpp"
#include "dcalc/vop_engine.hpp"

#include <cmath>

namespace dcalc {

namespace {

using LComplex = std::complex<long double>;
constexpr LComplex kI{0.0L, 1.0L};
constexpr double kRealityGuard = 1e-9;
constexpr double kEquationTolerance = 1e-8;

template <typename T>
T power(T base, long n) {
    T result{1};
    for (long k = 0; k < n; ++k) result *= base;
    return result;
}

// q_0..q_3 in the published constants
std::array<long double, 4> first_forcing(const RelaxationSpec& spec) {
    return {spec.q(0), spec.q(1), spec.q(2), spec.q(3)};
}

std::array<LComplex, 4> terms(const RelaxationSpec& spec, long i) {
    const long double s = spec.s;
    const long double qi = spec.q(i);
    const long double s3 = s * s * s;
    const long double s6 = s3 * s3;
    const long double den = 8.0L * s6 * power<long double>(1.0L - s * s * s * s, i + 1);
    const LComplex a = power<LComplex>(1.0L - kI * s, i);  // (1 - is)^i
    const LComplex c = power<LComplex>(1.0L + kI * s, i);  // (1 + is)^i
    const long double one_minus_s2 = power<long double>(1.0L - s * s, i + 1);
    return {
        -2.0L * s3 * power<long double>(1.0L + s, i) * power<long double>(1.0L + s * s, i) *
            (1.0L + s + s * s + s3) * qi / den,
        -2.0L * power<long double>(1.0L - s, i) * s3 * power<long double>(1.0L + s * s, i) *
            (-1.0L + s - s * s + s3) * qi / den,
        2.0L * s3 * (kI * (a - c) + (a + c) * s) * one_minus_s2 * qi / den,
        -2.0L * s3 * ((a + c) - kI * (a - c) * s) * one_minus_s2 * qi / den,
    };
}

LComplex published_value(const RelaxationSpec& spec, long n) {
    const long double s = spec.s;
    const auto [q0, q1, q2, q3] = first_forcing(spec);
    const long double s2 = s * s;
    const long double s3 = s2 * s;
    const long double s4 = s2 * s2;
    const long double d3 = 4.0L * s3 * (-1.0L + s4);
    const LComplex a = power<LComplex>(1.0L - kI * s, n);
    const LComplex c = power<LComplex>(1.0L + kI * s, n);
    const long double up = power<long double>(1.0L + s, n);
    const long double down = power<long double>(1.0L - s, n);

    LComplex x = (a + c) * (s4 * s2 + q0 - s2 * (1.0L + q0) - 2.0L * q1 + q2) / (4.0L * s2 * (-1.0L + s4));
    x += up * (s4 * s3 + q0 - s3 * (1.0L + q0) + s2 * (q0 - q1) - 3.0L * q1 + 3.0L * q2 -
               s * (q0 - 2.0L * q1 + q2) - q3) / d3;
    x -= kI * (-a + c) * ((-1.0L + s2) * q0 - (-3.0L + s2) * q1 - 3.0L * q2 + q3) / d3;
    x += down * (s4 * s3 - q0 - s3 * (1.0L + q0) + 3.0L * q1 + s2 * (-q0 + q1) - 3.0L * q2 -
                 s * (q0 - 2.0L * q1 + q2) + q3) / d3;

    LComplex sum_sin{0.0L}, sum_cos{0.0L}, sum_up{0.0L}, sum_down{0.0L};
    for (long i = 0; i <= n; ++i) {
        const long double qi = spec.q(i);
        const LComplex ai = power<LComplex>(1.0L - kI * s, i);
        const LComplex ci = power<LComplex>(1.0L + kI * s, i);
        const long double decay = power<long double>(1.0L - s2, i + 1) / power<long double>(1.0L - s4, i + 1);
        sum_sin += -(ai + ci - kI * (ai - ci) * s) * decay * qi / (4.0L * s3);
        sum_cos += (kI * (ai - ci) + (ai + ci) * s) * decay * qi / (4.0L * s3);
        sum_up += -power<long double>(1.0L - s, i) * power<long double>(1.0L + s2, i) * (-1.0L + s - s2 + s3) *
                  qi / (power<long double>(1.0L - s4, i + 1) * 4.0L * s3);
        sum_down += -power<long double>(1.0L + s, i) * power<long double>(1.0L + s2, i) * (1.0L + s + s2 + s3) *
                    qi / (power<long double>(1.0L - s4, i + 1) * 4.0L * s3);
    }
    x -= 0.5L * kI * (-a + c) * sum_sin;
    x += 0.5L * (a + c) * sum_cos;
    x += up * sum_up + down * sum_down;
    return x;
}

double checked_real(LComplex z, long n) {
    const Complex v{static_cast<double>(z.real()), static_cast<double>(z.imag())};
    if (!is_effectively_real(v, kRealityGuard)) {
        throw ClosedFormDivergence("closed form has imaginary part " + std::to_string(v.imag()) + " at n = " +
                                   std::to_string(n));
    }
    return v.real();
}

}  // namespace

RelaxationSpec RelaxationSpec::make(double lambda, RealSequence q, long n_max) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) throw InvalidArgument("relaxation needs lambda > 0");
    if (n_max < 3) throw InvalidArgument("relaxation needs n_max >= 3");
    RelaxationSpec spec;
    spec.lambda = lambda;
    spec.s = std::sqrt(std::sqrt(lambda));
    if (spec.s == 1.0) throw InvalidArgument("s = 1 (lambda = 1) makes the root -s non-regressive");
    spec.q = std::move(q);
    spec.n_max = n_max;
    return spec;
}

DifferenceProblem RelaxationSpec::problem() const {
    return DifferenceProblem{op(), q, DifferenceProblem::initial_values({1.0, 1.0, 1.0, 1.0})};
}

SolutionBasis relaxation_basis(double s) {
    if (s == 1.0) throw NonRegressiveRoot(Complex{-1.0, 0.0});
    const Complex up{1.0 + s, 0.0};
    const Complex down{1.0 - s, 0.0};
    const Complex plus{1.0, s};
    const Complex minus{1.0, -s};
    return SolutionBasis(
        {
            {Sequence([down](long n) { return power<Complex>(down, n); }), "(1 - s)^n"},
            {Sequence([up](long n) { return power<Complex>(up, n); }), "(1 + s)^n"},
            {Sequence([=](long n) { return (power<Complex>(plus, n) + power<Complex>(minus, n)) / 2.0; }),
             "((1 + is)^n + (1 - is)^n) / 2"},
            {Sequence([=](long n) {
                 return (power<Complex>(plus, n) - power<Complex>(minus, n)) / Complex{0.0, 2.0};
             }),
             "((1 + is)^n - (1 - is)^n) / (2i)"},
        },
        0);
}

std::array<Complex, 4> parameter_terms(const RelaxationSpec& spec, long i) {
    const auto t = terms(spec, i);
    std::array<Complex, 4> out;
    for (std::size_t j = 0; j < 4; ++j) out[j] = Complex(static_cast<double>(t[j].real()), static_cast<double>(t[j].imag()));
    return out;
}

std::array<Complex, 4> parameter_sums(const RelaxationSpec& spec, long n) {
    std::array<LComplex, 4> sums{};
    for (long i = 0; i <= n; ++i) {
        const auto t = terms(spec, i);
        for (std::size_t j = 0; j < 4; ++j) sums[j] += t[j];
    }
    std::array<Complex, 4> out;
    for (std::size_t j = 0; j < 4; ++j) out[j] = Complex(static_cast<double>(sums[j].real()), static_cast<double>(sums[j].imag()));
    return out;
}

std::array<double, 4> published_constants(const RelaxationSpec& spec) {
    const long double s = spec.s;
    const auto [q0, q1, q2, q3] = first_forcing(spec);
    const long double s2 = s * s;
    const long double s3 = s2 * s;
    const long double s4 = s2 * s2;
    const long double d = 4.0L * s3 * (-1.0L + s4);
    return {
        static_cast<double>((s4 * s3 - q0 - s3 * (1.0L + q0) + 3.0L * q1 + s2 * (-q0 + q1) - 3.0L * q2 -
                             s * (q0 - 2.0L * q1 + q2) + q3) / d),
        static_cast<double>((s4 * s3 + q0 - s3 * (1.0L + q0) + s2 * (q0 - q1) - 3.0L * q1 + 3.0L * q2 -
                             s * (q0 - 2.0L * q1 + q2) - q3) / d),
        static_cast<double>((s4 * s2 + q0 - s2 * (1.0L + q0) - 2.0L * q1 + q2) / (2.0L * s2 * (-1.0L + s4))),
        static_cast<double>(((-1.0L + s2) * q0 - (-3.0L + s2) * q1 - 3.0L * q2 + q3) / (2.0L * s3 * (-1.0L + s4))),
    };
}

double published_closed_form(const RelaxationSpec& spec, long n) { return checked_real(published_value(spec, n), n); }

RelaxationSolution closed_form(const RelaxationSpec& spec) {
    const DeltaOperator op = spec.op();
    RelaxationSolution out;

    GridSolution published;
    for (long n = 0; n <= spec.n_max; ++n) published.values.push_back(published_closed_form(spec, n));
    record_residual(published, op, spec.q);
    out.published_relative_residual = published.relative_residual;

    bool initial_ok = true;
    for (long n = 0; n < 4; ++n) initial_ok = initial_ok && std::abs(published[n] - 1.0) <= 1e-12;

    if (initial_ok && published.relative_residual <= kEquationTolerance) {
        const auto c = published_constants(spec);
        out.solution = std::move(published);
        out.constants = {c[0], c[1], c[2], c[3]};
        out.published_form_used = true;
    } else {
        // parameter sums over i < n with the published summands, constants refitted
        const SolutionBasis basis = relaxation_basis(spec.s);
        GridSolution particular;
        std::array<LComplex, 4> v{};
        for (long n = 0; n <= spec.n_max; ++n) {
            Complex x{0.0, 0.0};
            for (int j = 0; j < 4; ++j) {
                x += Complex(static_cast<double>(v[static_cast<std::size_t>(j)].real()),
                             static_cast<double>(v[static_cast<std::size_t>(j)].imag())) *
                     basis.value(j, n);
            }
            particular.values.push_back(real_part_checked(x, kRealityGuard));
            const auto t = terms(spec, n);
            for (std::size_t j = 0; j < 4; ++j) v[j] += t[j];
        }
        const auto constants = fit_constants(basis, particular, spec.problem().conditions);
        out.solution = assemble(basis, constants, particular);
        for (std::size_t j = 0; j < 4; ++j) out.constants[j] = constants[j];
        out.published_form_used = false;
    }
    out.solution.description = out.published_form_used ? "relaxation closed form (published constants)"
                                                        : "relaxation closed form (fitted constants)";
    out.solution.parameters = {{"lambda", spec.lambda}, {"s", spec.s}};
    record_residual(out.solution, op, spec.q);
    return out;
}

OracleRun relaxation_oracle(const RelaxationSpec& spec, OracleMode mode) {
    return run(expand(spec.problem()), {1.0, 1.0, 1.0, 1.0}, spec.n_max, mode);
}

ComparisonReport table_compare(const RelaxationSpec& spec, const std::vector<double>& published) {
    const auto closed = closed_form(spec);
    const auto oracle = relaxation_oracle(spec, OracleMode::exact);
    ComparisonReport report;
    report.title = "relaxation lambda = " + std::to_string(spec.lambda) + ", q(n) = " + spec.q.description();
    report.published_form_used = closed.published_form_used;
    for (long n = 0; n <= spec.n_max; ++n) {
        ComparisonRow row;
        row.n = n;
        row.closed_form = closed.solution[n];
        row.oracle = oracle.solution[n];
        row.abs_dev_closed_oracle = std::abs(row.closed_form - row.oracle);
        if (static_cast<std::size_t>(n) < published.size()) {
            row.published = published[static_cast<std::size_t>(n)];
            row.abs_dev_oracle_published = std::abs(row.oracle - *row.published);
            row.rel_dev_oracle_published = *row.abs_dev_oracle_published / std::max(1.0, std::abs(*row.published));
        }
        report.rows.push_back(row);
    }
    return report;
}

}  // namespace dcalc
