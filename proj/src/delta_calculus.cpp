#include "dcalc/delta_calculus.hpp"

#include "dcalc/errors.hpp"

#include <cmath>
#include <vector>

namespace dcalc {

namespace {

Complex binary_power(Complex base, unsigned long exponent) {
    Complex result{1.0, 0.0};
    while (exponent > 0) {
        if (exponent & 1UL) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

}  // namespace

RegressiveSequence RegressiveSequence::constant(Complex p) {
    RegressiveSequence seq;
    seq.constant_ = p;
    return seq;
}

RegressiveSequence::RegressiveSequence(Sequence p, long base) : values_(std::move(p)), base_(base) {}

Complex RegressiveSequence::operator()(long n) const {
    if (constant_) return *constant_;
    if (n < base_) {
        throw OutOfDomain("regressive sequence evaluated at n = " + std::to_string(n) +
                          " below its origin " + std::to_string(base_));
    }
    return values_(n);
}

Complex delta(const Sequence& f, long n) { return f(n + 1) - f(n); }

Complex delta_power(const Sequence& f, long n, int k) {
    std::vector<Complex> values(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) values[static_cast<std::size_t>(j)] = f(n + j);
    for (int order = 0; order < k; ++order) {
        for (int j = 0; j < k - order; ++j) {
            values[static_cast<std::size_t>(j)] =
                values[static_cast<std::size_t>(j) + 1] - values[static_cast<std::size_t>(j)];
        }
    }
    return values[0];
}

Complex delta_exp(const RegressiveSequence& p, long n, long s) {
    if (p.is_constant()) {
        const Complex factor = 1.0 + p(0);
        if (factor == 0.0) throw NonRegressive(std::min(n, s));
        const Complex magnitude = binary_power(factor, static_cast<unsigned long>(std::labs(n - s)));
        return n >= s ? magnitude : 1.0 / magnitude;
    }
    const long lo = std::min(n, s);
    const long hi = std::max(n, s);
    Complex product{1.0, 0.0};
    for (long tau = lo; tau < hi; ++tau) {
        const Complex factor = 1.0 + p(tau);
        if (factor == 0.0) throw NonRegressive(tau);
        product *= factor;
    }
    return n >= s ? product : 1.0 / product;
}

Complex delta_exp(Complex p, long n, long s) { return delta_exp(RegressiveSequence::constant(p), n, s); }

Complex circle_plus(Complex p, Complex q) { return p + q + p * q; }

namespace {

constexpr Complex kI{0.0, 1.0};

Complex finish_trig(Complex value, Complex p) {
    if (p.imag() == 0.0) return {real_part_checked(value), 0.0};
    return value;
}

}  // namespace

Complex delta_cos(Complex p, long n, long a) {
    const Complex value = (delta_exp(kI * p, n, a) + delta_exp(-kI * p, n, a)) / 2.0;
    return finish_trig(value, p);
}

Complex delta_sin(Complex p, long n, long a) {
    const Complex value = (delta_exp(kI * p, n, a) - delta_exp(-kI * p, n, a)) / (2.0 * kI);
    return finish_trig(value, p);
}

Complex delta_integral(const Sequence& f, long c, long d) {
    Complex sum{0.0, 0.0};
    for (long n = c; n < d; ++n) sum += f(n);
    return sum;
}

bool is_effectively_real(Complex z, double guard) {
    return std::abs(z.imag()) <= guard * (1.0 + std::abs(z.real()));
}

double real_part_checked(Complex z, double guard) {
    if (!is_effectively_real(z, guard)) {
        throw ImaginaryResidue("imaginary part " + std::to_string(z.imag()) +
                               " exceeds the real-extraction guard for real part " +
                               std::to_string(z.real()));
    }
    return z.real();
}

}  // namespace dcalc
