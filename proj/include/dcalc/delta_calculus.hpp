#pragma once

// Delta (forward-difference) calculus on the integer lattice N_a = {a, a+1, ...}:
// the difference operator, delta exponentials, delta sine/cosine, the
// circle-plus group operation and delta integration.

#include "dcalc/sequence.hpp"

namespace dcalc {

/// Exponent argument p(n) of a delta exponential. Constants are stored as a
/// single value; varying sequences are evaluated on demand.
class RegressiveSequence {
public:
    static RegressiveSequence constant(Complex p);
    RegressiveSequence(Sequence p, long base = 0);

    Complex operator()(long n) const;
    bool is_constant() const noexcept { return constant_.has_value(); }
    long base() const noexcept { return base_; }

private:
    RegressiveSequence() = default;

    std::optional<Complex> constant_;
    Sequence values_;
    long base_ = 0;
};

/// f(n+1) - f(n).
Complex delta(const Sequence& f, long n);

/// k-th forward difference, by repeated differencing of f(n..n+k).
Complex delta_power(const Sequence& f, long n, int k);

/// e_p(n, s): prod_{tau=s}^{n-1} (1 + p(tau)) for n >= s, and the reciprocal
/// product over tau = n..s-1 otherwise. Throws NonRegressive naming the first
/// tau (in evaluation order) with 1 + p(tau) = 0.
Complex delta_exp(const RegressiveSequence& p, long n, long s);
Complex delta_exp(Complex p, long n, long s);

/// p (+) q = p + q + pq.
Complex circle_plus(Complex p, Complex q);

/// cos_p(n, a) = (e_{ip} + e_{-ip}) / 2 and sin_p(n, a) = (e_{ip} - e_{-ip}) / (2i).
/// For real p the imaginary part is checked against the real-extraction guard
/// and dropped.
Complex delta_cos(Complex p, long n, long a);
Complex delta_sin(Complex p, long n, long a);

/// Half-open delta integral: sum_{n=c}^{d-1} f(n); zero when c >= d.
Complex delta_integral(const Sequence& f, long c, long d);

/// |Im z| <= guard * (1 + |Re z|).
bool is_effectively_real(Complex z, double guard = 1e-9);

/// Real part of z after the guard check; throws ImaginaryResidue otherwise.
double real_part_checked(Complex z, double guard = 1e-9);

}  // namespace dcalc
