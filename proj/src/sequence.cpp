#include "dcalc/sequence.hpp"

#include "dcalc/errors.hpp"

#include <cmath>

namespace dcalc {

Sequence::Sequence(Fn fn, std::optional<long> first) : fn_(std::move(fn)), first_(first) {}

Sequence Sequence::constant(Complex value) {
    return Sequence([value](long) { return value; });
}

Complex Sequence::operator()(long n) const {
    if (!fn_) throw OutOfDomain("evaluating an empty sequence");
    if (first_ && n < *first_) {
        throw OutOfDomain("sequence evaluated at n = " + std::to_string(n) + " below its origin " +
                          std::to_string(*first_));
    }
    const Complex v = fn_(n);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw OutOfDomain("sequence is not finite at n = " + std::to_string(n));
    }
    return v;
}

RealSequence::RealSequence() : RealSequence(constant(0.0)) {}

RealSequence::RealSequence(Fn fn, std::string description)
    : fn_(std::move(fn)), description_(std::move(description)) {}

RealSequence RealSequence::constant(double value) {
    RealSequence seq([value](long) { return value; }, "constant");
    const Rational exact = to_rational(value);
    seq.exact_ = [exact](long) -> std::optional<Rational> { return exact; };
    return seq;
}

RealSequence RealSequence::from_expr(const PotentialExpr& expr) {
    RealSequence seq([expr](long n) { return expr(n); }, expr.source());
    seq.exact_ = [expr](long n) { return expr.evaluate_exact(n); };
    return seq;
}

RealSequence RealSequence::parse(std::string_view text) { return from_expr(PotentialExpr::parse(text)); }

double RealSequence::operator()(long n) const {
    const double v = fn_(n);
    if (!std::isfinite(v)) throw OutOfDomain("sequence is not finite at n = " + std::to_string(n));
    return v;
}

Rational RealSequence::exact(long n) const {
    if (exact_) {
        if (auto r = exact_(n)) return *r;
    }
    return to_rational((*this)(n));
}

Sequence RealSequence::as_complex() const {
    auto self = *this;
    return Sequence([self](long n) { return Complex{self(n), 0.0}; });
}

RealSequence operator+(const RealSequence& a, const RealSequence& b) {
    RealSequence sum([a, b](long n) { return a(n) + b(n); }, a.description_ + " + " + b.description_);
    sum.exact_ = [a, b](long n) -> std::optional<Rational> { return Rational{a.exact(n) + b.exact(n)}; };
    if (!a.exact_ || !b.exact_) sum.exact_ = nullptr;
    return sum;
}

RealSequence RealSequence::shifted(long offset) const {
    auto self = *this;
    RealSequence out([self, offset](long n) { return self(n + offset); }, description_);
    if (exact_) {
        out.exact_ = [self, offset](long n) -> std::optional<Rational> { return self.exact(n + offset); };
    }
    return out;
}

}  // namespace dcalc
