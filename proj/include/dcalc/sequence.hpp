#pragma once

#include "dcalc/potential_expr.hpp"
#include "dcalc/rational.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <string>

namespace dcalc {

using Complex = std::complex<double>;

/// Complex-valued function on the integer lattice, optionally restricted to
/// n >= first. Evaluation outside the domain or to a non-finite value throws
/// OutOfDomain.
class Sequence {
public:
    using Fn = std::function<Complex(long)>;

    Sequence() = default;
    Sequence(Fn fn, std::optional<long> first = std::nullopt);

    static Sequence constant(Complex value);

    Complex operator()(long n) const;
    std::optional<long> first() const noexcept { return first_; }
    bool empty() const noexcept { return !fn_; }

private:
    Fn fn_;
    std::optional<long> first_;
};

/// Real-valued forcing or potential q(n). When the underlying source is a
/// rational expression it can also be evaluated exactly; otherwise the exact
/// value is the double result read as a dyadic rational.
class RealSequence {
public:
    using Fn = std::function<double(long)>;

    RealSequence();  // identically zero
    explicit RealSequence(Fn fn, std::string description = "custom");

    static RealSequence constant(double value);
    static RealSequence from_expr(const PotentialExpr& expr);
    static RealSequence parse(std::string_view text);

    double operator()(long n) const;
    Rational exact(long n) const;
    bool has_exact_source() const noexcept { return static_cast<bool>(exact_); }
    const std::string& description() const noexcept { return description_; }

    Sequence as_complex() const;

    friend RealSequence operator+(const RealSequence& a, const RealSequence& b);
    RealSequence shifted(long offset) const;

private:
    Fn fn_;
    std::function<std::optional<Rational>(long)> exact_;
    std::string description_;
};

}  // namespace dcalc
