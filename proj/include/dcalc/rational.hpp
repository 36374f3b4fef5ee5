#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dcalc {

using Rational = boost::multiprecision::cpp_rational;

/// Exact value of a finite double (every double is a dyadic rational).
Rational to_rational(double value);

double to_double(const Rational& value);

}  // namespace dcalc
