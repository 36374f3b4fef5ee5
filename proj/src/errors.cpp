#include "dcalc/errors.hpp"
#include "dcalc/rational.hpp"

#include <cmath>
#include <sstream>

namespace dcalc {

namespace {

std::string describe_root(std::complex<double> m) {
    std::ostringstream os;
    os.precision(17);
    os << "non-regressive characteristic root m = " << m.real();
    if (m.imag() != 0.0) {
        os << (m.imag() < 0 ? " - " : " + ") << std::abs(m.imag()) << "i";
    }
    os << " (|1 + m| too small)";
    return os.str();
}

std::string describe_syntax(std::size_t offset, const std::vector<std::string>& expected,
                            const std::string& found) {
    std::string msg = "syntax error at offset " + std::to_string(offset) + ": found " + found +
                      ", expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
    }
    return msg;
}

}  // namespace

NonRegressive::NonRegressive(long point)
    : Error("sequence is not regressive: 1 + p(n) = 0 at n = " + std::to_string(point)),
      point_(point) {}

NonRegressiveRoot::NonRegressiveRoot(std::complex<double> root)
    : Error(describe_root(root)), root_(root) {}

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         const std::string& found)
    : Error(describe_syntax(offset, expected, found)),
      offset_(offset),
      expected_(std::move(expected)) {}

Rational to_rational(double value) {
    if (!std::isfinite(value)) throw InvalidArgument("cannot convert a non-finite value to a rational");
    int exponent = 0;
    double mantissa = std::frexp(value, &exponent);
    // mantissa * 2^53 is an exact integer
    const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
    exponent -= 53;
    Rational r{scaled};
    if (exponent > 0) {
        r *= Rational{boost::multiprecision::cpp_int{1} << exponent};
    } else if (exponent < 0) {
        r /= Rational{boost::multiprecision::cpp_int{1} << -exponent};
    }
    return r;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace dcalc
