#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcalc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A sequence was evaluated outside the points where it is defined.
class OutOfDomain : public Error {
public:
    using Error::Error;
};

/// 1 + p(n) vanished at `point`.
class NonRegressive : public Error {
public:
    explicit NonRegressive(long point);
    long point() const noexcept { return point_; }

private:
    long point_;
};

/// A characteristic root m with |1 + m| too small to build a delta exponential.
class NonRegressiveRoot : public Error {
public:
    explicit NonRegressiveRoot(std::complex<double> root);
    std::complex<double> root() const noexcept { return root_; }

private:
    std::complex<double> root_;
};

class NumericalFailure : public Error {
public:
    using Error::Error;
};

class UnsupportedShift : public Error {
public:
    using Error::Error;
};

/// Complex pair alpha +- i beta with alpha = -1; the trigonometric basis is undefined.
class DegenerateComplexPair : public Error {
public:
    using Error::Error;
};

class SingularCasoratian : public Error {
public:
    using Error::Error;
};

/// The side conditions do not determine the free constants.
class SingularConditions : public Error {
public:
    using Error::Error;
};

class NotOscillatory : public Error {
public:
    using Error::Error;
};

/// A quantity that should be real carried an imaginary part above the guard.
class ImaginaryResidue : public Error {
public:
    using Error::Error;
};

class ClosedFormDivergence : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Parse failure in a potential expression.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found);
    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Evaluation of a potential expression left the real domain.
class EvalError : public OutOfDomain {
public:
    using OutOfDomain::OutOfDomain;
};

}  // namespace dcalc
