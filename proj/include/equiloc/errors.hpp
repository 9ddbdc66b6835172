#pragma once

#include <stdexcept>
#include <string>

namespace equiloc {

// All failures that carry mathematical meaning get their own type, so tests
// and the CLI can tell a genuine inconsistency (exit 1) from misuse (exit 2).

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// sum_fractions: combined numerator is not divisible by the common denominator.
struct NotPolynomialError : Error {
    using Error::Error;
};

// euler_of_virtual: a weight-0 summand appeared with negative sign.
struct ZeroDeformationWeightError : Error {
    using Error::Error;
};

// todd_inverse_series with m = 0.
struct ZeroTwistError : Error {
    using Error::Error;
};

// graded_piece asked beyond the series truncation order.
struct OrderTooLowError : Error {
    using Error::Error;
};

// virtual_tangent: self-pairing lacks the unit scalar term.
struct BadConstantTermError : Error {
    using Error::Error;
};

// localization total landed in a nonzero power of the generator.
struct LambdaDegreeMismatchError : Error {
    using Error::Error;
};

// degree outside the cataloged range 1..4.
struct UnsupportedDegreeError : Error {
    using Error::Error;
};

// genus-0 recursion demanded an invariant beyond the cataloged degrees.
struct NeedsHigherN0Error : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

// text input (catalog, corpus, CLI rationals) failed to parse.
struct ParseError : Error {
    using Error::Error;
};

// unknown curve/point label.
struct UnknownLabelError : Error {
    using Error::Error;
};

}  // namespace equiloc
