#pragma once

#include <gmpxx.h>

#include <string>

#include "equiloc/errors.hpp"

namespace equiloc {

// Exact rational scalar. GMP keeps values canonical under arithmetic; the
// helpers below canonicalize explicit p/q construction and fix the text form
// to "p" or "p/q" with q > 0.

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZeroError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r);

// Accepts "p" or "p/q" with optional sign, arbitrary precision.
Rational parse_rational(const std::string& text);

}  // namespace equiloc
