#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "equiloc/rational.hpp"

namespace equiloc {

// Characters of one-dimensional torus representations live in Z[t, t^-1];
// with rational coefficients this is the coefficient ring for every fixed-point
// computation downstream. Terms are kept sparse and sorted by exponent, zero
// coefficients are never stored, so operator== is structural equality.

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(std::initializer_list<std::pair<int, Rational>> terms);

    static LaurentPoly one() { return term(1, 0); }
    static LaurentPoly t(int e) { return term(1, e); }
    static LaurentPoly term(Rational c, int e);

    bool is_zero() const { return terms_.empty(); }
    bool is_integral() const;  // every coefficient lies in Z
    Rational coeff(int e) const;
    const std::map<int, Rational>& terms() const { return terms_; }
    int min_exp() const;  // pre: nonzero
    int max_exp() const;  // pre: nonzero

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    LaurentPoly operator-() const;
    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly shifted(int e) const;  // multiply by t^e

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    Rational at_one() const;  // evaluate at t = 1

    // exponent negation; an involution, and a ring homomorphism
    LaurentPoly dual() const;

    // split by coefficient sign; positive_part + negative_part == *this
    LaurentPoly positive_part() const;
    LaurentPoly negative_part() const;

private:
    void set(int e, Rational c);
    std::map<int, Rational> terms_;
};

LaurentPoly dual(const LaurentPoly& p);

// prod_w (1 - t^w); a zero weight kills the whole product
LaurentPoly lambda_minus_one(const std::vector<int>& weights);

// numerator / prod_{w in denom} (1 - t^w), the shape every fixed-point
// contribution takes before summation
struct FactoredFraction {
    LaurentPoly numerator;
    std::multiset<int> denom;
};

// Combines over the least common denominator (syntactic factor cancellation:
// shared (1 - t^w) factors are never expanded), then divides exactly.
// Throws NotPolynomialError when the division leaves a remainder.
LaurentPoly sum_fractions(const std::vector<FactoredFraction>& fractions);

// ascending exponents; coefficient magnitude 1 elided except on the constant
std::string to_string(const LaurentPoly& p);

}  // namespace equiloc
