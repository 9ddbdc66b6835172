#pragma once

#include <array>
#include <map>
#include <string>

#include "equiloc/rational.hpp"

namespace equiloc {

// Polynomials in the twelve affine chart coordinates over Q. The term order
// is graded reverse lexicographic with x1 > x2 > ... > x12 throughout; terms
// are stored descending, so begin() is the leading term.

inline constexpr int kNumVars = 12;
using Exponents = std::array<int, kNumVars>;

int total_degree(const Exponents& e);
bool divides(const Exponents& a, const Exponents& b);  // a | b componentwise

struct GrevlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
public:
    MultiPoly() = default;

    static MultiPoly constant(const Rational& c);
    static MultiPoly variable(int idx);  // 0-based
    static MultiPoly term(const Rational& c, const Exponents& e);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational, GrevlexGreater>& terms() const { return terms_; }
    const Exponents& leading_exponents() const;  // pre: nonzero
    const Rational& leading_coeff() const;       // pre: nonzero

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
    MultiPoly operator-() const;
    MultiPoly scaled(const Rational& c) const;
    // multiply by c * x^e
    MultiPoly times_monomial(const Rational& c, const Exponents& e) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

private:
    void set(const Exponents& e, Rational c);
    std::map<Exponents, Rational, GrevlexGreater> terms_;
};

// chart coordinate names: 'a' on the first chart, 'b' on the second
enum class Chart { V12, V10 };
std::string chart_name(Chart c);
char chart_prefix(Chart c);

// canonical: descending term order, explicit '*', '^' only above exponent 1
std::string to_string(const MultiPoly& p, Chart chart);

// rational literals, chart variables, + - * ^; throws ParseError
MultiPoly parse_poly(const std::string& text, Chart chart);

}  // namespace equiloc
