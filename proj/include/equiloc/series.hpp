#pragma once

#include <optional>
#include <string>
#include <vector>

#include "equiloc/laurent.hpp"

namespace equiloc {

// With a one-dimensional torus every localized class is a rational multiple
// of a power of the equivariant generator; EulerMonomial is that monomial.

struct EulerMonomial {
    Rational coeff;
    int power = 0;

    bool is_zero() const { return coeff == 0; }
    friend EulerMonomial operator*(const EulerMonomial& a, const EulerMonomial& b) {
        return {a.coeff * b.coeff, a.power + b.power};
    }
    friend EulerMonomial operator/(const EulerMonomial& a, const EulerMonomial& b);
    bool operator==(const EulerMonomial& o) const = default;
};

std::string to_string(const EulerMonomial& m);

// Equivariant Euler class of a virtual sum of weight lines, with the sign
// convention that positive multiplicities sit in the numerator. A weight-0
// line upstairs makes the class vanish (nullopt); a weight-0 line downstairs
// is a genuine inconsistency and throws ZeroDeformationWeightError.
// Requires integer multiplicities.
std::optional<EulerMonomial> euler_of_virtual(const LaurentPoly& v);

// Power series in the equivariant generator, truncated at a fixed order.
// Operands of a product must share the order; the truncation is honest, so
// graded pieces up to the order are exact.

class LambdaSeries {
public:
    explicit LambdaSeries(int order) : c_(order + 1) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int n) const { return c_[n]; }
    Rational& operator[](int n) { return c_[n]; }

    LambdaSeries& operator+=(const LambdaSeries& o);
    LambdaSeries& operator*=(const LambdaSeries& o);
    friend LambdaSeries operator+(LambdaSeries a, const LambdaSeries& b) { return a += b; }
    friend LambdaSeries operator*(LambdaSeries a, const LambdaSeries& b) { return a *= b; }
    bool operator==(const LambdaSeries& o) const = default;

private:
    std::vector<Rational> c_;
};

// character -> exponential sum: t^w |-> sum_n (w lambda)^n / n!
LambdaSeries ch_series(const LaurentPoly& p, int order);

// (1 - e^{m lambda}) / (-m lambda) = sum_n m^n lambda^n / (n+1)!; m != 0
LambdaSeries todd_inverse_series(int m, int order);

// coefficient of lambda^k as a monomial; k beyond the order throws OrderTooLowError
EulerMonomial graded_piece(const LambdaSeries& s, int k);

}  // namespace equiloc
