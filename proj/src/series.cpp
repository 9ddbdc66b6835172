#include "equiloc/series.hpp"

#include "equiloc/errors.hpp"

namespace equiloc {

EulerMonomial operator/(const EulerMonomial& a, const EulerMonomial& b) {
    if (b.coeff == 0) throw DivisionByZeroError("division by zero Euler monomial");
    return {a.coeff / b.coeff, a.power - b.power};
}

std::string to_string(const EulerMonomial& m) {
    if (m.power == 0 || m.coeff == 0) return to_string(m.coeff);
    return to_string(m.coeff) + "*lambda^" + std::to_string(m.power);
}

std::optional<EulerMonomial> euler_of_virtual(const LaurentPoly& v) {
    if (!v.is_integral()) throw Error("euler_of_virtual: multiplicities must be integers");
    EulerMonomial out{1, 0};
    for (const auto& [w, c] : v.terms()) {
        const long mult = c.get_num().get_si();
        if (w == 0) {
            if (mult < 0)
                throw ZeroDeformationWeightError("weight-0 deformation in virtual class");
            return std::nullopt;  // weight-0 factor upstairs
        }
        for (long i = 0; i < mult; ++i) {
            out.coeff *= w;
            ++out.power;
        }
        for (long i = 0; i > mult; --i) {
            out.coeff /= w;
            --out.power;
        }
    }
    return out;
}

LambdaSeries& LambdaSeries::operator+=(const LambdaSeries& o) {
    if (order() != o.order()) throw Error("series order mismatch");
    for (int n = 0; n <= order(); ++n) c_[n] += o.c_[n];
    return *this;
}

LambdaSeries& LambdaSeries::operator*=(const LambdaSeries& o) {
    if (order() != o.order()) throw Error("series order mismatch");
    LambdaSeries out(order());
    for (int i = 0; i <= order(); ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= order(); ++j) out.c_[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(out.c_);
    return *this;
}

LambdaSeries ch_series(const LaurentPoly& p, int order) {
    LambdaSeries s(order);
    for (const auto& [w, c] : p.terms()) {
        Rational pw = 1;  // w^n / n!
        for (int n = 0; n <= order; ++n) {
            s[n] += c * pw;
            pw *= w;
            pw /= n + 1;
        }
    }
    return s;
}

LambdaSeries todd_inverse_series(int m, int order) {
    if (m == 0) throw ZeroTwistError("inverse Todd series needs a nonzero weight");
    LambdaSeries s(order);
    Rational pw = 1;  // m^n / (n+1)!
    for (int n = 0; n <= order; ++n) {
        s[n] = pw;
        pw *= m;
        pw /= n + 2;
    }
    return s;
}

EulerMonomial graded_piece(const LambdaSeries& s, int k) {
    if (k < 0) throw Error("graded_piece: negative degree");
    if (k > s.order()) throw OrderTooLowError("graded_piece beyond truncation order");
    return {s[k], k};
}

}  // namespace equiloc
