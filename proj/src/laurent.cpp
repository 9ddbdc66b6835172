#include "equiloc/laurent.hpp"

#include <algorithm>
#include <optional>

#include "equiloc/errors.hpp"

namespace equiloc {

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, Rational>> terms) {
    for (const auto& [e, c] : terms) set(e, coeff(e) + c);
}

LaurentPoly LaurentPoly::term(Rational c, int e) {
    LaurentPoly p;
    p.set(e, std::move(c));
    return p;
}

void LaurentPoly::set(int e, Rational c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

bool LaurentPoly::is_integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.get_den() == 1; });
}

Rational LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exp() const { return terms_.begin()->first; }
int LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) set(e, coeff(e) + c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) set(e, coeff(e) - c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.set(e1 + e2, out.coeff(e1 + e2) + c1 * c2);
    terms_ = std::move(out.terms_);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly out;
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_[e] = k * c;
    return out;
}

LaurentPoly LaurentPoly::shifted(int e) const {
    LaurentPoly out;
    for (const auto& [e0, c] : terms_) out.terms_[e0 + e] = c;
    return out;
}

Rational LaurentPoly::at_one() const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

LaurentPoly LaurentPoly::dual() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_[-e] = c;
    return out;
}

LaurentPoly LaurentPoly::positive_part() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        if (c > 0) out.terms_[e] = c;
    return out;
}

LaurentPoly LaurentPoly::negative_part() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_)
        if (c < 0) out.terms_[e] = c;
    return out;
}

LaurentPoly dual(const LaurentPoly& p) { return p.dual(); }

LaurentPoly lambda_minus_one(const std::vector<int>& weights) {
    LaurentPoly out = LaurentPoly::one();
    for (int w : weights) out *= LaurentPoly::one() - LaurentPoly::t(w);
    return out;
}

namespace {

// exact division of Laurent polynomials; nullopt when a remainder survives
std::optional<LaurentPoly> divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (num.is_zero()) return LaurentPoly{};
    // shift both to ordinary polynomials with nonzero constant term
    const int ns = num.min_exp(), ds = den.min_exp();
    std::vector<Rational> a(num.max_exp() - ns + 1), b(den.max_exp() - ds + 1);
    for (const auto& [e, c] : num.terms()) a[e - ns] = c;
    for (const auto& [e, c] : den.terms()) b[e - ds] = c;
    if (a.size() < b.size()) return std::nullopt;
    std::vector<Rational> q(a.size() - b.size() + 1);
    for (std::size_t k = 0; k < q.size(); ++k) {
        q[k] = a[k] / b[0];
        if (q[k] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= q[k] * b[j];
    }
    for (const auto& r : a)
        if (r != 0) return std::nullopt;
    LaurentPoly out;
    for (std::size_t k = 0; k < q.size(); ++k)
        if (q[k] != 0) out += LaurentPoly::term(q[k], static_cast<int>(k) + ns - ds);
    return out;
}

}  // namespace

LaurentPoly sum_fractions(const std::vector<FactoredFraction>& fractions) {
    // least common denominator by per-weight multiplicity
    std::map<int, int> common;
    for (const auto& f : fractions) {
        std::map<int, int> mult;
        for (int w : f.denom) {
            if (w == 0) throw DivisionByZeroError("zero weight in fraction denominator");
            ++mult[w];
        }
        for (const auto& [w, m] : mult) common[w] = std::max(common[w], m);
    }

    LaurentPoly num;
    for (const auto& f : fractions) {
        LaurentPoly n = f.numerator;
        for (const auto& [w, m] : common) {
            int deficit = m - static_cast<int>(f.denom.count(w));
            for (int i = 0; i < deficit; ++i) n *= LaurentPoly::one() - LaurentPoly::t(w);
        }
        num += n;
    }

    LaurentPoly den = LaurentPoly::one();
    for (const auto& [w, m] : common)
        for (int i = 0; i < m; ++i) den *= LaurentPoly::one() - LaurentPoly::t(w);

    auto q = divide_exact(num, den);
    if (!q) throw NotPolynomialError("fraction sum is not a Laurent polynomial");
    return *q;
}

std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (e == 0) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += "t^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace equiloc
