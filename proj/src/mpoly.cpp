#include "equiloc/mpoly.hpp"

#include <cctype>

#include "equiloc/errors.hpp"

namespace equiloc {

int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool divides(const Exponents& a, const Exponents& b) {
    for (int i = 0; i < kNumVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool GrevlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    // equal degree: greater iff the last nonzero entry of a - b is negative
    for (int i = kNumVars - 1; i >= 0; --i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

MultiPoly MultiPoly::constant(const Rational& c) { return term(c, Exponents{}); }

MultiPoly MultiPoly::variable(int idx) {
    Exponents e{};
    e[idx] = 1;
    return term(1, e);
}

MultiPoly MultiPoly::term(const Rational& c, const Exponents& e) {
    MultiPoly p;
    p.set(e, c);
    return p;
}

const Exponents& MultiPoly::leading_exponents() const { return terms_.begin()->first; }
const Rational& MultiPoly::leading_coeff() const { return terms_.begin()->second; }

void MultiPoly::set(const Exponents& e, Rational c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = std::move(c);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        set(e, (it == terms_.end() ? Rational(0) : it->second) + c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        set(e, (it == terms_.end() ? Rational(0) : it->second) - c);
    }
    return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    MultiPoly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e;
            for (int i = 0; i < kNumVars; ++i) e[i] = e1[i] + e2[i];
            auto it = out.terms_.find(e);
            out.set(e, (it == out.terms_.end() ? Rational(0) : it->second) + c1 * c2);
        }
    terms_ = std::move(out.terms_);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly out;
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_[e] = k * c;
    return out;
}

MultiPoly MultiPoly::times_monomial(const Rational& c, const Exponents& e) const {
    MultiPoly out;
    if (c == 0) return out;
    for (const auto& [e0, c0] : terms_) {
        Exponents es;
        for (int i = 0; i < kNumVars; ++i) es[i] = e0[i] + e[i];
        out.terms_[es] = c0 * c;
    }
    return out;
}

std::string chart_name(Chart c) { return c == Chart::V12 ? "V12" : "V10"; }
char chart_prefix(Chart c) { return c == Chart::V12 ? 'a' : 'b'; }

std::string to_string(const MultiPoly& p, Chart chart) {
    if (p.is_zero()) return "0";
    const char v = chart_prefix(chart);
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
        std::string mono;
        for (int i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += v + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += mono;
        }
    }
    return out;
}

namespace {

struct PolyLexer {
    const std::string& s;
    std::size_t i = 0;
    Chart chart;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("polynomial: " + what + " at offset " + std::to_string(i) + " in '" +
                         s + "'");
    }

    int read_uint() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) fail("expected digit");
        long n = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            n = n * 10 + (s[i] - '0');
            if (n > 1'000'000) fail("number too large");
            ++i;
        }
        return static_cast<int>(n);
    }

    MultiPoly read_atom() {
        skip_ws();
        if (i >= s.size()) fail("unexpected end");
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int num = read_uint();
            if (eat('/')) {
                int den = read_uint();
                if (den == 0) fail("zero denominator");
                return MultiPoly::constant(rat(num, den));
            }
            return MultiPoly::constant(num);
        }
        if (c == chart_prefix(chart)) {
            ++i;
            int idx = read_uint();
            if (idx < 1 || idx > kNumVars) fail("variable index out of range");
            return MultiPoly::variable(idx - 1);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    MultiPoly read_factor() {
        MultiPoly base = read_atom();
        if (eat('^')) {
            int e = read_uint();
            MultiPoly out = MultiPoly::constant(1);
            for (int k = 0; k < e; ++k) out *= base;
            return out;
        }
        return base;
    }

    MultiPoly read_term() {
        MultiPoly out = read_factor();
        while (eat('*')) out *= read_factor();
        return out;
    }

    MultiPoly read_expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        MultiPoly out = read_term();
        if (neg) out = -out;
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++i;
                out += read_term();
            } else if (c == '-') {
                ++i;
                out -= read_term();
            } else {
                break;
            }
        }
        skip_ws();
        if (i != s.size()) fail("trailing input");
        return out;
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, Chart chart) {
    PolyLexer lx{text, 0, chart};
    return lx.read_expr();
}

}  // namespace equiloc
