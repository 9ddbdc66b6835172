#include "equiloc/rational.hpp"

#include <cctype>

namespace equiloc {

std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    // mpq_class's own parser accepts whitespace and base prefixes; we want a
    // strict decimal p or p/q, so validate the shape first.
    auto bad = [&] { throw ParseError("bad rational literal: '" + text + "'"); };
    if (text.empty()) bad();
    std::size_t i = 0;
    auto digits = [&](std::size_t from, bool sign_ok) {
        std::size_t j = from;
        if (sign_ok && j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
        if (j >= text.size() || !std::isdigit(static_cast<unsigned char>(text[j]))) bad();
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
        return j;
    };
    i = digits(0, true);
    if (i < text.size()) {
        if (text[i] != '/') bad();
        std::size_t j = digits(i + 1, false);
        if (j != text.size()) bad();
    }
    Rational r;
    // GMP's reader takes '-' but not a leading '+'
    const std::string plain = text[0] == '+' ? text.substr(1) : text;
    if (r.set_str(plain, 10) != 0) bad();
    if (r.get_den() == 0) throw DivisionByZeroError("rational with zero denominator");
    r.canonicalize();
    return r;
}

}  // namespace equiloc
