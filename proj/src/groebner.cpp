#include "equiloc/groebner.hpp"

#include <algorithm>
#include <utility>

namespace equiloc {

MultiPoly normal_form(const MultiPoly& f, const Basis& basis) {
    MultiPoly h = f, r;
    while (!h.is_zero()) {
        const Exponents& le = h.leading_exponents();
        const Rational lc = h.leading_coeff();
        bool reduced = false;
        for (const MultiPoly& g : basis) {
            if (g.is_zero()) continue;
            const Exponents& ge = g.leading_exponents();
            if (!divides(ge, le)) continue;
            Exponents q;
            for (int i = 0; i < kNumVars; ++i) q[i] = le[i] - ge[i];
            h -= g.times_monomial(lc / g.leading_coeff(), q);
            reduced = true;
            break;
        }
        if (!reduced) {
            MultiPoly t = MultiPoly::term(lc, le);
            r += t;
            h -= t;
        }
    }
    return r;
}

namespace {

Exponents lcm_exp(const Exponents& a, const Exponents& b) {
    Exponents l;
    for (int i = 0; i < kNumVars; ++i) l[i] = std::max(a[i], b[i]);
    return l;
}

bool coprime(const Exponents& a, const Exponents& b) {
    for (int i = 0; i < kNumVars; ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

MultiPoly s_poly(const MultiPoly& f, const MultiPoly& g) {
    const Exponents l = lcm_exp(f.leading_exponents(), g.leading_exponents());
    Exponents qf, qg;
    for (int i = 0; i < kNumVars; ++i) {
        qf[i] = l[i] - f.leading_exponents()[i];
        qg[i] = l[i] - g.leading_exponents()[i];
    }
    return f.times_monomial(Rational(1) / f.leading_coeff(), qf) -
           g.times_monomial(Rational(1) / g.leading_coeff(), qg);
}

}  // namespace

Basis buchberger(const Basis& gens) {
    Basis g;
    for (const MultiPoly& f : gens)
        if (!f.is_zero()) g.push_back(f);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);

    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        if (coprime(g[i].leading_exponents(), g[j].leading_exponents())) continue;
        MultiPoly r = normal_form(s_poly(g[i], g[j]), g);
        if (r.is_zero()) continue;
        for (std::size_t k = 0; k < g.size(); ++k) pairs.emplace_back(k, g.size());
        g.push_back(std::move(r));
    }

    // minimalize: drop elements whose leading monomial another one divides
    Basis minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            if (!divides(g[j].leading_exponents(), g[i].leading_exponents())) continue;
            // on equal leading monomials keep the earlier one
            if (g[i].leading_exponents() == g[j].leading_exponents() && i < j) continue;
            redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }

    // fully reduce each element against the rest, then scale monic
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        Basis rest;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) rest.push_back(minimal[j]);
        minimal[i] = normal_form(minimal[i], rest);
    }
    Basis out;
    for (MultiPoly& f : minimal)
        if (!f.is_zero()) out.push_back(f.scaled(Rational(1) / f.leading_coeff()));
    std::sort(out.begin(), out.end(), [](const MultiPoly& x, const MultiPoly& y) {
        return GrevlexGreater{}(x.leading_exponents(), y.leading_exponents());
    });
    return out;
}

bool ideal_contains(const Basis& groebner, const MultiPoly& f) {
    return normal_form(f, groebner).is_zero();
}

}  // namespace equiloc
