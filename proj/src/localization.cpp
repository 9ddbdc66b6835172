#include "equiloc/localization.hpp"

#include "equiloc/errors.hpp"

namespace equiloc {

int degree_of(Insertion g) {
    switch (g) {
        case Insertion::H0: return 0;
        case Insertion::H1: return 1;
        case Insertion::H2: return 2;
    }
    throw Error("bad insertion");
}

std::string label_of(Insertion g) {
    switch (g) {
        case Insertion::H0: return "h0";
        case Insertion::H1: return "h1";
        case Insertion::H2: return "h2";
    }
    throw Error("bad insertion");
}

EulerMonomial restrict_insertion(const FixedPoint& p, Insertion g) {
    switch (g) {
        case Insertion::H0: return {1, 0};
        case Insertion::H1: return {p.m, 1};
        case Insertion::H2: return {Rational(p.m) * p.m / 22, 2};
    }
    throw Error("bad insertion");
}

Rational sheaf_contribution(const Catalog& cat, const FixedSheaf& s, int i, Insertion g,
                            int order) {
    if (i < 0) throw Error("negative descendent index");
    auto euler = euler_of_virtual(chi_self(cat, s) - LaurentPoly::one());
    if (!euler) return 0;

    // every point summand sits in the same lambda degree by construction
    const int point_power = degree_of(g) + (i + 2) - 3;
    Rational sum = 0;
    for (PointId p : kPoints) {
        LaurentPoly r = restrict_sheaf(cat, s, p);
        if (r.is_zero()) continue;
        const FixedPoint& fp = cat.point(p);
        LambdaSeries cs = ch_series(r, order) * todd_inverse_series(fp.m, order);
        EulerMonomial piece = graded_piece(cs, i + 2);
        Rational tangent_euler = Rational(fp.tangent[0]) * fp.tangent[1] * fp.tangent[2];
        sum += restrict_insertion(fp, g).coeff * piece.coeff / tangent_euler;
    }

    EulerMonomial total = EulerMonomial{sum, point_power} * *euler;
    if (total.power != 0)
        throw LambdaDegreeMismatchError("tau_" + std::to_string(i) + "(" + label_of(g) +
                                        ") lands in lambda^" + std::to_string(total.power));
    return total.coeff;
}

InvariantRecord invariant(const Catalog& cat, int d, int i, Insertion g, int order) {
    Rational value = 0;
    for (const FixedSheaf* s : cat.fixed_sheaves(d)) value += sheaf_contribution(cat, *s, i, g, order);
    return {d, i, g, value};
}

Rational ratio_check(const Catalog& cat, int d, int order) {
    Rational denom = invariant(cat, d, 0, Insertion::H2, order).value;
    if (denom == 0) throw DivisionByZeroError("degree-" + std::to_string(d) + " base invariant vanishes");
    return invariant(cat, d, 2, Insertion::H0, order).value / denom;
}

}  // namespace equiloc
