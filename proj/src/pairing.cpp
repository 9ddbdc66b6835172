#include "equiloc/pairing.hpp"

#include "equiloc/errors.hpp"

namespace equiloc {

LaurentPoly chi_pair(const Catalog& cat, const KClass& a, const KClass& b) {
    std::vector<FactoredFraction> fractions;
    for (PointId p : kPoints) {
        LaurentPoly ra = restrict_class(cat, a, p);
        if (ra.is_zero()) continue;
        LaurentPoly rb = restrict_class(cat, b, p);
        if (rb.is_zero()) continue;
        const FixedPoint& fp = cat.point(p);
        fractions.push_back(
            {ra.dual() * rb, {-fp.tangent[0], -fp.tangent[1], -fp.tangent[2]}});
    }
    return sum_fractions(fractions);
}

LaurentPoly chi_self(const Catalog& cat, const FixedSheaf& s) {
    return chi_pair(cat, s.entries, s.entries);
}

LaurentPoly chi_global(const Catalog& cat, const KClass& k) {
    std::vector<FactoredFraction> fractions;
    for (PointId p : kPoints) {
        LaurentPoly r = restrict_class(cat, k, p);
        if (r.is_zero()) continue;
        const FixedPoint& fp = cat.point(p);
        fractions.push_back({r, {-fp.tangent[0], -fp.tangent[1], -fp.tangent[2]}});
    }
    return sum_fractions(fractions);
}

VirtualTangent split_virtual(const LaurentPoly& chi) {
    if (!chi.is_integral()) throw Error("pairing has non-integer multiplicities");
    if (chi.coeff(0) <= 0)
        throw BadConstantTermError("self-pairing lacks the unit scalar term");
    LaurentPoly v = LaurentPoly::one() - chi;
    return {v.positive_part(), -v.negative_part()};
}

VirtualTangent virtual_tangent(const Catalog& cat, const FixedSheaf& s) {
    return split_virtual(chi_self(cat, s));
}

Rational virtual_dimension(const VirtualTangent& vt) {
    return vt.deformation.at_one() - vt.obstruction.at_one();
}

namespace {

std::string render_group(const LaurentPoly& p) {
    std::string body;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) body += " + ";
        first = false;
        if (c != 1) body += to_string(c) + "*";
        body += "t^" + std::to_string(e);
    }
    if (p.terms().size() > 1) return "(" + body + ")";
    return body;
}

}  // namespace

std::string render_split(const VirtualTangent& vt) {
    std::string out = "1";
    if (!vt.deformation.is_zero()) out += " - " + render_group(vt.deformation);
    if (!vt.obstruction.is_zero()) out += " + " + render_group(vt.obstruction);
    return out;
}

}  // namespace equiloc
