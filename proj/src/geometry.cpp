#include "equiloc/geometry.hpp"

#include <algorithm>
#include <map>

#include "equiloc/errors.hpp"

namespace equiloc {

PointId mirror(PointId p) {
    switch (p) {
        case PointId::P12: return PointId::Pm12;
        case PointId::P10: return PointId::Pm10;
        case PointId::Pm10: return PointId::P10;
        case PointId::Pm12: return PointId::P12;
    }
    throw Error("bad point id");
}

ComponentId mirror(ComponentId c) {
    switch (c) {
        case ComponentId::L2: return ComponentId::Lm2;
        case ComponentId::Lm2: return ComponentId::L2;
        case ComponentId::Q: return ComponentId::Q;
        case ComponentId::C4: return ComponentId::C4;
    }
    throw Error("bad component id");
}

std::string label_of(PointId p) {
    switch (p) {
        case PointId::P12: return "p12";
        case PointId::P10: return "p10";
        case PointId::Pm10: return "p-10";
        case PointId::Pm12: return "p-12";
    }
    throw Error("bad point id");
}

std::string label_of(ComponentId c) {
    switch (c) {
        case ComponentId::L2: return "L2";
        case ComponentId::Lm2: return "L-2";
        case ComponentId::Q: return "Q";
        case ComponentId::C4: return "C4";
    }
    throw Error("bad component id");
}

PointId point_from_label(const std::string& s) {
    for (PointId p : kPoints)
        if (label_of(p) == s) return p;
    throw UnknownLabelError("unknown fixed point '" + s + "'");
}

ComponentId component_from_label(const std::string& s) {
    for (ComponentId c : kComponents)
        if (label_of(c) == s) return c;
    throw UnknownLabelError("unknown component '" + s + "'");
}

const ComponentEnd* BaseComponent::at(PointId p) const {
    for (const auto& e : ends)
        if (e.point == p) return &e;
    return nullptr;
}

void normalize_kclass(KClass& k) {
    std::stable_sort(k.begin(), k.end(), [](const RecipeEntry& a, const RecipeEntry& b) {
        if (a.base != b.base) return a.base < b.base;
        return a.twisted < b.twisted;
    });
}

Catalog::Catalog(std::array<FixedPoint, 4> points, std::array<BaseComponent, 4> components,
                 std::vector<FixedSheaf> sheaves)
    : sheaves_(std::move(sheaves)) {
    // index points and components by their canonical slot
    for (std::size_t i = 0; i < 4; ++i) {
        bool pt = false, cp = false;
        for (const auto& p : points)
            if (p.id == kPoints[i]) {
                points_[i] = p;
                pt = true;
            }
        for (const auto& c : components)
            if (c.id == kComponents[i]) {
                components_[i] = c;
                cp = true;
            }
        if (!pt) throw Error("catalog missing point " + label_of(kPoints[i]));
        if (!cp) throw Error("catalog missing component " + label_of(kComponents[i]));
    }
    for (auto& s : sheaves_) normalize_kclass(s.entries);
}

const FixedPoint& Catalog::point(PointId p) const {
    for (const auto& fp : points_)
        if (fp.id == p) return fp;
    throw Error("point not in catalog");
}

const BaseComponent& Catalog::component(ComponentId c) const {
    for (const auto& bc : components_)
        if (bc.id == c) return bc;
    throw Error("component not in catalog");
}

const FixedSheaf& Catalog::sheaf(const std::string& label) const {
    static const std::map<std::string, std::string> aliases = {{"L2", "D1"}, {"L-2", "D-1"}};
    auto it = aliases.find(label);
    const std::string& key = it == aliases.end() ? label : it->second;
    for (const auto& s : sheaves_)
        if (s.label == key) return s;
    throw UnknownLabelError("unknown curve '" + label + "'");
}

std::vector<const FixedSheaf*> Catalog::fixed_sheaves(int d) const {
    if (d < 1 || d > 4) throw UnsupportedDegreeError("degree " + std::to_string(d) + " not cataloged");
    std::vector<const FixedSheaf*> out;
    for (const auto& s : sheaves_)
        if (s.degree == d) out.push_back(&s);
    return out;
}

LaurentPoly restrict_class(const Catalog& cat, const KClass& k, PointId p) {
    LaurentPoly out;
    for (const auto& entry : k) {
        const ComponentEnd* end = cat.component(entry.base).at(p);
        if (!end) continue;
        LaurentPoly f = entry.prefactor;
        if (entry.twisted) {
            if (!end->twist) throw Error("no twist data on " + label_of(entry.base));
            f = f.shifted(*end->twist);
        }
        out += f * lambda_minus_one({end->conormal[0], end->conormal[1]});
    }
    return out;
}

LaurentPoly restrict_sheaf(const Catalog& cat, const FixedSheaf& s, PointId p) {
    return restrict_class(cat, s.entries, p);
}

std::string mirror_label(const std::string& label) {
    static const std::map<std::string, std::string> pairs = {
        {"D1", "D-1"},         {"D-1", "D1"},     {"D2", "D-2"},
        {"D-2", "D2"},         {"D3", "D-3"},     {"D-3", "D3"},
        {"D4", "D-4"},         {"D-4", "D4"},     {"Q", "Q"},
        {"C4", "C4"},          {"L2uQ", "L-2uQ"}, {"L-2uQ", "L2uQ"},
        {"L2^2uQ", "L-2^2uQ"}, {"L-2^2uQ", "L2^2uQ"}, {"L2uL-2uQ", "L2uL-2uQ"}};
    auto it = pairs.find(label);
    if (it == pairs.end()) throw UnknownLabelError("unknown curve '" + label + "'");
    return it->second;
}

FixedSheaf mirror(const Catalog& cat, const FixedSheaf& s) {
    (void)cat;
    FixedSheaf out{mirror_label(s.label), s.degree, {}};
    for (const auto& e : s.entries) out.entries.push_back({e.prefactor.dual(), mirror(e.base), e.twisted});
    normalize_kclass(out.entries);
    return out;
}

KClass structure_class(ComponentId base) { return {{LaurentPoly::one(), base, false}}; }

KClass twisted_class(ComponentId base) { return {{LaurentPoly::one(), base, true}}; }

KClass twist_kclass(const KClass& k, int e) {
    KClass out = k;
    for (auto& entry : out) entry.prefactor = entry.prefactor.shifted(e);
    return out;
}

namespace {

FixedSheaf make_sheaf(std::string label, int degree, KClass entries) {
    return {std::move(label), degree, std::move(entries)};
}

Catalog build_standard() {
    using P = PointId;
    using C = ComponentId;
    std::array<FixedPoint, 4> points = {{
        {P::P12, {6, 4, 2}, 12},
        {P::P10, {2, 10, -2}, 10},
        {P::Pm10, {-2, -10, 2}, -10},
        {P::Pm12, {-6, -4, -2}, -12},
    }};
    std::array<BaseComponent, 4> components = {{
        {C::L2, {{{P::P12, 2, {-6, -4}, -12}, {P::P10, -2, {-2, -10}, -10}}}},
        {C::Lm2, {{{P::Pm12, -2, {6, 4}, 12}, {P::Pm10, 2, {2, 10}, 10}}}},
        {C::Q, {{{P::P10, 10, {-2, 2}, std::nullopt}, {P::Pm10, -10, {2, -2}, std::nullopt}}}},
        {C::C4, {{{P::P12, 6, {-4, -2}, std::nullopt}, {P::Pm12, -6, {4, 2}, std::nullopt}}}},
    }};

    auto pf = [](std::initializer_list<int> exps) {
        LaurentPoly p;
        for (int e : exps) p += LaurentPoly::t(e);
        return p;
    };
    std::vector<FixedSheaf> sheaves;
    sheaves.push_back(make_sheaf("D1", 1, {{pf({0}), C::L2, false}}));
    sheaves.push_back(make_sheaf("D-1", 1, {{pf({0}), C::Lm2, false}}));
    sheaves.push_back(make_sheaf("D2", 2, {{pf({0}), C::L2, false}, {pf({8}), C::L2, true}}));
    sheaves.push_back(make_sheaf("D-2", 2, {{pf({0}), C::Lm2, false}, {pf({-8}), C::Lm2, true}}));
    sheaves.push_back(make_sheaf("Q", 2, {{pf({0}), C::Q, false}}));
    sheaves.push_back(make_sheaf("D3", 3, {{pf({0}), C::L2, false}, {pf({6, 8}), C::L2, true}}));
    sheaves.push_back(make_sheaf("D-3", 3, {{pf({0}), C::Lm2, false}, {pf({-8, -6}), C::Lm2, true}}));
    sheaves.push_back(make_sheaf("L2uQ", 3, {{pf({0}), C::Q, false}, {pf({12}), C::L2, true}}));
    sheaves.push_back(
        make_sheaf("L-2uQ", 3, {{pf({0}), C::Q, false}, {pf({-12}), C::Lm2, true}}));
    sheaves.push_back(
        make_sheaf("D4", 4, {{pf({0}), C::L2, false}, {pf({4, 6, 8}), C::L2, true}}));
    sheaves.push_back(
        make_sheaf("D-4", 4, {{pf({0}), C::Lm2, false}, {pf({-8, -6, -4}), C::Lm2, true}}));
    sheaves.push_back(
        make_sheaf("L2^2uQ", 4, {{pf({0}), C::Q, false}, {pf({8, 12}), C::L2, true}}));
    sheaves.push_back(
        make_sheaf("L-2^2uQ", 4, {{pf({0}), C::Q, false}, {pf({-12, -8}), C::Lm2, true}}));
    sheaves.push_back(make_sheaf("L2uL-2uQ", 4, {{pf({0}), C::Q, false},
                                                 {pf({12}), C::L2, true},
                                                 {pf({-12}), C::Lm2, true}}));
    sheaves.push_back(make_sheaf("C4", 4, {{pf({0}), C::C4, false}}));

    return Catalog(points, components, std::move(sheaves));
}

}  // namespace

const Catalog& Catalog::standard() {
    static const Catalog cat = build_standard();
    return cat;
}

}  // namespace equiloc
