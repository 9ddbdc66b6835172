#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "equiloc/laurent.hpp"

namespace equiloc {

// The torus fixed locus of the ambient threefold: four isolated points joined
// by four invariant rational curves. All weights are integers for the chosen
// one-parameter subgroup; every downstream computation reads them from here.

enum class PointId { P12, P10, Pm10, Pm12 };
enum class ComponentId { L2, Lm2, Q, C4 };

inline constexpr std::array<PointId, 4> kPoints = {PointId::P12, PointId::P10, PointId::Pm10,
                                                   PointId::Pm12};
inline constexpr std::array<ComponentId, 4> kComponents = {ComponentId::L2, ComponentId::Lm2,
                                                           ComponentId::Q, ComponentId::C4};

PointId mirror(PointId p);
ComponentId mirror(ComponentId c);
std::string label_of(PointId p);
std::string label_of(ComponentId c);
PointId point_from_label(const std::string& s);
ComponentId component_from_label(const std::string& s);

struct FixedPoint {
    PointId id;
    std::array<int, 3> tangent;  // tangent weights of the threefold
    int m;                       // weight of the hyperplane generator here
    bool operator==(const FixedPoint&) const = default;
};

// one endpoint of an invariant curve
struct ComponentEnd {
    PointId point;
    int tangent;                  // weight of the curve direction
    std::array<int, 2> conormal;  // weights of the conormal plane
    std::optional<int> twist;     // weight of the degree -1 line, where one is carried
    bool operator==(const ComponentEnd&) const = default;
};

struct BaseComponent {
    ComponentId id;
    std::array<ComponentEnd, 2> ends;
    const ComponentEnd* at(PointId p) const;
    bool operator==(const BaseComponent&) const = default;
};

// A K-class supported on the fixed curves: a sum of base structure sheaves and
// twisted (degree -1) lines, each scaled by a Laurent prefactor. Restriction
// to a fixed point is prefactor * (twist) * lambda_-1(conormal) per entry.
struct RecipeEntry {
    LaurentPoly prefactor;
    ComponentId base;
    bool twisted;
    bool operator==(const RecipeEntry&) const = default;
};
using KClass = std::vector<RecipeEntry>;

// sorts by (base, twisted); entry order carries no meaning
void normalize_kclass(KClass& k);

struct FixedSheaf {
    std::string label;
    int degree;
    KClass entries;
    bool operator==(const FixedSheaf&) const = default;
};

class Catalog {
public:
    Catalog(std::array<FixedPoint, 4> points, std::array<BaseComponent, 4> components,
            std::vector<FixedSheaf> sheaves);

    static const Catalog& standard();

    const std::array<FixedPoint, 4>& points() const { return points_; }
    const std::array<BaseComponent, 4>& components() const { return components_; }
    const std::vector<FixedSheaf>& sheaves() const { return sheaves_; }

    const FixedPoint& point(PointId p) const;
    const BaseComponent& component(ComponentId c) const;
    // accepts aliases L2 -> D1, L-2 -> D-1; throws UnknownLabelError
    const FixedSheaf& sheaf(const std::string& label) const;

    // all cataloged sheaves of the given degree; throws UnsupportedDegreeError
    // outside 1..4
    std::vector<const FixedSheaf*> fixed_sheaves(int d) const;

    bool operator==(const Catalog&) const = default;

private:
    std::array<FixedPoint, 4> points_;
    std::array<BaseComponent, 4> components_;
    std::vector<FixedSheaf> sheaves_;
};

LaurentPoly restrict_class(const Catalog& cat, const KClass& k, PointId p);
LaurentPoly restrict_sheaf(const Catalog& cat, const FixedSheaf& s, PointId p);

// the mirrored sheaf: dual prefactors on mirrored bases; lands on the catalog
// label of the mirror partner
FixedSheaf mirror(const Catalog& cat, const FixedSheaf& s);
std::string mirror_label(const std::string& label);

// convenience K-classes
KClass structure_class(ComponentId base);          // [O_C]
KClass twisted_class(ComponentId base);            // [O_C(-1)] as carried weight line
KClass twist_kclass(const KClass& k, int e);       // multiply every prefactor by t^e

// text form; writer output is canonical and parse is its inverse
std::string catalog_to_text(const Catalog& cat);
Catalog catalog_from_text(const std::string& text);
const std::string& embedded_catalog_text();

}  // namespace equiloc
