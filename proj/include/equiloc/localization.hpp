#pragma once

#include "equiloc/pairing.hpp"
#include "equiloc/series.hpp"

namespace equiloc {

// Descendent insertions tau_i(gamma) evaluated by localization: per fixed
// point, the insertion restriction times the (i+2)-graded piece of the
// character exponential corrected by the inverse Todd factor of the canonical
// twist, over the Euler class of the ambient tangent space; the whole sum is
// then scaled by the Euler class of the reduced self-pairing. Everything is a
// monomial in the equivariant generator and the final result must land in
// degree 0.

inline constexpr int kMinSeriesOrder = 6;
inline constexpr int kDefaultSeriesOrder = 8;

enum class Insertion { H0, H1, H2 };  // unit, hyperplane, its square over the degree

int degree_of(Insertion g);
std::string label_of(Insertion g);
EulerMonomial restrict_insertion(const FixedPoint& p, Insertion g);

Rational sheaf_contribution(const Catalog& cat, const FixedSheaf& s, int i, Insertion g,
                            int order = kDefaultSeriesOrder);

struct InvariantRecord {
    int d;
    int i;
    Insertion g;
    Rational value;
};

// sum of sheaf_contribution over the degree-d fixed sheaves
InvariantRecord invariant(const Catalog& cat, int d, int i, Insertion g,
                          int order = kDefaultSeriesOrder);

// tau_2(unit) over tau_0(quadratic); DivisionByZeroError when the latter vanishes
Rational ratio_check(const Catalog& cat, int d, int order = kDefaultSeriesOrder);

}  // namespace equiloc
