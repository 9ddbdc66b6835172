#pragma once

#include <string>

#include "equiloc/geometry.hpp"

namespace equiloc {

// Euler pairing chi(A, B) of fixed K-classes by the point-local formula: at
// every supporting fixed point, dual of the first restriction times the
// second, divided by lambda_-1 of the cotangent weights; the sum collapses to
// an honest Laurent polynomial. Points outside the common support contribute
// nothing by construction rather than by cancellation.

LaurentPoly chi_pair(const Catalog& cat, const KClass& a, const KClass& b);
LaurentPoly chi_self(const Catalog& cat, const FixedSheaf& s);

// global sections by the same point-local formula: 1 for every cataloged
// curve class, 0 for the twisted line classes
LaurentPoly chi_global(const Catalog& cat, const KClass& k);

// 1 - chi_self(s), split by sign into moving deformations and obstructions.
// The scalar 1 must be present in the pairing; surplus weight-0 terms land in
// the obstruction part.
struct VirtualTangent {
    LaurentPoly deformation;  // positive multiplicities, never weight 0
    LaurentPoly obstruction;  // positive multiplicities
    bool operator==(const VirtualTangent&) const = default;
};

VirtualTangent split_virtual(const LaurentPoly& chi);  // throws BadConstantTermError
VirtualTangent virtual_tangent(const Catalog& cat, const FixedSheaf& s);

// def.at_one() - obs.at_one(); 1 for every cataloged sheaf
Rational virtual_dimension(const VirtualTangent& vt);

// "1 - (t^2 + t^4) + t^14" display form; groups parenthesized when plural
std::string render_split(const VirtualTangent& vt);

}  // namespace equiloc
