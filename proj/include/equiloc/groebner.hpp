#pragma once

#include <vector>

#include "equiloc/mpoly.hpp"

namespace equiloc {

using Basis = std::vector<MultiPoly>;

// Remainder of multivariate division: repeatedly cancels the leading term by
// the first basis element whose leading monomial divides it, moving
// irreducible leading terms to the remainder. Zero iff f lies in the ideal
// when the basis is a Groebner basis.
MultiPoly normal_form(const MultiPoly& f, const Basis& basis);

// Buchberger with the coprime-pair criterion, followed by minimalization,
// full inter-reduction and monic scaling. The result is the reduced Groebner
// basis, hence independent of generator order.
Basis buchberger(const Basis& gens);

bool ideal_contains(const Basis& groebner, const MultiPoly& f);

}  // namespace equiloc
