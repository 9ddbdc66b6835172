#pragma once

#include <map>

#include "equiloc/localization.hpp"

namespace equiloc {

// Genus-0 counts from the degree-0 descendent column, with the orientation
// sign (-1)^(d+1), feed a recursion for incidence numbers of pairs of degrees;
// those in turn enter an identity against the degree-1 descendent column.

struct GvInputs {
    std::map<int, Rational> n0;  // cataloged degrees
    std::map<int, Rational> n1;  // assumed values; missing entries read as 0
};

int orientation_sign(int d);  // (-1)^(d+1)

Rational n0(const Catalog& cat, int d, int order = kDefaultSeriesOrder);

// n0 computed for degrees 1..4, n1 identically zero
GvInputs standard_gv_inputs(const Catalog& cat, int order = kDefaultSeriesOrder);

// Incidence numbers m(d1, d2), memoized. Symmetric; zero when either degree
// is nonpositive; throws NeedsHigherN0Error when the recursion bottoms out
// beyond the available genus-0 inputs.
class MeetingTable {
public:
    explicit MeetingTable(GvInputs inputs) : in_(std::move(inputs)) {}

    Rational meeting(int d1, int d2);
    const GvInputs& inputs() const { return in_; }

private:
    const Rational& n0_at(int d);
    GvInputs in_;
    std::map<std::pair<int, int>, Rational> memo_;
};

struct ConjectureRecord {
    int d;
    Rational lhs;
    Rational rhs;
    bool holds;
};

ConjectureRecord conjecture_check(const Catalog& cat, int d, const GvInputs& inputs,
                                  int order = kDefaultSeriesOrder);

}  // namespace equiloc
