#include "equiloc/gv.hpp"

#include "equiloc/errors.hpp"

namespace equiloc {

int orientation_sign(int d) { return d % 2 == 0 ? -1 : 1; }

Rational n0(const Catalog& cat, int d, int order) {
    return orientation_sign(d) * invariant(cat, d, 0, Insertion::H2, order).value;
}

GvInputs standard_gv_inputs(const Catalog& cat, int order) {
    GvInputs in;
    for (int d = 1; d <= 4; ++d) in.n0[d] = n0(cat, d, order);
    return in;
}

const Rational& MeetingTable::n0_at(int d) {
    auto it = in_.n0.find(d);
    if (it == in_.n0.end())
        throw NeedsHigherN0Error("genus-0 input at degree " + std::to_string(d) +
                                 " not available");
    return it->second;
}

Rational MeetingTable::meeting(int d1, int d2) {
    if (d1 <= 0 || d2 <= 0) return 0;
    if (d1 > d2) std::swap(d1, d2);
    auto key = std::make_pair(d1, d2);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    Rational val;
    if (d1 == d2) {
        const int d = d1;
        const Rational& n = n0_at(d);
        val = 2 * n - 22 * n * n;
        for (int a = 1; a < d; ++a) val -= meeting(a, d - a);
    } else {
        // d1 < d2, so the reflected term meeting(d1 - d2, d2) drops out
        val = -22 * n0_at(d1) * n0_at(d2) + meeting(d1, d2 - d1);
    }
    memo_.emplace(key, val);
    return val;
}

ConjectureRecord conjecture_check(const Catalog& cat, int d, const GvInputs& inputs, int order) {
    if (d < 1 || d > 4)
        throw UnsupportedDegreeError("degree " + std::to_string(d) + " not cataloged");

    Rational lhs = orientation_sign(d) * invariant(cat, d, 1, Insertion::H1, order).value;

    auto it0 = inputs.n0.find(d);
    if (it0 == inputs.n0.end())
        throw NeedsHigherN0Error("genus-0 input at degree " + std::to_string(d) +
                                 " not available");
    MeetingTable table(inputs);
    Rational rhs = Rational(11) * it0->second / d;
    for (int d1 = 1; d1 < d; ++d1) {
        int d2 = d - d1;
        rhs -= Rational(d1 * d2) / (4 * d) * table.meeting(d1, d2);
    }
    for (int k = 1; k <= d; ++k) {
        if (d % k != 0) continue;
        auto it = inputs.n1.find(d / k);
        if (it != inputs.n1.end()) rhs -= Rational(d / k) * it->second;
    }

    return {d, lhs, rhs, lhs == rhs};
}

}  // namespace equiloc
