#include <doctest.h>

#include "equiloc/errors.hpp"
#include "equiloc/localization.hpp"

using namespace equiloc;

namespace {
const Catalog& cat() { return Catalog::standard(); }

Rational contrib(const std::string& label, int i, Insertion g, int order = kDefaultSeriesOrder) {
    return sheaf_contribution(cat(), cat().sheaf(label), i, g, order);
}

constexpr std::pair<int, Insertion> kDiagonal[] = {
    {0, Insertion::H2}, {1, Insertion::H1}, {2, Insertion::H0}};
}

TEST_CASE("insertion bookkeeping") {
    CHECK(degree_of(Insertion::H0) == 0);
    CHECK(degree_of(Insertion::H1) == 1);
    CHECK(degree_of(Insertion::H2) == 2);
    CHECK(label_of(Insertion::H2) == "h2");

    const FixedPoint& p = cat().point(PointId::P12);
    CHECK(restrict_insertion(p, Insertion::H0) == EulerMonomial{rat(1), 0});
    CHECK(restrict_insertion(p, Insertion::H1) == EulerMonomial{rat(12), 1});
    CHECK(restrict_insertion(p, Insertion::H2) == EulerMonomial{rat(72, 11), 2});

    const FixedPoint& pm = cat().point(PointId::Pm10);
    CHECK(restrict_insertion(pm, Insertion::H1) == EulerMonomial{rat(-10), 1});
    CHECK(restrict_insertion(pm, Insertion::H2) == EulerMonomial{rat(50, 11), 2});
}

TEST_CASE("per-sheaf contributions of the thickened lines") {
    CHECK(contrib("D1", 0, Insertion::H2) == 1);
    CHECK(contrib("D1", 1, Insertion::H1) == 11);
    CHECK(contrib("D1", 2, Insertion::H0) == rat(-1, 6));

    CHECK(contrib("D2", 0, Insertion::H2) == rat(7, 2));
    CHECK(contrib("D2", 1, Insertion::H1) == 14);
    CHECK(contrib("D2", 2, Insertion::H0) == rat(-7, 12));

    CHECK(contrib("D3", 0, Insertion::H2) == 14);
    CHECK(contrib("D3", 1, Insertion::H1) == 14);
    CHECK(contrib("D3", 2, Insertion::H0) == rat(-7, 3));

    CHECK(contrib("D4", 0, Insertion::H2) == 84);
    CHECK(contrib("D4", 1, Insertion::H1) == -84);
    CHECK(contrib("D4", 2, Insertion::H0) == -14);
}

TEST_CASE("weight-zero obstructions silence a sheaf entirely") {
    for (const char* label : {"Q", "C4", "L2uQ", "L-2uQ", "L2^2uQ", "L-2^2uQ", "L2uL-2uQ"})
        for (auto [i, g] : kDiagonal) CHECK(contrib(label, i, g) == 0);
}

TEST_CASE("mirrored sheaves contribute equally") {
    for (const FixedSheaf& s : cat().sheaves())
        for (auto [i, g] : kDiagonal)
            CHECK(sheaf_contribution(cat(), mirror(cat(), s), i, g) ==
                  sheaf_contribution(cat(), s, i, g));
}

TEST_CASE("summed invariants per degree") {
    const Rational expected[4][3] = {
        {rat(2), rat(22), rat(-1, 3)},
        {rat(7), rat(28), rat(-7, 6)},
        {rat(28), rat(28), rat(-14, 3)},
        {rat(168), rat(-168), rat(-28)},
    };
    for (int d = 1; d <= 4; ++d) {
        int col = 0;
        for (auto [i, g] : kDiagonal) {
            InvariantRecord rec = invariant(cat(), d, i, g);
            CHECK(rec.value == expected[d - 1][col]);
            CHECK(rec.d == d);
            CHECK(rec.i == i);
            ++col;
        }
    }
    CHECK_THROWS_AS(invariant(cat(), 0, 0, Insertion::H2), UnsupportedDegreeError);
    CHECK_THROWS_AS(invariant(cat(), 5, 0, Insertion::H2), UnsupportedDegreeError);
}

TEST_CASE("descendent-to-primary ratio is constant in the degree") {
    for (int d = 1; d <= 4; ++d) CHECK(ratio_check(cat(), d) == rat(-1, 6));
}

TEST_CASE("off-diagonal insertions land in nonzero lambda degree") {
    CHECK_THROWS_AS(contrib("D4", 0, Insertion::H1), LambdaDegreeMismatchError);
    CHECK_THROWS_AS(contrib("D1", 1, Insertion::H2), LambdaDegreeMismatchError);
    CHECK_THROWS_AS(contrib("D2", 0, Insertion::H0), LambdaDegreeMismatchError);
}

TEST_CASE("results do not depend on the truncation order") {
    for (int order : {6, 12}) {
        for (int d = 1; d <= 4; ++d)
            for (auto [i, g] : kDiagonal)
                CHECK(invariant(cat(), d, i, g, order).value == invariant(cat(), d, i, g).value);
    }
}

TEST_CASE("an insufficient truncation order is reported, not absorbed") {
    CHECK_THROWS_AS(contrib("D4", 2, Insertion::H0, 3), OrderTooLowError);
    CHECK_THROWS_AS(contrib("D1", -1, Insertion::H0), Error);
}
