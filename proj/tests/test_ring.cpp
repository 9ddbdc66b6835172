#include <doctest.h>

#include "equiloc/errors.hpp"
#include "equiloc/laurent.hpp"
#include "equiloc/series.hpp"
#include "test_support.hpp"

using namespace equiloc;
using equiloc::testing::Rng;
using equiloc::testing::random_poly;

namespace {
LaurentPoly lp(std::initializer_list<std::pair<int, Rational>> terms) { return LaurentPoly(terms); }
}

TEST_CASE("rational construction and text form") {
    CHECK(rat(3, 6) == rat(1, 2));
    CHECK(rat(-8, 4) == rat(-2));
    CHECK(rat(2, -4) == rat(-1, 2));
    CHECK(to_string(rat(-8, 4)) == "-2");
    CHECK(to_string(rat(7, 3)) == "7/3");
    CHECK(to_string(rat(0)) == "0");
    CHECK_THROWS_AS(rat(1, 0), DivisionByZeroError);
}

TEST_CASE("rational parsing is strict") {
    CHECK(parse_rational("3/6") == rat(1, 2));
    CHECK(parse_rational("-7/3") == rat(-7, 3));
    CHECK(parse_rational("+5") == rat(5));
    CHECK(parse_rational("0") == rat(0));
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("a"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-3"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/3x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), DivisionByZeroError);
}

TEST_CASE("laurent arithmetic basics") {
    LaurentPoly p = lp({{0, 1}, {2, -1}});
    LaurentPoly q = lp({{0, 1}, {2, 1}});
    CHECK(p * q == lp({{0, 1}, {4, -1}}));
    CHECK(p + q == lp({{0, 2}}));
    CHECK(p - p == LaurentPoly());
    CHECK((p - p).is_zero());
    CHECK(p.shifted(3) == lp({{3, 1}, {5, -1}}));
    CHECK(p.scaled(rat(1, 2)) == lp({{0, rat(1, 2)}, {2, rat(-1, 2)}}));
    CHECK(lp({{0, rat(1, 2)}}).is_integral() == false);
    CHECK(p.is_integral());
    CHECK(p.at_one() == 0);
    CHECK(q.at_one() == 2);
    CHECK(p.coeff(2) == -1);
    CHECK(p.coeff(7) == 0);
    CHECK(lp({{-3, 1}, {5, 2}}).min_exp() == -3);
    CHECK(lp({{-3, 1}, {5, 2}}).max_exp() == 5);
}

TEST_CASE("sign split partitions the terms") {
    LaurentPoly v = lp({{-2, -1}, {0, 2}, {3, -3}, {5, 1}});
    CHECK(v.positive_part() == lp({{0, 2}, {5, 1}}));
    CHECK(v.negative_part() == lp({{-2, -1}, {3, -3}}));
    CHECK(v.positive_part() + v.negative_part() == v);
}

TEST_CASE("dual negates exponents and is a ring involution") {
    CHECK(dual(LaurentPoly::t(2)) == LaurentPoly::t(-2));
    CHECK(dual(lp({{0, 1}, {2, -1}, {4, -1}, {8, 1}})) ==
          lp({{0, 1}, {-2, -1}, {-4, -1}, {-8, 1}}));

    Rng rng(11);
    for (int k = 0; k < 20; ++k) {
        LaurentPoly a = random_poly(rng);
        LaurentPoly b = random_poly(rng);
        CHECK(dual(dual(a)) == a);
        CHECK(dual(a * b) == dual(a) * dual(b));
        CHECK(dual(a + b) == dual(a) + dual(b));
    }
}

TEST_CASE("lambda_minus_one expands the product of 1 - t^w") {
    CHECK(lambda_minus_one({}) == LaurentPoly::one());
    CHECK(lambda_minus_one({-6, -4}) == lp({{0, 1}, {-4, -1}, {-6, -1}, {-10, 1}}));
    CHECK(lambda_minus_one({-2, -10}) == lp({{0, 1}, {-2, -1}, {-10, -1}, {-12, 1}}));
    // a weight-0 factor is 1 - t^0 = 0
    CHECK(lambda_minus_one({0, 3}).is_zero());
    CHECK(lambda_minus_one({2}).at_one() == 0);
}

TEST_CASE("sum_fractions combines over a shared factored denominator") {
    CHECK(sum_fractions({}).is_zero());

    // 1/(1-t^-2) + 1/(1-t^2) = 1
    CHECK(sum_fractions({{LaurentPoly::one(), {-2}}, {LaurentPoly::one(), {2}}}) ==
          LaurentPoly::one());

    // degree-1 line: conormal products over full cotangent weights at both ends
    std::vector<FactoredFraction> line = {
        {lambda_minus_one({-6, -4}), {-6, -4, -2}},
        {lambda_minus_one({-2, -10}), {-2, -10, 2}},
    };
    CHECK(sum_fractions(line) == LaurentPoly::one());

    // repeated factors cancel syntactically at full multiplicity
    LaurentPoly sq = lambda_minus_one({2, 2});
    CHECK(sum_fractions({{sq, {2, 2}}}) == LaurentPoly::one());
    CHECK(sum_fractions({{lambda_minus_one({2, 4}), {2, 4}}, {lambda_minus_one({4}), {4}}}) ==
          lp({{0, 2}}));
}

TEST_CASE("sum_fractions rejects non-polynomial totals and zero weights") {
    CHECK_THROWS_AS(sum_fractions({{LaurentPoly::t(2), {2}}}), NotPolynomialError);
    CHECK_THROWS_AS(sum_fractions({{LaurentPoly::one(), {2, 2}}}), NotPolynomialError);
    CHECK_THROWS_AS(sum_fractions({{LaurentPoly::one(), {0}}}), DivisionByZeroError);
}

TEST_CASE("euler_of_virtual multiplies weights with signs split") {
    // numerator weights 14,16,18; denominator 2,4,4,6
    LaurentPoly v = lp({{2, -1}, {4, -2}, {6, -1}, {14, 1}, {16, 1}, {18, 1}});
    auto e = euler_of_virtual(v);
    REQUIRE(e.has_value());
    CHECK(*e == EulerMonomial{rat(21), -1});

    CHECK(euler_of_virtual(LaurentPoly()) == EulerMonomial{rat(1), 0});
    CHECK(euler_of_virtual(lp({{3, 2}})) == EulerMonomial{rat(9), 2});
    CHECK(euler_of_virtual(lp({{3, -1}})) == EulerMonomial{rat(1, 3), -1});

    // dual flips every weight, so the coefficient picks up (-1)^(total multiplicity)
    auto ed = euler_of_virtual(dual(v));
    REQUIRE(ed.has_value());
    CHECK(*ed == EulerMonomial{rat(-21), -1});
}

TEST_CASE("euler_of_virtual weight-0 handling") {
    CHECK(!euler_of_virtual(lp({{0, 1}, {2, 1}})).has_value());
    CHECK_THROWS_AS(euler_of_virtual(lp({{0, -1}, {2, 1}})), ZeroDeformationWeightError);
    CHECK_THROWS_AS(euler_of_virtual(lp({{2, rat(1, 2)}})), Error);
}

TEST_CASE("ch_series expands characters exponentially") {
    LambdaSeries s = ch_series(LaurentPoly::t(-6), 3);
    CHECK(s[0] == 1);
    CHECK(s[1] == -6);
    CHECK(s[2] == 18);
    CHECK(s[3] == -36);

    LambdaSeries z = ch_series(LaurentPoly(), 4);
    for (int n = 0; n <= 4; ++n) CHECK(z[n] == 0);

    // rank is the order-0 coefficient
    LaurentPoly r = lp({{0, 1}, {-6, -1}, {-8, -1}, {-14, 1}});
    CHECK(ch_series(r, 0)[0] == r.at_one());
}

TEST_CASE("ch_series is a ring homomorphism up to truncation") {
    Rng rng(23);
    for (int k = 0; k < 10; ++k) {
        LaurentPoly a = random_poly(rng);
        LaurentPoly b = random_poly(rng);
        CHECK(ch_series(a + b, 6) == ch_series(a, 6) + ch_series(b, 6));
        CHECK(ch_series(a * b, 6) == ch_series(a, 6) * ch_series(b, 6));
    }
}

TEST_CASE("todd_inverse_series matches its closed coefficients") {
    LambdaSeries t12 = todd_inverse_series(12, 4);
    CHECK(t12[0] == 1);
    CHECK(t12[1] == 6);
    CHECK(t12[2] == 24);
    CHECK(t12[3] == 72);
    CHECK(t12[4] == rat(864, 5));

    LambdaSeries t10 = todd_inverse_series(10, 4);
    CHECK(t10[0] == 1);
    CHECK(t10[1] == 5);
    CHECK(t10[2] == rat(50, 3));
    CHECK(t10[3] == rat(125, 3));
    CHECK(t10[4] == rat(250, 3));

    CHECK_THROWS_AS(todd_inverse_series(0, 4), ZeroTwistError);
}

TEST_CASE("todd inverse times -m equals the character of 1 - t^m, shifted") {
    // (1 - e^(m lambda))/(-m lambda) * (-m) reproduces ch(1 - t^m) one slot up
    for (int m : {12, 10, -10, 3}) {
        LambdaSeries inv = todd_inverse_series(m, 6);
        LambdaSeries ch = ch_series(LaurentPoly::one() - LaurentPoly::t(m), 7);
        for (int n = 0; n <= 6; ++n) CHECK(inv[n] * rat(-m) == ch[n + 1]);
    }
}

TEST_CASE("series operand orders must agree") {
    LambdaSeries a(4), b(5);
    CHECK_THROWS_AS(a += b, Error);
    CHECK_THROWS_AS(a *= b, Error);
}

TEST_CASE("graded_piece bounds") {
    LambdaSeries s = todd_inverse_series(12, 4);
    CHECK(graded_piece(s, 2) == EulerMonomial{rat(24), 2});
    CHECK(graded_piece(s, 0) == EulerMonomial{rat(1), 0});
    CHECK_THROWS_AS(graded_piece(s, 5), OrderTooLowError);
    CHECK_THROWS_AS(graded_piece(s, -1), Error);
}

TEST_CASE("euler monomial arithmetic") {
    EulerMonomial a{rat(3, 2), 2};
    EulerMonomial b{rat(2), -1};
    CHECK(a * b == EulerMonomial{rat(3), 1});
    CHECK(a / b == EulerMonomial{rat(3, 4), 3});
    CHECK_THROWS_AS((a / EulerMonomial{rat(0), 0}), DivisionByZeroError);
    CHECK(to_string(EulerMonomial{rat(21), -1}) == "21*lambda^-1");
    CHECK(to_string(EulerMonomial{rat(-1, 3), 0}) == "-1/3");
}

TEST_CASE("laurent text form") {
    CHECK(to_string(LaurentPoly()) == "0");
    CHECK(to_string(lp({{0, 1}, {2, -1}, {4, -1}, {8, 1}})) == "1 - t^2 - t^4 + t^8");
    CHECK(to_string(lp({{-2, -1}, {0, 2}, {2, -1}})) == "-t^-2 + 2 - t^2");
    CHECK(to_string(lp({{0, -2}, {2, rat(1, 3)}})) == "-2 + 1/3*t^2");
    CHECK(to_string(lp({{5, -1}})) == "-t^5");
}
