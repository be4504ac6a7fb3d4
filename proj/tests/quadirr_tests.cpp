#include "doctest.h"

#include "slopestab/quadirr.hpp"

using namespace slopestab;

TEST_CASE("rational embedding and normalization") {
    QuadValue two(Rat(2));
    CHECK(two.is_rational());
    CHECK(two.as_rational() == 2);
    CHECK(two.str() == "2");

    // A vanishing radical coefficient collapses to a rational.
    QuadValue collapsed(Rat(3), Rat(0), Int(5));
    CHECK(collapsed.is_rational());
    CHECK(collapsed == QuadValue(Rat(3)));

    // Perfect-square radicands collapse too.
    CHECK(QuadValue::sqrt_of(Rat(4)) == QuadValue(Rat(2)));
    CHECK(QuadValue::sqrt_of(Rat(0)) == QuadValue(Rat(0)));
    CHECK(QuadValue::sqrt_of(make_rat(9, 4)) == QuadValue(make_rat(3, 2)));
    CHECK_THROWS_AS(QuadValue::sqrt_of(Rat(-1)), Error);
}

TEST_CASE("sqrt_of squares back to its radicand") {
    for (long n : {2L, 3L, 5L, 8L, 12L, 45L}) {
        QuadValue r = QuadValue::sqrt_of(Rat(n));
        CHECK(!r.is_rational());
        CHECK(r.sign() == 1);
        CHECK(r * r == QuadValue(Rat(n)));
    }
    QuadValue h = QuadValue::sqrt_of(make_rat(1, 2));
    CHECK(h * h == QuadValue(make_rat(1, 2)));
}

TEST_CASE("arithmetic in one field") {
    QuadValue a(Rat(1), Rat(1), Int(2));   // 1 + sqrt(2)
    QuadValue b(Rat(3), Rat(-1), Int(2));  // 3 - sqrt(2)
    CHECK(a + b == QuadValue(Rat(4)));
    CHECK(a * b == QuadValue(Rat(1), Rat(2), Int(2)));  // 3-2+ (3-1)sqrt2 = 1+2sqrt2
    CHECK(a - a == QuadValue(Rat(0)));
    CHECK((-a).sign() == -1);
    CHECK(a.sign() == 1);
}

TEST_CASE("comparisons across different radicands") {
    QuadValue s2 = QuadValue::sqrt_of(Rat(2));
    QuadValue s3 = QuadValue::sqrt_of(Rat(3));
    QuadValue s5 = QuadValue::sqrt_of(Rat(5));

    CHECK(s2 < s3);
    CHECK(quad_compare(s3, s2) == 1);
    CHECK(QuadValue(Rat(1)) + s2 > s3);           // 2.414... vs 1.732...
    CHECK(QuadValue(Rat(2)) + s2 > QuadValue(Rat(1)) + s5);  // 3.414 vs 3.236
    CHECK(QuadValue(Rat(1)) + s2 < QuadValue(Rat(1)) + s3);
    CHECK(s2 + s2 == QuadValue(Rat(0), Rat(2), Int(2)));
    // sqrt(8) lives in the same field as sqrt(2).
    CHECK(QuadValue::sqrt_of(Rat(8)) == s2 + s2);
    CHECK(quad_compare(s5, s5) == 0);
    CHECK(s2 < QuadValue(make_rat(3, 2)));
    CHECK(s2 > QuadValue(make_rat(7, 5)));
}

TEST_CASE("floor of quadratic irrationals") {
    CHECK(QuadValue::sqrt_of(Rat(2)).floor() == 1);
    CHECK(QuadValue::sqrt_of(Rat(99)).floor() == 9);
    CHECK((-QuadValue::sqrt_of(Rat(2))).floor() == -2);
    QuadValue v(Rat(-1), Rat(2), Int(2));  // -1 + 2 sqrt 2 = 1.828...
    CHECK(v.floor() == 1);
    CHECK(QuadValue(make_rat(-7, 2)).floor() == -4);
}

TEST_CASE("canonical text") {
    CHECK(QuadValue(make_rat(1, 2)).str() == "1/2");
    QuadValue v(Rat(2), make_rat(1, 3), Int(5));
    CHECK(v.str() == "2+1/3*sqrt(5)");
    CHECK(QuadValue::sqrt_of(Rat(2)).str() == "sqrt(2)");
}

TEST_CASE("quad_min picks the exact smaller value") {
    QuadValue s2 = QuadValue::sqrt_of(Rat(2));
    CHECK(quad_min(s2, QuadValue(make_rat(3, 2))) == s2);
    CHECK(quad_min(s2, QuadValue(make_rat(7, 5))) == QuadValue(make_rat(7, 5)));
    CHECK(quad_min(s2, s2) == s2);
}
