#include "doctest.h"

#include "slopestab/matrix.hpp"
#include "slopestab/rational.hpp"

using namespace slopestab;

TEST_CASE("make_rat canonicalizes sign and gcd") {
    CHECK(make_rat(4, 6) == make_rat(2, 3));
    CHECK(make_rat(3, -6) == make_rat(-1, 2));
    CHECK(rat_str(make_rat(3, -6)) == "-1/2");
    CHECK(rat_str(make_rat(-8, 2)) == "-4");
    CHECK_THROWS_AS(make_rat(1, 0), Error);
}

TEST_CASE("parse_rat round trips and rejects junk") {
    for (const char* t : {"0", "7", "-7", "22/7", "-3/5"}) {
        CHECK(rat_str(parse_rat(t)) == t);
    }
    CHECK(parse_rat("4/6") == make_rat(2, 3));
    CHECK_THROWS_AS(parse_rat(""), Error);
    CHECK_THROWS_AS(parse_rat("1.5"), Error);
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat("x"), Error);
    CHECK_THROWS_AS(parse_rat("1/2/3"), Error);
}

TEST_CASE("floor, ceil, parity") {
    CHECK(rat_floor(make_rat(7, 2)) == 3);
    CHECK(rat_floor(make_rat(-7, 2)) == -4);
    CHECK(rat_ceil(make_rat(7, 2)) == 4);
    CHECK(rat_ceil(make_rat(-7, 2)) == -3);
    CHECK(rat_floor(Rat(5)) == 5);
    CHECK(is_integer(Rat(4)));
    CHECK(!is_integer(make_rat(1, 2)));
    CHECK(is_even_integer(Rat(4)));
    CHECK(!is_even_integer(Rat(3)));
    CHECK(!is_even_integer(make_rat(4, 3)));
}

namespace {

QMatrix from_rows(std::vector<std::vector<long>> rows) {
    QMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

}  // namespace

TEST_CASE("determinant and minors") {
    QMatrix m = from_rows({{2, 1}, {1, 3}});
    CHECK(det(m) == 5);
    auto minors = leading_principal_minors(m);
    REQUIRE(minors.size() == 2);
    CHECK(minors[0] == 2);
    CHECK(minors[1] == 5);

    QMatrix sing = from_rows({{1, 2}, {2, 4}});
    CHECK(det(sing) == 0);
    CHECK(det(QMatrix::identity(4)) == 1);

    // Row swaps must not flip the sign away from the true determinant.
    QMatrix swapped = from_rows({{0, 1}, {1, 0}});
    CHECK(det(swapped) == -1);
}

TEST_CASE("solve and inverse agree") {
    QMatrix m = from_rows({{2, 1}, {1, 3}});
    std::vector<Rat> rhs{Rat(1), Rat(0)};
    auto x = solve(m, rhs);
    REQUIRE(x.size() == 2);
    CHECK(x[0] == make_rat(3, 5));
    CHECK(x[1] == make_rat(-1, 5));

    QMatrix inv = inverse(m);
    // m * inv == identity, entrywise.
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) {
            Rat acc;
            for (std::size_t k = 0; k < 2; ++k) acc += m.at(i, k) * inv.at(k, j);
            CHECK(acc == (i == j ? 1 : 0));
        }

    QMatrix sing = from_rows({{1, 2}, {2, 4}});
    CHECK_THROWS_AS(solve(sing, rhs), Error);
    CHECK_THROWS_AS(inverse(sing), Error);
}

TEST_CASE("inertia counts eigenvalue signs exactly") {
    Inertia hyper = inertia(from_rows({{0, 1}, {1, 0}}));
    CHECK(hyper.positive == 1);
    CHECK(hyper.negative == 1);
    CHECK(hyper.zero == 0);

    Inertia negdef = inertia(from_rows({{-2, 1}, {1, -2}}));
    CHECK(negdef.positive == 0);
    CHECK(negdef.negative == 2);

    Inertia degen = inertia(from_rows({{1, 1}, {1, 1}}));
    CHECK(degen.positive == 1);
    CHECK(degen.zero == 1);

    CHECK(from_rows({{0, 1}, {1, 0}}).is_symmetric());
    CHECK(!from_rows({{0, 1}, {2, 0}}).is_symmetric());
}
