#include "doctest.h"

#include "slopestab/catalog.hpp"
#include "slopestab/lattice.hpp"

using namespace slopestab;

namespace {

DivClass cls(std::vector<long> v) {
    DivClass d;
    for (long x : v) d.emplace_back(x);
    return d;
}

SurfaceModel dp1() { return catalog_get("dp1").model; }
SurfaceModel dp2() { return catalog_get("dp2").model; }

}  // namespace

TEST_CASE("class arithmetic") {
    DivClass a = cls({3, -1}), b = cls({1, 1});
    CHECK(a + b == cls({4, 0}));
    CHECK(a - b == cls({2, -2}));
    CHECK(Rat(2) * a == cls({6, -2}));
    CHECK(is_zero_class(a - a));
    CHECK(!is_zero_class(a));
}

TEST_CASE("pairing, self-intersection, genus on a blown-up plane") {
    SurfaceModel m = dp1();
    DivClass h = cls({1, 0}), e = cls({0, 1}), f = cls({1, -1});
    CHECK(pair(m, h, h) == 1);
    CHECK(pair(m, e, e) == -1);
    CHECK(pair(m, h, e) == 0);
    CHECK(pair(m, f, e) == 1);
    CHECK(selfint(m, f) == 0);
    CHECK(pair(m, m.canonical, e) == -1);

    CHECK(arithmetic_genus(m, e) == 0);
    CHECK(arithmetic_genus(m, f) == 0);
    CHECK(arithmetic_genus(m, cls({3, -1})) == 1);  // plane cubic through a point
    CHECK(arithmetic_genus(m, cls({4, 0})) == 3);

    CHECK_THROWS_AS(pair(m, cls({1}), e), Error);
}

TEST_CASE("validate rejects inconsistent models") {
    SurfaceModel m;
    m.name = "bad";
    m.basis = {"H"};
    m.gram = QMatrix(1, 1);
    m.gram.at(0, 0) = 1;
    m.canonical = cls({-3});

    SUBCASE("stored genus contradicting adjunction") {
        m.curves = {{"H", cls({1}), Rat(1)}};  // true genus is 0
        CHECK_THROWS_AS(validate(m), Error);
    }
    SUBCASE("odd adjunction pairing") {
        m.canonical = cls({-2});  // K.H + H^2 = -1, not even
        m.curves = {{"H", cls({1}), {}}};
        CHECK_THROWS_AS(validate(m), Error);
    }
    SUBCASE("wrong signature") {
        m.gram.at(0, 0) = -1;
        m.canonical = cls({3});
        m.curves.clear();
        CHECK_THROWS_AS(validate(m), Error);
    }
    SUBCASE("duplicate labels") {
        m.basis = {"H", "H"};
        CHECK_THROWS_AS(validate(m), Error);
    }
    SUBCASE("good model passes") {
        m.curves = {{"H", cls({1}), Rat(0)}};
        CHECK_NOTHROW(validate(m));
    }
}

TEST_CASE("hyperbolic signature holds for every catalog gram") {
    for (const char* key : {"p2", "dp1", "dp2", "k3-shell", "synthetic-highgenus",
                            "hirzebruch(0)", "hirzebruch(3)", "product(2,2)",
                            "verygen-product(2,3)", "blownup-quartic(17)"}) {
        SurfaceModel m = catalog_get(key).model;
        Inertia in = inertia(m.gram);
        CHECK_MESSAGE(in.positive == 1, key);
        CHECK_MESSAGE(in.negative == m.rank() - 1, key);
        CHECK_MESSAGE(in.zero == 0, key);
    }
}

TEST_CASE("nef and ample verdicts track the roster") {
    SurfaceModel m = dp1();
    DivClass h = cls({1, 0}), mk = cls({3, -1});

    CHECK(is_nef(m, h).status == Positivity::Yes);
    CHECK(is_ample(m, mk).status == Positivity::Yes);

    // H touches E in degree zero: nef but not ample.
    PositivityVerdict amp = is_ample(m, h);
    CHECK(amp.status == Positivity::No);
    REQUIRE(!amp.reasons.empty());
    CHECK(amp.reasons[0].first == "E");
    CHECK(amp.reasons[0].second == 0);
    CHECK(positivity_reasons(amp) == "E=0");

    PositivityVerdict neg = is_nef(m, cls({0, 1}));
    CHECK(neg.status == Positivity::No);
    CHECK(positivity_reasons(neg) == "E=-1");

    // An incomplete roster can never certify more than a conditional yes.
    SurfaceModel k3 = catalog_get("k3-shell").model;
    CHECK(is_nef(k3, cls({1, 1})).status == Positivity::ConditionalYes);
    CHECK(is_ample(k3, cls({1, 1})).status == Positivity::ConditionalYes);
}

TEST_CASE("blow-down of a (-1)-curve") {
    SurfaceModel m = dp2();
    Contraction con = contract_minus_one(m, cls({0, 0, 1}));
    CHECK(con.model.rank() == 2);
    CHECK_NOTHROW(validate(con.model));

    // Pushforward corrects the pairing by the E-components.
    DivClass x = cls({2, -1, 0}), y = cls({1, 0, -1});
    Rat xe = pair(m, x, cls({0, 0, 1}));
    Rat ye = pair(m, y, cls({0, 0, 1}));
    CHECK(pair(con.model, con.push(x), con.push(y)) == pair(m, x, y) + xe * ye);
    CHECK(selfint(con.model, con.push(y)) == selfint(m, y) + ye * ye);

    // K_bar pairs with a pushforward like K - E upstairs.
    for (const DivClass& c : {x, y, cls({1, -1, -1})}) {
        CHECK(pair(con.model, con.model.canonical, con.push(c)) ==
              pair(m, m.canonical - cls({0, 0, 1}), c));
    }

    // E2 itself dies.
    CHECK(is_zero_class(con.push(cls({0, 0, 1}))));

    // Only honest roster (-1)-curves contract.
    CHECK_THROWS_AS(contract_minus_one(m, cls({1, 0, 0})), Error);     // square +1
    CHECK_THROWS_AS(contract_minus_one(m, cls({2, -1, -2})), Error);   // K degree -3
}

TEST_CASE("hyperbolic plane coordinates reconstruct the class") {
    SurfaceModel m = dp1();
    DivClass l = cls({3, -1});

    SUBCASE("negative square direction") {
        DivClass d = cls({0, 1});
        PlaneFrame fr = plane_coordinates(m, l, d);
        CHECK(fr.lambda == make_rat(1, 8));
        CHECK(fr.tau_square == -8);
        CHECK(!fr.normalized);
        CHECK(fr.y == QuadValue::sqrt_of(make_rat(9, 8)));
        // The defining identity D^2 = L^2 (1 - y^2), plus orthogonality of
        // the remainder D - lambda L.
        CHECK(fr.y * fr.y == QuadValue(Rat(1) - selfint(m, d) / selfint(m, l)));
        DivClass rest = d - fr.lambda * l;
        CHECK(pair(m, l, rest) == 0);
        CHECK(selfint(m, rest) == make_rat(-9, 8));
    }
    SUBCASE("normalized input reads off the tau coefficient") {
        DivClass d = cls({4, -4});  // L.D = 8 = L^2
        PlaneFrame fr = plane_coordinates(m, l, d);
        CHECK(fr.normalized);
        CHECK(fr.lambda == 1);
        CHECK(fr.y == QuadValue(Rat(1)));
        // D - L is exactly y * tau: orthogonal to L, square y^2 tau^2.
        DivClass rest = d - l;
        CHECK(pair(m, l, rest) == 0);
        CHECK(QuadValue(selfint(m, rest)) == fr.y * fr.y * QuadValue(fr.tau_square));
    }
    SUBCASE("degenerate inputs error") {
        CHECK_THROWS_AS(plane_coordinates(m, l, Rat(2) * l), Error);
        CHECK_THROWS_AS(plane_coordinates(m, cls({0, 1}), l), Error);  // L^2 < 0
        CHECK_THROWS_AS(plane_coordinates(m, l, cls({4, 0})), Error);  // D^2 > L^2
    }
}

TEST_CASE("class rendering") {
    SurfaceModel m = dp1();
    CHECK(class_str(m, cls({3, -1})) == "3H-E");
    CHECK(class_str(m, cls({0, 1})) == "E");
    CHECK(class_str(m, cls({0, 0})) == "0");
    DivClass half{make_rat(1, 2), Rat(-1)};
    CHECK(class_str(m, half) == "1/2H-E");
}
