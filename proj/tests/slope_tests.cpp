#include "doctest.h"

#include "slopestab/catalog.hpp"
#include "slopestab/slope.hpp"

using namespace slopestab;

namespace {

DivClass cls(std::vector<long> v) {
    DivClass d;
    for (long x : v) d.emplace_back(x);
    return d;
}

}  // namespace

TEST_CASE("surface slope") {
    SurfaceModel m = catalog_get("dp1").model;
    CHECK(mu_surface(m, cls({3, -1})) == 1);  // anticanonical polarisation
    CHECK(mu_surface(m, cls({1, 0})) == 3);
    CHECK_THROWS_AS(mu_surface(m, cls({0, 1})), Error);  // L^2 < 0

    SurfaceModel vg = catalog_get("verygen-product(2,2)").model;
    CHECK(mu_surface(vg, vg.canonical) == -1);
}

TEST_CASE("divisor slope at a parameter") {
    SurfaceModel m = catalog_get("dp1").model;
    DivClass l = cls({3, -1}), e = cls({0, 1});
    // 3(1+c)/(c(3+c)) along the exceptional curve.
    CHECK(mu_divisor(m, l, e, make_rat(9, 5)) == make_rat(35, 36));
    CHECK(mu_divisor(m, l, e, Rat(1)) == make_rat(3, 2));
    CHECK(mu_divisor(m, l, e, Rat(2)) == make_rat(9, 10));
    CHECK_THROWS_AS(mu_divisor(m, l, e, Rat(0)), Error);
    CHECK_THROWS_AS(mu_divisor(m, l, e, Rat(-1)), Error);
}

TEST_CASE("square bound: exact root of (L - tD)^2") {
    SurfaceModel m = catalog_get("dp1").model;
    DivClass l = cls({3, -1});

    CHECK(pseudo_epsilon(m, l, cls({0, 1})) == QuadValue(Rat(2)));

    // Nontrivial radical: the verygen product along a fibre has D^2 = 0,
    // L = K, so the bound is linear: K^2 / (2 K.F1) = 8/4 = 2.
    SurfaceModel vg = catalog_get("verygen-product(2,2)").model;
    CHECK(pseudo_epsilon(vg, vg.canonical, cls({1, 0})) == QuadValue(Rat(2)));

    // Generic case: check the defining quadratic exactly.
    SurfaceModel hg = catalog_get("synthetic-highgenus").model;
    DivClass a = cls({2, 1}), c = cls({0, 1});
    QuadValue eps = pseudo_epsilon(hg, a, c);
    Rat l2 = selfint(hg, a), ld = pair(hg, a, c), d2 = selfint(hg, c);
    CHECK(QuadValue(d2) * eps * eps - QuadValue(2 * ld) * eps + QuadValue(l2) ==
          QuadValue(Rat(0)));
    CHECK(eps == QuadValue(Rat(-1), Rat(2), Int(2)));  // -1 + 2 sqrt 2
    CHECK(QuadValue(d2) * eps <= QuadValue(ld));
}

TEST_CASE("roster Seshadri bound") {
    SurfaceModel m = catalog_get("dp1").model;
    SeshadriBound sb = seshadri_divisor(m, cls({3, -1}), cls({0, 1}));
    CHECK(sb.value == QuadValue(Rat(2)));
    CHECK(sb.binding == "square-bound");  // the curve ratio ties, square wins
    CHECK(!sb.conditional);

    // A roster curve genuinely below the square bound.
    SurfaceModel d2 = catalog_get("dp2").model;
    SeshadriBound sb2 = seshadri_divisor(d2, cls({3, -1, -1}), cls({0, 1, 1}));
    CHECK(sb2.value == QuadValue(make_rat(1, 2)));
    CHECK(sb2.binding == "L12");
    CHECK(!sb2.conditional);

    // Incomplete roster: the bound is only conditional.
    SurfaceModel hg = catalog_get("synthetic-highgenus").model;
    SeshadriBound sb3 = seshadri_divisor(hg, cls({2, 1}), cls({0, 1}));
    CHECK(sb3.conditional);
    CHECK(sb3.binding == "square-bound");

    CHECK_THROWS_AS(seshadri_divisor(m, cls({1, 0}), cls({0, 1})), Error);  // not ample
}

TEST_CASE("destabilisation along the exceptional curve of the blown-up plane") {
    SurfaceModel m = catalog_get("dp1").model;
    DivClass l = cls({3, -1}), e = cls({0, 1});

    StabilityVerdict v = destabilizes(m, l, e, Mode::Strict);
    CHECK(!v.stable_wrt);
    CHECK(!v.conditional);
    CHECK(v.mu_x == 1);
    CHECK(v.epsilon_used == QuadValue(Rat(2)));
    CHECK(v.epsilon_kind == EpsilonKind::RosterSeshadri);
    REQUIRE(v.witness_c);
    REQUIRE(v.mu_at_witness);
    // The witness layer must hand back a verifiable exact point: inside the
    // interval, slope strictly below the surface slope, consistent recompute.
    CHECK(sign(*v.witness_c) > 0);
    CHECK(QuadValue(*v.witness_c) <= v.epsilon_used);
    CHECK(*v.mu_at_witness == mu_divisor(m, l, e, *v.witness_c));
    CHECK(*v.mu_at_witness < v.mu_x);
    // mu_c < mu exactly when c^2 > 3 here.
    CHECK(*v.witness_c * *v.witness_c > 3);

    StabilityVerdict open = destabilizes(m, l, e, Mode::Pseudo);
    CHECK(!open.stable_wrt);
    CHECK(open.epsilon_kind == EpsilonKind::PseudoEpsilon);
    CHECK(QuadValue(*open.witness_c) < open.epsilon_used);  // open interval

    // The line pencil does not destabilise.
    StabilityVerdict st = destabilizes(m, l, cls({1, -1}), Mode::Strict);
    CHECK(st.stable_wrt);
    CHECK(!st.witness_c);

    CHECK_THROWS_AS(destabilizes(m, cls({1, 0}), e, Mode::Strict), Error);
    CHECK_THROWS_AS(destabilizes(m, l, cls({0, 0}), Mode::Strict), Error);
}

TEST_CASE("Q-form and its superadditivity defect") {
    SurfaceModel m = catalog_get("dp2").model;
    DivClass a = cls({3, -1, -1});
    std::vector<std::pair<DivClass, DivClass>> pairs = {
        {cls({0, 1, 0}), cls({0, 0, 1})},
        {cls({1, -1, -1}), cls({0, 1, 0})},
        {cls({2, -1, 0}), cls({1, 0, -1})},
    };
    for (const auto& [d1, d2] : pairs) {
        Rat defect = q_form(m, a, d1 + d2) - q_form(m, a, d1) - q_form(m, a, d2);
        Rat expect = 8 * pair(m, a, d1) * pair(m, a, d2) +
                     2 * selfint(m, a) * pair(m, d1, d2);
        CHECK(defect == expect);
    }
}

TEST_CASE("sign of the reduced cubic matches the slope comparison") {
    SurfaceModel m = catalog_get("dp1").model;
    DivClass l = cls({3, -1}), e = cls({0, 1});
    Rat mu = mu_surface(m, l);

    for (const Rat& c : {Rat(1), make_rat(3, 2), make_rat(9, 5), make_rat(19, 10)}) {
        StabilityCubic p = stability_cubic(m, l, e, c);
        CHECK(p.value == p.terms[0] + p.terms[1] + p.terms[2] + p.terms[3]);
        CHECK(sign(p.value) == sign(mu_divisor(m, l, e, c) - mu));
    }
}

TEST_CASE("removal admissibility bounds") {
    SurfaceModel m = catalog_get("dp1").model;
    DivisorConfig fe = make_config(m, {{"E", 1}});

    RemovalAdmissible ra = removal_admissible(m, cls({0, 1}), fe);
    CHECK(ra.total_bound);
    CHECK(ra.component_bound);

    RemovalAdmissible rb = removal_admissible(m, cls({0, 2}), fe);
    CHECK(rb.total_bound);
    CHECK(rb.component_bound);

    // D.F is positive here, so both bounds break.
    RemovalAdmissible rc = removal_admissible(m, cls({3, -1}), fe);
    CHECK(!rc.total_bound);
    CHECK(!rc.component_bound);
}

TEST_CASE("adjoint reduction reaches the recognised terminal shapes") {
    SUBCASE("blown-up plane: remove, contract, then stuck on the bare plane") {
        SurfaceModel m = catalog_get("dp1").model;
        ReductionResult r =
            adjoint_reduction(m, make_config(m, {{"E", 1}}), ReductionMode::KodairaNonneg);
        CHECK(r.outcome == ReductionOutcome::Stuck);
        CHECK(r.stuck_reason == "no applicable rule");
        REQUIRE(r.log.size() == 2);
        CHECK(r.log[0].action == "remove");
        CHECK(r.log[0].detail == "E");
        CHECK(r.log[1].action == "contract");
        CHECK(r.log[1].detail == "E");
        CHECK(r.final_model.rank() == 1);
        CHECK(r.final_config.empty());
    }
    SUBCASE("plane with a line") {
        SurfaceModel p2 = catalog_get("p2").model;
        ReductionResult r =
            adjoint_reduction(p2, make_config(p2, {{"H", 1}}), ReductionMode::KodairaNonneg);
        CHECK(r.outcome == ReductionOutcome::PlaneLine);
        CHECK(r.log.empty());
    }
    SUBCASE("ruled surface with a fibre") {
        SurfaceModel hz = catalog_get("hirzebruch(1)").model;
        ReductionResult r =
            adjoint_reduction(hz, make_config(hz, {{"f", 1}}), ReductionMode::KodairaNonneg);
        CHECK(r.outcome == ReductionOutcome::RuledFibres);
    }
    SUBCASE("adjoint bundle already nef") {
        SurfaceModel vg = catalog_get("verygen-product(2,2)").model;
        ReductionResult r =
            adjoint_reduction(vg, make_config(vg, {{"F1", 1}}), ReductionMode::KodairaNonneg);
        CHECK(r.outcome == ReductionOutcome::AdjointNef);
        CHECK(r.log.empty());
    }
}

TEST_CASE("positivity of the slope-prescreen class") {
    SurfaceModel m = catalog_get("dp1").model;
    CHECK(check_weinkove(m, cls({3, -1})).status == Positivity::No);

    SurfaceModel vg = catalog_get("verygen-product(2,2)").model;
    CHECK(check_weinkove(vg, vg.canonical).status == Positivity::Yes);
}

TEST_CASE("necessary genus bound for destabilisers") {
    SurfaceModel vg = catalog_get("verygen-product(2,2)").model;
    CHECK(genus_obstruction(vg, vg.canonical, cls({1, 0})));       // p_a = 2
    CHECK(!genus_obstruction(vg, vg.canonical, cls({1, -1})));     // p_a = 0
    SurfaceModel m = catalog_get("dp1").model;
    CHECK_THROWS_AS(genus_obstruction(m, cls({3, -1}), cls({0, 1})), Error);
}
