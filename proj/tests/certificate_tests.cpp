#include "doctest.h"

#include "slopestab/catalog.hpp"
#include "slopestab/certificate.hpp"

using namespace slopestab;

namespace {

DivClass cls(std::vector<long> v) {
    DivClass d;
    for (long x : v) d.emplace_back(x);
    return d;
}

}  // namespace

TEST_CASE("orthogonalisation against a single high-genus curve") {
    SurfaceModel m = catalog_get("synthetic-highgenus").model;
    DivisorConfig cfg = make_config(m, {{"C", 1}});
    OrthogonalSolution sol = solve_orthogonal_polarization(m, cfg, cls({1, 0}));
    REQUIRE(sol.q.size() == 1);
    CHECK(sol.q[0] == 1);
    CHECK(sol.l0 == cls({1, 1}));
    CHECK(pair(m, sol.l0, cls({0, 1})) == 0);

    // Base must pass the ampleness test.
    CHECK_THROWS_AS(solve_orthogonal_polarization(m, cfg, cls({0, 1})), Error);
}

TEST_CASE("parameter choice from the explicit threshold") {
    SurfaceModel m = catalog_get("synthetic-highgenus").model;
    DivisorConfig cfg = make_config(m, {{"C", 1}});
    // mu(X, l0) = -3 beats the limit slope scale G = -3 at G/mu0 = 1, which
    // ties the floor; the midpoint of (0, 1) is 1/2.
    CHECK(find_destabilizing_c(m, cls({1, 1}), cfg, Rat(1)) == make_rat(1, 2));
    CHECK(find_destabilizing_c(m, cls({1, 1}), cfg, make_rat(1, 2)) ==
          make_rat(1, 4));
}

TEST_CASE("full certificate for the synthetic high-genus model") {
    SurfaceModel m = catalog_get("synthetic-highgenus").model;
    DivisorConfig cfg = make_config(m, {{"C", 1}});
    Certificate cert = build_certificate(m, cfg, cls({1, 0}));

    CHECK(cert.surface == "synthetic-highgenus");
    REQUIRE(cert.q.size() == 1);
    CHECK(cert.q[0] == 1);
    CHECK(cert.l0 == cls({1, 1}));
    CHECK(cert.epsilon_floor == 1);
    CHECK(cert.c == make_rat(1, 2));
    CHECK(cert.s == make_rat(1, 8));
    CHECK(cert.polarisation == DivClass{make_rat(9, 8), Rat(1)});
    CHECK(cert.genus == 2);
    CHECK(cert.mu_x == make_rat(-408, 161));
    CHECK(cert.mu_c == make_rat(-18, 7));
    CHECK(cert.mu_c < cert.mu_x);
    CHECK(cert.conditional);  // the roster here is asserted, not certified

    VerifyResult vr = verify_certificate(m, cert);
    CHECK(vr.ok);
    CHECK(vr.violated.empty());
}

TEST_CASE("certificate for the blown-up quartic") {
    SurfaceModel m = catalog_get("blownup-quartic(17)").model;
    DivisorConfig cfg = make_config(m, {{"C", 1}});
    std::vector<long> amp{5};
    for (int i = 0; i < 17; ++i) amp.push_back(-1);
    Certificate cert = build_certificate(m, cfg, cls(amp));

    REQUIRE(cert.q.size() == 1);
    CHECK(cert.q[0] == 3);
    CHECK(cert.epsilon_floor == 3);
    CHECK(cert.c == make_rat(3, 2));
    CHECK(cert.s == make_rat(1, 4));
    CHECK(cert.genus == 3);
    CHECK(cert.mu_x == make_rat(-35, 52));
    CHECK(cert.mu_c == make_rat(-6, 5));
    CHECK(cert.conditional);
    CHECK(verify_certificate(m, cert).ok);
}

TEST_CASE("construction scales covariantly with the base") {
    SurfaceModel m = catalog_get("synthetic-highgenus").model;
    DivisorConfig cfg = make_config(m, {{"C", 1}});
    Certificate one = build_certificate(m, cfg, cls({1, 0}));
    Certificate two = build_certificate(m, cfg, cls({2, 0}));

    CHECK(two.q[0] == 2 * one.q[0]);
    CHECK(two.l0 == Rat(2) * one.l0);
    CHECK(two.epsilon_floor == 2 * one.epsilon_floor);
    CHECK(two.c == 2 * one.c);
    CHECK(two.s == one.s);
    CHECK(two.polarisation == Rat(2) * one.polarisation);
    CHECK(two.mu_x == one.mu_x / 2);
    CHECK(two.mu_c == one.mu_c / 2);
    CHECK(verify_certificate(m, two).ok);
}

TEST_CASE("construction rejects ineligible configurations") {
    SurfaceModel dp1 = catalog_get("dp1").model;
    // Genus 0: no high-genus configuration to certify.
    CHECK_THROWS_AS(
        build_certificate(dp1, make_config(dp1, {{"E", 1}}), cls({3, -1})), Error);
    // Non-exceptional component.
    CHECK_THROWS_AS(
        build_certificate(dp1, make_config(dp1, {{"F", 1}}), cls({3, -1})), Error);
}

TEST_CASE("serialisation round-trips byte-identically") {
    SurfaceModel m = catalog_get("synthetic-highgenus").model;
    Certificate cert =
        build_certificate(m, make_config(m, {{"C", 1}}), cls({1, 0}));
    std::string text = serialize_certificate(cert);
    Certificate back = parse_certificate(text);
    CHECK(serialize_certificate(back) == text);
    CHECK(verify_certificate(m, back).ok);

    CHECK_THROWS_AS(parse_certificate(""), Error);
    CHECK_THROWS_AS(parse_certificate("cert_surface\n"), Error);
    CHECK_THROWS_AS(parse_certificate(text + "unknown_key 1\n"), Error);
}

TEST_CASE("verification names the first violated invariant") {
    SurfaceModel m = catalog_get("synthetic-highgenus").model;
    Certificate good =
        build_certificate(m, make_config(m, {{"C", 1}}), cls({1, 0}));

    auto violated = [&](Certificate c) { return verify_certificate(m, c).violated; };

    Certificate t = good;
    t.config = {{"nope", 1}};
    CHECK(violated(t) == "config");

    t = good;
    t.genus = 5;
    CHECK(violated(t) == "genus");

    t = good;
    t.q[0] = -1;
    CHECK(violated(t) == "coefficients");

    t = good;
    t.q[0] = 2;  // positive but no longer the orthogonalising solution
    CHECK(violated(t) == "orthogonal-base");

    t = good;
    t.c = 2;  // past the floor
    CHECK(violated(t) == "floor");

    t = good;
    t.s = 0;
    CHECK(violated(t) == "polarisation");

    t = good;
    t.conditional = false;  // claims certainty the roster cannot provide
    CHECK(violated(t) == "certainty");

    t = good;
    t.mu_c += 1;
    CHECK(violated(t) == "slope");

    // A wrong surface shows up as pairing-level breakage, not acceptance.
    SurfaceModel other = catalog_get("dp1").model;
    CHECK(!verify_certificate(other, good).ok);
}
