#include "doctest.h"

#include "slopestab/catalog.hpp"
#include "slopestab/surface_io.hpp"

using namespace slopestab;

TEST_CASE("every catalog family instantiates and validates") {
    for (const char* key : {"p2", "dp1", "dp2", "k3-shell", "synthetic-highgenus",
                            "hirzebruch(0)", "hirzebruch(1)", "hirzebruch(5)",
                            "product(2,1)", "product(2,5)", "product(3,5,2)",
                            "verygen-product(2,2)", "verygen-product(3,5)",
                            "blownup-quartic(17)"}) {
        CatalogEntry e = catalog_get(key);
        CHECK_NOTHROW(validate(e.model));
        CHECK(!e.notes.empty());
        for (const auto& pol : e.model.polarisations) {
            CHECK_MESSAGE(sign(selfint(e.model, pol.cls)) > 0, key);
            CHECK_MESSAGE(is_nef(e.model, pol.cls).passed(), key);
        }
    }
    CHECK(catalog_keys().size() == 10);
}

TEST_CASE("catalog rejects bad keys and parameters") {
    CHECK_THROWS_AS(catalog_get("nonsense"), Error);
    CHECK_THROWS_AS(catalog_get("hirzebruch(-1)"), Error);
    CHECK_THROWS_AS(catalog_get("hirzebruch(1,2)"), Error);
    CHECK_THROWS_AS(catalog_get("product(1,1)"), Error);
    CHECK_THROWS_AS(catalog_get("product(2,3,5)"), Error);  // genus mismatch
    CHECK_THROWS_AS(catalog_get("verygen-product(1,2)"), Error);
    CHECK_THROWS_AS(catalog_get("blownup-quartic(5)"), Error);
    CHECK_THROWS_AS(catalog_get("product()"), Error);
    CHECK_THROWS_AS(catalog_get("product(2,x)"), Error);
    CHECK_THROWS_AS(catalog_get("product(2,1"), Error);
}

TEST_CASE("the shorthand product key expands the middle genus") {
    CHECK(catalog_get("product(2,5)").model.name == "product(2,6,5)");
    CHECK(catalog_get("product(2,6,5)").model.name == "product(2,6,5)");
}

TEST_CASE("class expressions") {
    SurfaceModel m = catalog_get("dp1").model;
    CHECK(parse_class_expr(m, "3H-E") == DivClass{Rat(3), Rat(-1)});
    CHECK(parse_class_expr(m, "-K") == DivClass{Rat(3), Rat(-1)});
    CHECK(parse_class_expr(m, "K") == m.canonical);
    CHECK(parse_class_expr(m, "0") == DivClass{Rat(0), Rat(0)});
    CHECK(parse_class_expr(m, "H") == DivClass{Rat(1), Rat(0)});
    CHECK(parse_class_expr(m, "1/2H+3/2E") == DivClass{make_rat(1, 2), make_rat(3, 2)});
    CHECK(parse_class_expr(m, "2K+H") == DivClass{Rat(-5), Rat(2)});

    CHECK_THROWS_AS(parse_class_expr(m, ""), Error);
    CHECK_THROWS_AS(parse_class_expr(m, "3Q"), Error);
    CHECK_THROWS_AS(parse_class_expr(m, "H+"), Error);
    CHECK_THROWS_AS(parse_class_expr(m, "H E"), Error);
}

TEST_CASE("configuration expressions") {
    auto parts = parse_config_expr("2*C+E");
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == std::pair<std::string, int>{"C", 2});
    CHECK(parts[1] == std::pair<std::string, int>{"E", 1});
    CHECK(parse_config_expr("2C+E") == parts);
    CHECK(parse_config_expr("C").size() == 1);

    CHECK_THROWS_AS(parse_config_expr(""), Error);
    CHECK_THROWS_AS(parse_config_expr("C-E"), Error);
    CHECK_THROWS_AS(parse_config_expr("-C"), Error);
}

TEST_CASE("surface documents round-trip byte-identically") {
    for (const char* key :
         {"dp1", "dp2", "k3-shell", "product(2,1)", "blownup-quartic(17)"}) {
        SurfaceModel m = catalog_get(key).model;
        std::string text = serialize_surface(m);
        SurfaceModel back = parse_surface(text);
        CHECK_MESSAGE(serialize_surface(back) == text, key);
        CHECK(back.name == m.name);
        CHECK(back.curves_complete == m.curves_complete);
        CHECK(back.gram == m.gram);
    }
}

TEST_CASE("hand-written documents parse, with comments and blank lines") {
    const std::string doc =
        "# a ruled shell\n"
        "name demo\n"
        "basis s f\n"
        "gram -1 1\n"
        "gram 1 0\n"
        "\n"
        "canonical -2H... \n";
    // Deliberate nonsense on the canonical line: the diagnostic carries the
    // line number.
    try {
        parse_surface(doc);
        FAIL("expected a parse error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 7") != std::string::npos);
    }

    const std::string good =
        "name demo\n"
        "basis s f\n"
        "gram -1 1\n"
        "gram 1 0\n"
        "canonical -2s-3f\n"
        "curve s s genus 0\n"
        "curve f f genus 0\n"
        "curves_complete true\n"
        "reference_positive_class s+2f\n"
        "polarisation ample s+2f\n"
        "divisor fibre f\n";
    SurfaceModel m = parse_surface(good);
    CHECK(m.name == "demo");
    CHECK(m.rank() == 2);
    CHECK(m.curves_complete);
    REQUIRE(m.polarisations.size() == 1);
    CHECK(m.polarisations[0].cls == DivClass{Rat(1), Rat(2)});
    REQUIRE(m.divisors.size() == 1);
    CHECK(m.divisors[0].parts == std::vector<std::pair<std::string, int>>{{"f", 1}});

    // Parsed models must survive the validation battery: a genus lie fails.
    const std::string lie =
        "name demo\n"
        "basis s f\n"
        "gram -1 1\n"
        "gram 1 0\n"
        "canonical -2s-3f\n"
        "curve s s genus 1\n";
    CHECK_THROWS_AS(parse_surface(lie), Error);
}
