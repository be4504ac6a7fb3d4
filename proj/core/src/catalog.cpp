#include "slopestab/catalog.hpp"

#include <sstream>

namespace slopestab {
namespace {

DivClass cls(std::vector<long> v) {
    DivClass d;
    d.reserve(v.size());
    for (long x : v) d.emplace_back(x);
    return d;
}

QMatrix diag_form(std::vector<long> diag) {
    QMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
    return m;
}

CurveRecord curve(std::string label, DivClass c, long genus) {
    return {std::move(label), std::move(c), Rat(genus)};
}

CatalogEntry entry_p2() {
    SurfaceModel m;
    m.name = "p2";
    m.basis = {"H"};
    m.gram = diag_form({1});
    m.canonical = cls({-3});
    m.curves = {curve("H", cls({1}), 0)};
    m.curves_complete = true;
    m.polarisations = {{"line", cls({1})}};
    return {"p2", std::move(m), "plane numerics; roster is the line class"};
}

CatalogEntry entry_dp1() {
    SurfaceModel m;
    m.name = "dp1";
    m.basis = {"H", "E"};
    m.gram = diag_form({1, -1});
    m.canonical = cls({-3, 1});
    m.curves = {curve("E", cls({0, 1}), 0), curve("F", cls({1, -1}), 0)};
    m.curves_complete = true;
    m.reference_positive = cls({1, 0});
    m.polarisations = {{"3H-E", cls({3, -1})}};
    m.divisors = {{"E", {{"E", 1}}}};
    return {"dp1", std::move(m),
            "plane blown up at a point; roster E and the line pencil class F = H-E"};
}

CatalogEntry entry_dp2() {
    SurfaceModel m;
    m.name = "dp2";
    m.basis = {"H", "E1", "E2"};
    m.gram = diag_form({1, -1, -1});
    m.canonical = cls({-3, 1, 1});
    m.curves = {curve("E1", cls({0, 1, 0}), 0), curve("E2", cls({0, 0, 1}), 0),
                curve("L12", cls({1, -1, -1}), 0)};
    m.curves_complete = true;
    m.reference_positive = cls({1, 0, 0});
    m.effective_generators = {cls({0, 1, 0}), cls({0, 0, 1}), cls({1, -1, -1})};
    m.polarisations = {{"minus-K", cls({3, -1, -1})}};
    return {"dp2", std::move(m),
            "plane blown up at two points; roster is the full set of extremal curves"};
}

CatalogEntry entry_k3_shell() {
    SurfaceModel m;
    m.name = "k3-shell";
    m.basis = {"e1", "e2"};
    m.gram = QMatrix(2, 2);
    m.gram.at(0, 0) = -2;
    m.gram.at(0, 1) = 3;
    m.gram.at(1, 0) = 3;
    m.gram.at(1, 1) = -2;
    m.canonical = cls({0, 0});
    m.curves = {curve("e1", cls({1, 0}), 0), curve("e2", cls({0, 1}), 0)};
    m.curves_complete = false;
    m.kodaira_nonneg = true;
    m.reference_positive = cls({1, 1});
    m.polarisations = {{"h", cls({1, 1})}};
    return {"k3-shell", std::move(m),
            "an even rank-2 shell with trivial canonical class; the roster is "
            "incomplete by construction (such lattices carry infinitely many "
            "square -2 classes)"};
}

CatalogEntry entry_synthetic() {
    SurfaceModel m;
    m.name = "synthetic-highgenus";
    m.basis = {"A", "C"};
    m.gram = QMatrix(2, 2);
    m.gram.at(0, 0) = 1;
    m.gram.at(0, 1) = 1;
    m.gram.at(1, 0) = 1;
    m.gram.at(1, 1) = -1;
    m.canonical = cls({3, 0});
    m.curves = {curve("C", cls({0, 1}), 2)};
    m.curves_complete = false;
    m.kodaira_nonneg = true;
    m.reference_positive = cls({1, 0});
    m.polarisations = {{"A", cls({1, 0})}, {"ample", cls({2, 1})}};
    m.divisors = {{"C", {{"C", 1}}}};
    return {"synthetic-highgenus", std::move(m),
            "minimal rank-2 model carrying a genus-2 class of square -1; "
            "roster asserted, not certified"};
}

CatalogEntry entry_hirzebruch(long n) {
    if (n < 0) throw Error("catalog: hirzebruch needs n >= 0");
    SurfaceModel m;
    std::ostringstream key;
    key << "hirzebruch(" << n << ")";
    m.name = key.str();
    m.basis = {"s", "f"};
    m.gram = QMatrix(2, 2);
    m.gram.at(0, 0) = -n;
    m.gram.at(0, 1) = 1;
    m.gram.at(1, 0) = 1;
    m.gram.at(1, 1) = 0;
    m.canonical = cls({-2, -(n + 2)});
    m.curves = {curve("f", cls({0, 1}), 0), curve("s", cls({1, 0}), 0)};
    m.curves_complete = true;
    m.reference_positive = cls({1, n + 1});
    m.polarisations = {{"ample", cls({1, n + 1})}};
    return {key.str(), std::move(m), "ruled model: fibre and the negative section"};
}

CatalogEntry entry_product(long g, long h, long d) {
    if (g < 2 || d < 1) throw Error("catalog: product needs g >= 2 and d >= 1");
    if (h != (g - 1) * d + 1)
        throw Error("catalog: product genus mismatch, expected h = (g-1)d+1 = " +
                    std::to_string((g - 1) * d + 1));
    SurfaceModel m;
    std::ostringstream key;
    key << "product(" << g << "," << h << "," << d << ")";
    m.name = key.str();
    m.basis = {"Fg", "Fh", "E"};
    m.gram = QMatrix(3, 3);
    m.gram.at(0, 1) = m.gram.at(1, 0) = 1;
    m.gram.at(0, 2) = m.gram.at(2, 0) = 1;
    m.gram.at(1, 2) = m.gram.at(2, 1) = d;
    m.gram.at(2, 2) = Rat(d * (2 - 2 * g));
    m.canonical = cls({(2 * g - 2) * d, 2 * g - 2, 0});
    m.curves = {curve("Fg", cls({1, 0, 0}), g), curve("Fh", cls({0, 1, 0}), h),
                curve("E", cls({0, 0, 1}), h)};
    m.curves_complete = false;
    m.kodaira_nonneg = true;
    m.reference_positive = cls({1, 1, 0});
    m.polarisations = {{"ample", cls({1, 1, 0})},
                       {"boundary", cls({(2 * g - 2) * d, 0, 1})}};
    m.divisors = {{"graph", {{"Fg", 1}, {"E", 1}}}};
    return {key.str(), std::move(m),
            "product of curves of genus g and h with the graph class of a "
            "degree-d cover; roster asserted, not certified; the boundary "
            "polarisation is nef with positive square, not ample"};
}

CatalogEntry entry_verygen_product(long g1, long g2) {
    if (g1 < 2 || g2 < 2) throw Error("catalog: verygen-product needs g1, g2 >= 2");
    SurfaceModel m;
    std::ostringstream key;
    key << "verygen-product(" << g1 << "," << g2 << ")";
    m.name = key.str();
    m.basis = {"F1", "F2"};
    m.gram = QMatrix(2, 2);
    m.gram.at(0, 1) = m.gram.at(1, 0) = 1;
    m.canonical = cls({2 * g2 - 2, 2 * g1 - 2});
    m.curves = {curve("F1", cls({1, 0}), g1), curve("F2", cls({0, 1}), g2)};
    m.curves_complete = true;
    m.kodaira_nonneg = true;
    m.reference_positive = cls({1, 1});
    m.polarisations = {{"K", cls({2 * g2 - 2, 2 * g1 - 2})}};
    return {key.str(), std::move(m),
            "rank-2 product shell of two fibre classes (very general member: "
            "the two fibres span the curve classes)"};
}

CatalogEntry entry_blownup_quartic(long k) {
    if (k != 17) throw Error("catalog: blownup-quartic is instantiated at 17 points only");
    SurfaceModel m;
    m.name = "blownup-quartic(17)";
    m.basis = {"H"};
    std::vector<long> diag{1};
    for (int i = 1; i <= 17; ++i) {
        m.basis.push_back("E" + std::to_string(i));
        diag.push_back(-1);
    }
    m.gram = diag_form(diag);
    std::vector<long> kvec{-3};
    std::vector<long> cvec{4};
    for (int i = 0; i < 17; ++i) {
        kvec.push_back(1);
        cvec.push_back(-1);
    }
    m.canonical = cls(kvec);
    m.curves.push_back(curve("C", cls(cvec), 3));
    for (int i = 1; i <= 17; ++i) {
        std::vector<long> e(18, 0);
        e[i] = 1;
        m.curves.push_back(curve("E" + std::to_string(i), cls(e), 0));
    }
    m.curves_complete = false;
    m.reference_positive = cls(std::vector<long>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    std::vector<long> amp{5};
    for (int i = 0; i < 17; ++i) amp.push_back(-1);
    m.polarisations = {{"ample", cls(amp)}};
    m.divisors = {{"C", {{"C", 1}}}};
    return {"blownup-quartic(17)", std::move(m),
            "plane blown up at 17 points on a quartic curve; ampleness of the "
            "featured class and roster completeness rest on general position, "
            "asserted not certified"};
}

struct ParsedKey {
    std::string base;
    std::vector<long> args;
};

ParsedKey parse_key(const std::string& key) {
    auto open = key.find('(');
    if (open == std::string::npos) return {key, {}};
    if (key.back() != ')') throw Error("catalog: malformed key '" + key + "'");
    ParsedKey out;
    out.base = key.substr(0, open);
    std::string inner = key.substr(open + 1, key.size() - open - 2);
    std::istringstream in(inner);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty() || tok.find_first_not_of("-0123456789") != std::string::npos)
            throw Error("catalog: bad parameter '" + tok + "' in key '" + key + "'");
        out.args.push_back(std::stol(tok));
    }
    if (out.args.empty()) throw Error("catalog: key '" + key + "' needs parameters");
    return out;
}

CatalogEntry dispatch(const ParsedKey& k) {
    auto arity = [&](std::size_t lo, std::size_t hi) {
        if (k.args.size() < lo || k.args.size() > hi)
            throw Error("catalog: wrong parameter count for '" + k.base + "'");
    };
    if (k.base == "p2" && k.args.empty()) return entry_p2();
    if (k.base == "dp1" && k.args.empty()) return entry_dp1();
    if (k.base == "dp2" && k.args.empty()) return entry_dp2();
    if (k.base == "k3-shell" && k.args.empty()) return entry_k3_shell();
    if (k.base == "synthetic-highgenus" && k.args.empty()) return entry_synthetic();
    if (k.base == "hirzebruch") {
        arity(1, 1);
        return entry_hirzebruch(k.args[0]);
    }
    if (k.base == "product") {
        arity(2, 3);
        long g = k.args[0];
        long d = k.args.back();
        long h = (k.args.size() == 3) ? k.args[1] : (g - 1) * d + 1;
        return entry_product(g, h, d);
    }
    if (k.base == "verygen-product") {
        arity(2, 2);
        return entry_verygen_product(k.args[0], k.args[1]);
    }
    if (k.base == "blownup-quartic") {
        arity(1, 1);
        return entry_blownup_quartic(k.args[0]);
    }
    throw Error("catalog: unknown key '" + k.base + "'");
}

}  // namespace

CatalogEntry catalog_get(const std::string& key) {
    CatalogEntry e = dispatch(parse_key(key));
    validate(e.model);
    // Featured polarisations must at least be nef with positive square;
    // is_ample may legitimately be only conditional (or fail, for declared
    // boundary classes) when the roster is asserted.
    for (const auto& pol : e.model.polarisations) {
        if (sign(selfint(e.model, pol.cls)) <= 0)
            throw Error("catalog: featured polarisation '" + pol.label +
                        "' has non-positive square");
        if (!is_nef(e.model, pol.cls).passed())
            throw Error("catalog: featured polarisation '" + pol.label + "' is not nef");
    }
    return e;
}

std::vector<std::string> catalog_keys() {
    return {"p2",
            "dp1",
            "dp2",
            "hirzebruch(n)",
            "k3-shell",
            "product(g,d)",
            "product(g,h,d)",
            "verygen-product(g1,g2)",
            "blownup-quartic(17)",
            "synthetic-highgenus"};
}

}  // namespace slopestab
