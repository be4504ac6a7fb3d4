// Command line front end. Every decision is delegated to the library; this
// file only parses arguments, renders results, and maps errors to exit
// codes:
//   0  success / stable
//   10 a destabiliser was found
//   2  malformed input (file syntax, class expressions, certificates)
//   3  well-formed but inadmissible input (failed hypotheses, unknown keys)
//   4  the verdict is conditional and --strict-certainty was given
//   1  selfcheck criteria failed

#include "CLI11.hpp"
#include "json.hpp"

#include "slopestab/catalog.hpp"
#include "slopestab/certificate.hpp"
#include "slopestab/scan.hpp"
#include "slopestab/search.hpp"
#include "slopestab/selfcheck.hpp"
#include "slopestab/surface_io.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace slopestab;

namespace {

constexpr int kStable = 0;
constexpr int kUnstable = 10;
constexpr int kParse = 2;
constexpr int kInvalid = 3;
constexpr int kConditional = 4;

struct CliParseError {
    std::string msg;
};

// A surface argument is a readable file or a catalog key.
SurfaceModel load_surface(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        try {
            return read_surface_file(arg);
        } catch (const Error& e) {
            throw CliParseError{e.what()};
        }
    }
    return catalog_get(arg).model;  // Error here means invalid input
}

// Class arguments are expressions over the basis ("3H-E"); a bare featured
// polarisation label ("minus-K") resolves too.
DivClass arg_class(const SurfaceModel& s, const std::string& text) {
    try {
        return parse_class_expr(s, text);
    } catch (const Error& e) {
        for (const auto& nc : s.polarisations)
            if (nc.label == text) return nc.cls;
        throw CliParseError{e.what()};
    }
}

// Divisor arguments accept roster configurations ("2C+E"), featured divisor
// labels, and arbitrary class expressions ("3H-E"); configurations win when
// both parse.
DivClass arg_divisor(const SurfaceModel& s, const std::string& text) {
    try {
        return total_class(s, make_config(s, parse_config_expr(text)));
    } catch (const Error&) {
    }
    for (const auto& nc : s.divisors)
        if (nc.label == text) return total_class(s, make_config(s, nc.parts));
    return arg_class(s, text);
}

Mode arg_mode(const std::string& text) {
    if (text == "strict") return Mode::Strict;
    if (text == "pseudo") return Mode::Pseudo;
    throw CliParseError{"mode must be 'strict' or 'pseudo', got '" + text + "'"};
}

std::string ample_phrase(const PositivityVerdict& v) {
    if (v.status == Positivity::Yes) return "ample";
    if (v.status == Positivity::ConditionalYes) return "ample (conditional on the roster)";
    return "not ample: " + positivity_reasons(v);
}

void write_text(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << body;
}

json quad_json(const QuadValue& q) {
    return json{{"exact", q.str()}, {"approx", q.approx()}};
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- slope ---

int cmd_slope(const std::string& surface, const std::string& lexpr,
              const std::string& dexpr, const std::string& cval, bool as_json) {
    SurfaceModel m = load_surface(surface);
    const DivClass l = arg_class(m, lexpr);
    const auto amp = is_ample(m, l);
    std::string status = ample_phrase(amp);
    if (amp.status == Positivity::No) {
        const auto nef = is_nef(m, l);
        if (nef.status == Positivity::No) {
            std::cerr << "error: " << class_str(m, l)
                      << " is not a polarisation: " << positivity_reasons(nef) << "\n";
            return kInvalid;
        }
        status = "nef, not ample: " + positivity_reasons(amp);
    }
    const Rat mu = mu_surface(m, l);

    json j;
    j["surface"] = m.name;
    j["polarisation"] = class_str(m, l);
    j["polarisation_status"] = status;
    j["L2"] = rat_str(selfint(m, l));
    j["K.L"] = rat_str(pair(m, m.canonical, l));
    j["mu_x"] = rat_str(mu);

    if (!as_json) {
        std::cout << "surface: " << m.name << "\n"
                  << "polarisation: " << class_str(m, l) << " (" << status << ")\n"
                  << "L^2 = " << rat_str(selfint(m, l))
                  << ", K.L = " << rat_str(pair(m, m.canonical, l)) << "\n"
                  << "mu(X, L) = " << rat_str(mu) << "\n";
    }

    if (!dexpr.empty()) {
        const DivClass d = arg_divisor(m, dexpr);
        const QuadValue eps = pseudo_epsilon(m, l, d);
        j["divisor"] = class_str(m, d);
        j["L.D"] = rat_str(pair(m, l, d));
        j["D2"] = rat_str(selfint(m, d));
        j["genus"] = rat_str(arithmetic_genus(m, d));
        j["pseudo_epsilon"] = quad_json(eps);
        if (!as_json) {
            std::cout << "divisor: " << class_str(m, d)
                      << "  (L.D = " << rat_str(pair(m, l, d))
                      << ", D^2 = " << rat_str(selfint(m, d))
                      << ", p_a = " << rat_str(arithmetic_genus(m, d)) << ")\n"
                      << "pseudo-epsilon = " << eps.str() << "\n";
        }
        // The roster bound needs an ample polarisation; skip it on the nef
        // boundary rather than failing the whole report.
        if (amp.status != Positivity::No) {
            const auto sesh = seshadri_divisor(m, l, d);
            j["seshadri"] = quad_json(sesh.value);
            j["seshadri_binding"] = sesh.binding;
            j["seshadri_conditional"] = sesh.conditional;
            if (!as_json)
                std::cout << "seshadri bound = " << sesh.value.str() << " (binding "
                          << sesh.binding << (sesh.conditional ? ", conditional" : "")
                          << ")\n";
        }
        if (!cval.empty()) {
            Rat c;
            try {
                c = parse_rat(cval);
            } catch (const Error& e) {
                throw CliParseError{e.what()};
            }
            const Rat muc = mu_divisor(m, l, d, c);
            j["c"] = rat_str(c);
            j["mu_c"] = rat_str(muc);
            j["mu_c_below_mu_x"] = muc < mu;
            if (!as_json) {
                const char* rel = muc < mu ? "<" : (muc == mu ? "=" : ">");
                std::cout << "mu_c at c = " << rat_str(c) << ": " << rat_str(muc)
                          << "  (" << rel << " mu(X, L))\n";
            }
        }
    }
    if (as_json) emit(j);
    return kStable;
}

// --------------------------------------------------------------- destab ---

int cmd_destab(const std::string& surface, const std::string& lexpr,
               const std::string& dexpr, const std::string& mode_text,
               bool strict_certainty, bool as_json) {
    SurfaceModel m = load_surface(surface);
    const DivClass l = arg_class(m, lexpr);
    const DivClass d = arg_divisor(m, dexpr);
    const Mode mode = arg_mode(mode_text);
    const auto v = destabilizes(m, l, d, mode);

    json j;
    j["surface"] = m.name;
    j["polarisation"] = class_str(m, l);
    j["divisor"] = class_str(m, d);
    j["mode"] = mode_text;
    j["stable"] = v.stable_wrt;
    j["conditional"] = v.conditional;
    j["mu_x"] = rat_str(v.mu_x);
    j["epsilon"] = quad_json(v.epsilon_used);
    j["epsilon_kind"] = v.epsilon_kind == EpsilonKind::RosterSeshadri
                            ? "roster-seshadri"
                            : "pseudo-epsilon";
    if (!v.stable_wrt) {
        j["witness_c"] = rat_str(*v.witness_c);
        j["mu_at_witness"] = rat_str(*v.mu_at_witness);
    }
    if (as_json) {
        emit(j);
    } else {
        std::cout << "verdict: " << (v.stable_wrt ? "stable" : "unstable")
                  << " with respect to " << class_str(m, d) << " (" << mode_text
                  << " mode" << (v.conditional ? ", conditional on the roster" : "")
                  << ")\n"
                  << "interval bound = " << v.epsilon_used.str() << " ("
                  << j["epsilon_kind"].get<std::string>() << ")\n";
        if (!v.stable_wrt)
            std::cout << "witness c = " << rat_str(*v.witness_c)
                      << ", mu_c = " << rat_str(*v.mu_at_witness) << " < mu(X, L) = "
                      << rat_str(v.mu_x) << "\n";
        else
            std::cout << "mu(X, L) = " << rat_str(v.mu_x) << "\n";
    }
    if (strict_certainty && v.conditional) return kConditional;
    return v.stable_wrt ? kStable : kUnstable;
}

// --------------------------------------------------------------- search ---

int cmd_search(const std::string& surface, const std::string& lexpr, long bound,
               const std::string& mode_text, bool no_genus_filter, long long cap,
               bool strict_certainty, bool as_json) {
    SurfaceModel m = load_surface(surface);
    const DivClass l = arg_class(m, lexpr);
    SearchOptions opt;
    opt.bound = bound;
    opt.mode = arg_mode(mode_text);
    opt.genus_filter = !no_genus_filter;
    if (cap > 0) opt.candidate_cap = cap;
    const auto rep = search_destabilizers(m, l, opt);

    json j;
    j["surface"] = m.name;
    j["polarisation"] = class_str(m, l);
    j["bound"] = bound;
    j["tested"] = rep.tested;
    j["skipped_by_genus"] = rep.skipped_genus;
    j["genus_filter_active"] = rep.genus_filter_active;
    j["conditional"] = rep.conditional;
    j["destabilisers"] = json::array();
    for (const auto& h : rep.hits) {
        json e;
        e["divisor"] = h.expr;
        e["class"] = class_str(m, h.cls);
        e["witness_c"] = rat_str(*h.verdict.witness_c);
        e["mu_at_witness"] = rat_str(*h.verdict.mu_at_witness);
        e["mu_x"] = rat_str(h.verdict.mu_x);
        j["destabilisers"].push_back(e);
    }
    if (as_json) {
        emit(j);
    } else {
        std::cout << "tested " << rep.tested << " candidates up to bound " << bound;
        if (rep.genus_filter_active)
            std::cout << " (" << rep.skipped_genus << " skipped by the genus gate)";
        std::cout << "\n";
        if (rep.hits.empty()) {
            std::cout << "no destabiliser found"
                      << (rep.conditional ? " (conditional on the roster)" : "") << "\n";
        } else {
            for (const auto& h : rep.hits)
                std::cout << "destabiliser: " << h.expr << " = " << class_str(m, h.cls)
                          << "  witness c = " << rat_str(*h.verdict.witness_c)
                          << ", mu_c = " << rat_str(*h.verdict.mu_at_witness)
                          << " < " << rat_str(h.verdict.mu_x) << "\n";
        }
    }
    if (strict_certainty && rep.conditional) return kConditional;
    return rep.hits.empty() ? kStable : kUnstable;
}

// ------------------------------------------------------------ cone-scan ---

int cmd_cone_scan(const std::string& surface, const std::string& from_expr,
                  const std::string& to_expr, int grid,
                  const std::vector<std::string>& probe_args,
                  const std::string& mode_text, const std::string& out_prefix,
                  std::string csv_path, std::string svg_path, bool as_json) {
    SurfaceModel m = load_surface(surface);
    const NamedClass la{from_expr, arg_class(m, from_expr)};
    const NamedClass lb{to_expr, arg_class(m, to_expr)};

    std::vector<NamedClass> probes;
    for (const auto& p : probe_args) probes.push_back({p, arg_divisor(m, p)});
    if (probes.empty())
        for (const auto& nc : m.divisors)
            probes.push_back({nc.label, total_class(m, make_config(m, nc.parts))});
    if (probes.empty())
        throw Error("no probe divisors: pass --divisors or use a model with featured divisors");

    if (!out_prefix.empty()) {
        if (csv_path.empty()) csv_path = out_prefix + ".csv";
        if (svg_path.empty()) svg_path = out_prefix + ".svg";
    }
    const auto rep = cone_scan(m, la, lb, grid, probes, arg_mode(mode_text));
    const std::string csv = scan_csv(rep);
    if (!csv_path.empty()) write_text(csv_path, csv);
    if (!svg_path.empty()) write_text(svg_path, scan_svg(rep));

    if (as_json) {
        json j;
        j["surface"] = m.name;
        j["from"] = from_expr;
        j["to"] = to_expr;
        j["grid"] = grid;
        j["cells"] = json::array();
        for (const auto& cell : rep.cells) {
            json e;
            e["t"] = cell.t;
            e["polarisation"] = cell.polarisation_str;
            e["verdict"] = cell.verdict;
            if (!cell.witness_divisor.empty()) {
                e["witness_divisor"] = cell.witness_divisor;
                e["witness_c"] = rat_str(cell.witness_c);
            }
            j["cells"].push_back(e);
        }
        emit(j);
    } else if (csv_path.empty()) {
        std::cout << csv;
    } else {
        long unstable = 0;
        for (const auto& cell : rep.cells)
            if (cell.verdict == "unstable") ++unstable;
        std::cout << rep.cells.size() << " cells scanned, " << unstable
                  << " unstable; wrote " << csv_path
                  << (svg_path.empty() ? "" : " and " + svg_path) << "\n";
    }
    return kStable;
}

// ------------------------------------------------------------ construct ---

int cmd_construct(const std::string& surface, const std::string& base_expr,
                  const std::string& config_expr, const std::string& out_path,
                  bool as_json) {
    SurfaceModel m = load_surface(surface);
    const DivClass base = arg_class(m, base_expr);
    std::vector<std::pair<std::string, int>> parts;
    try {
        parts = parse_config_expr(config_expr);
    } catch (const Error& e) {
        throw CliParseError{e.what()};
    }
    const DivisorConfig cfg = make_config(m, parts);
    const Certificate cert = build_certificate(m, cfg, base);
    const std::string text = serialize_certificate(cert);
    if (!out_path.empty()) write_text(out_path, text);

    if (as_json) {
        json j;
        j["surface"] = m.name;
        j["config"] = config_str(cfg);
        j["q"] = json::array();
        for (const auto& qi : cert.q) j["q"].push_back(rat_str(qi));
        j["l0"] = class_str(m, cert.l0);
        j["epsilon_floor"] = rat_str(cert.epsilon_floor);
        j["c"] = rat_str(cert.c);
        j["s"] = rat_str(cert.s);
        j["polarisation"] = class_str(m, cert.polarisation);
        j["genus"] = rat_str(cert.genus);
        j["mu_x"] = rat_str(cert.mu_x);
        j["mu_c"] = rat_str(cert.mu_c);
        j["conditional"] = cert.conditional;
        j["certificate"] = text;
        emit(j);
    } else if (out_path.empty()) {
        std::cout << text;
    } else {
        std::cout << "destabilisation certificate for " << config_str(cfg) << " on "
                  << m.name << ": c = " << rat_str(cert.c) << ", polarisation "
                  << class_str(m, cert.polarisation) << ", mu_c = " << rat_str(cert.mu_c)
                  << " < " << rat_str(cert.mu_x)
                  << (cert.conditional ? " (conditional)" : "") << "; wrote " << out_path
                  << "\n";
    }
    return kStable;
}

// --------------------------------------------------------------- verify ---

int cmd_verify(const std::string& cert_path, const std::string& surface,
               bool strict_certainty, bool as_json) {
    std::ifstream in(cert_path, std::ios::binary);
    if (!in) throw Error("cannot read " + cert_path);
    std::stringstream buf;
    buf << in.rdbuf();
    Certificate cert;
    try {
        cert = parse_certificate(buf.str());
    } catch (const Error& e) {
        throw CliParseError{e.what()};
    }
    // The certificate names its surface; --surface overrides (file or key).
    SurfaceModel m = load_surface(surface.empty() ? cert.surface : surface);
    if (cert.surface != m.name)
        std::cerr << "note: certificate names surface '" << cert.surface
                  << "', checking against '" << m.name << "'\n";
    const auto vr = verify_certificate(m, cert);

    if (as_json) {
        json j;
        j["surface"] = m.name;
        j["ok"] = vr.ok;
        j["violated"] = vr.violated;
        j["conditional"] = cert.conditional;
        emit(j);
    } else if (vr.ok) {
        std::cout << "certificate verifies: c = " << rat_str(cert.c) << ", mu_c = "
                  << rat_str(cert.mu_c) << " < mu(X, L) = " << rat_str(cert.mu_x)
                  << (cert.conditional ? " (conditional on the roster)" : "") << "\n";
    } else {
        std::cout << "certificate rejected: " << vr.violated << "\n";
    }
    if (!vr.ok) return kInvalid;
    if (strict_certainty && cert.conditional) return kConditional;
    return kStable;
}

// ------------------------------------------------------------ selfcheck ---

int cmd_selfcheck(const std::string& only, bool list, bool as_json) {
    if (list) {
        for (const auto& tag : selfcheck_tags()) std::cout << tag << "\n";
        return 0;
    }
    const auto results = run_selfcheck(only);
    bool all = true;
    if (as_json) {
        json j = json::array();
        for (const auto& r : results) {
            j.push_back({{"tag", r.tag}, {"passed", r.passed}, {"detail", r.detail}});
            all = all && r.passed;
        }
        emit(j);
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.tag << " — "
                      << r.detail << "\n";
            all = all && r.passed;
        }
    }
    return all ? 0 : 1;
}

// -------------------------------------------------------------- catalog ---

int cmd_catalog(bool list, const std::string& export_key,
                const std::string& out_path, bool as_json) {
    if (!export_key.empty()) {
        const auto ent = catalog_get(export_key);
        std::string text = "# " + ent.key + ": " + ent.notes + "\n" +
                           serialize_surface(ent.model);
        if (!out_path.empty()) {
            write_text(out_path, text);
            std::cout << "wrote " << out_path << "\n";
        } else {
            std::cout << text;
        }
        return 0;
    }
    (void)list;  // default action
    if (as_json) {
        json j = json::array();
        for (const auto& k : catalog_keys()) j.push_back(k);
        emit(j);
    } else {
        for (const auto& k : catalog_keys()) std::cout << k << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact slope (in)stability of polarised surfaces"};
    app.require_subcommand(1);

    bool as_json = false, strict_certainty = false;
    std::string surface, lexpr, dexpr, cval, mode_text = "strict";

    auto add_common = [&](CLI::App* sub, bool needs_surface = true) {
        sub->add_flag("--json", as_json, "machine readable output");
        if (needs_surface)
            sub->add_option("surface", surface, "surface file or catalog key")
                ->required();
    };

    auto* slope = app.add_subcommand("slope", "slope invariants of a polarisation");
    add_common(slope);
    slope->add_option("--L", lexpr, "polarisation class expression")->required();
    slope->add_option("--D", dexpr, "divisor (configuration or class expression)");
    slope->add_option("--c", cval, "test-parameter value");

    auto* destab = app.add_subcommand("destab", "decide stability against one divisor");
    add_common(destab);
    destab->add_option("--L", lexpr, "polarisation class expression")->required();
    destab->add_option("--D", dexpr, "divisor (configuration or class expression)")
        ->required();
    destab->add_option("--mode", mode_text, "strict | pseudo (default strict)");
    destab->add_flag("--strict-certainty", strict_certainty,
                     "exit 4 when the verdict is conditional");

    long bound = 5;
    long long cap = 0;
    bool no_genus_filter = false;
    auto* search = app.add_subcommand("search", "bounded enumeration of destabilisers");
    add_common(search);
    search->add_option("--L", lexpr, "polarisation class expression")->required();
    search->add_option("--bound", bound, "coefficient bound per generator (default 5)");
    search->add_option("--mode", mode_text, "strict | pseudo (default strict)");
    search->add_flag("--no-genus-filter", no_genus_filter,
                     "test candidates the genus gate would skip");
    search->add_option("--cap", cap, "candidate cap override");
    search->add_flag("--strict-certainty", strict_certainty,
                     "exit 4 when the verdict is conditional");

    std::string from_expr, to_expr, out_prefix, csv_path, svg_path;
    int grid = 10;
    std::vector<std::string> probe_args;
    auto* scan = app.add_subcommand("cone-scan", "stability along a polarisation segment");
    add_common(scan);
    scan->add_option("--La,--from", from_expr, "first endpoint class")->required();
    scan->add_option("--Lb,--to", to_expr, "second endpoint class")->required();
    scan->add_option("--grid", grid, "number of segment steps (default 10)");
    scan->add_option("--divisors,--probe", probe_args,
                     "divisor to test (repeatable; default: featured divisors)");
    scan->add_option("--mode", mode_text, "strict | pseudo (default strict)");
    scan->add_option("--out", out_prefix, "write <prefix>.csv and <prefix>.svg");
    scan->add_option("--csv", csv_path, "write the CSV table here");
    scan->add_option("--svg", svg_path, "write a plot here");

    std::string base_expr, config_expr, out_path, cert_path;
    auto* construct = app.add_subcommand("construct", "build a destabilisation certificate");
    add_common(construct);
    construct->add_option("--H,--base", base_expr, "ample starting class")->required();
    construct->add_option("--D,--config", config_expr, "curve configuration, e.g. '2C+E'")
        ->required();
    construct->add_option("--out", out_path, "write the certificate here");

    std::string verify_surface;
    auto* verify = app.add_subcommand("verify", "re-check a certificate from scratch");
    verify->add_flag("--json", as_json, "machine readable output");
    verify->add_option("certificate", cert_path, "certificate file")->required();
    verify->add_option("--surface", verify_surface,
                       "check against this surface file or catalog key instead");
    verify->add_flag("--strict-certainty", strict_certainty,
                     "exit 4 when the certificate is conditional");

    std::string only;
    bool list_tags = false;
    auto* selfcheck = app.add_subcommand("selfcheck", "run the acceptance criteria");
    add_common(selfcheck, false);
    selfcheck->add_option("--only", only, "run a single criterion by tag");
    selfcheck->add_flag("--list", list_tags, "list criterion tags");

    bool cat_list = false;
    std::string export_key;
    auto* catalog = app.add_subcommand("catalog", "list or export built-in models");
    add_common(catalog, false);
    catalog->add_flag("--list", cat_list, "list catalog keys (default)");
    catalog->add_option("--export", export_key, "emit a catalog model as a surface file");
    catalog->add_option("--out", out_path, "write exported surface here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kParse;
    }

    try {
        if (slope->parsed()) return cmd_slope(surface, lexpr, dexpr, cval, as_json);
        if (destab->parsed())
            return cmd_destab(surface, lexpr, dexpr, mode_text, strict_certainty, as_json);
        if (search->parsed())
            return cmd_search(surface, lexpr, bound, mode_text, no_genus_filter, cap,
                              strict_certainty, as_json);
        if (scan->parsed())
            return cmd_cone_scan(surface, from_expr, to_expr, grid, probe_args,
                                 mode_text, out_prefix, csv_path, svg_path, as_json);
        if (construct->parsed())
            return cmd_construct(surface, base_expr, config_expr, out_path, as_json);
        if (verify->parsed())
            return cmd_verify(cert_path, verify_surface, strict_certainty, as_json);
        if (selfcheck->parsed()) return cmd_selfcheck(only, list_tags, as_json);
        if (catalog->parsed()) return cmd_catalog(cat_list, export_key, out_path, as_json);
    } catch (const CliParseError& e) {
        std::cerr << "error: " << e.msg << "\n";
        return kParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvalid;
    }
    return 0;
}
