#include "slopestab/certificate.hpp"

#include <sstream>

#include "slopestab/matrix.hpp"

namespace slopestab {
namespace {

DivClass scaled_sum(const DivisorConfig& cfg, const std::vector<Rat>& q, const DivClass& base) {
    DivClass out = base;
    for (std::size_t i = 0; i < cfg.components.size(); ++i)
        out = out + q[i] * cfg.components[i].cls;
    return out;
}

Rat floor_of(const DivisorConfig& cfg, const std::vector<Rat>& q) {
    Rat f = q[0] / cfg.components[0].mult;
    for (std::size_t i = 1; i < cfg.components.size(); ++i)
        f = std::min(f, Rat(q[i] / cfg.components[i].mult));
    return f;
}

}  // namespace

OrthogonalSolution solve_orthogonal_polarization(const SurfaceModel& s, const DivisorConfig& cfg,
                                                 const DivClass& base) {
    if (!is_ample(s, base).passed())
        throw Error("solve_orthogonal_polarization: base class fails the ampleness test");
    if (cfg.empty()) throw Error("solve_orthogonal_polarization: empty configuration");
    if (connected_components(s, cfg).size() != 1)
        throw Error("solve_orthogonal_polarization: configuration is not connected; "
                    "pass one connected component");
    if (!is_exceptional(s, cfg))
        throw Error("solve_orthogonal_polarization: configuration is not exceptional");
    if (!pairs_nonpositively(s, cfg))
        throw Error("solve_orthogonal_polarization: total class pairs positively "
                    "with a component");

    const std::size_t m = cfg.components.size();
    QMatrix gram = component_gram(s, cfg);
    std::vector<Rat> rhs(m);
    for (std::size_t j = 0; j < m; ++j) rhs[j] = -pair(s, base, cfg.components[j].cls);
    OrthogonalSolution sol;
    sol.q = solve(gram, rhs);
    for (const Rat& qi : sol.q)
        if (sign(qi) <= 0)
            throw Error("solve_orthogonal_polarization: coefficients are not positive "
                        "(corrupt input)");
    sol.l0 = scaled_sum(cfg, sol.q, base);
    for (std::size_t j = 0; j < m; ++j)
        if (sign(pair(s, sol.l0, cfg.components[j].cls)) != 0)
            throw Error("solve_orthogonal_polarization: orthogonality failed");
    return sol;
}

Rat find_destabilizing_c(const SurfaceModel& s, const DivClass& l0, const DivisorConfig& cfg,
                         const Rat& epsilon_floor) {
    if (sign(epsilon_floor) <= 0) throw Error("find_destabilizing_c: floor must be positive");
    DivClass total = total_class(s, cfg);
    for (const auto& comp : cfg.components)
        if (sign(pair(s, l0, comp.cls)) != 0)
            throw Error("find_destabilizing_c: polarisation is not orthogonal to the divisor");
    Rat d2 = selfint(s, total);
    if (sign(d2) >= 0) throw Error("find_destabilizing_c: needs D^2 < 0");
    Rat pa = arithmetic_genus(s, total);
    if (pa <= 1)
        throw Error("find_destabilizing_c: hypothesis failure, needs arithmetic genus >= 2, "
                    "got " + rat_str(pa));
    // The limiting slope is G/c with G = 3(2 p_a - 2)/(2 D^2) < 0, so the
    // inequality G/c < mu0 holds on (0, G/mu0) when mu0 < 0 and everywhere
    // when mu0 >= 0. Midpoint of the feasible interval, for determinism.
    Rat g_val = 3 * (2 * pa - 2) / (2 * d2);
    Rat mu0 = mu_surface(s, l0);
    Rat cap = epsilon_floor;
    if (sign(mu0) < 0) cap = std::min(cap, Rat(g_val / mu0));
    return cap / 2;
}

Perturbation perturb_polarization(const SurfaceModel& s, const DivClass& l0, const DivClass& base,
                                  const DivisorConfig& cfg, const Rat& c) {
    DivClass total = total_class(s, cfg);
    Rat step(1);
    std::string last_failure = "ampleness";
    for (int k = 0; k < 64; ++k, step /= 2) {
        DivClass l = l0 + step * base;
        PositivityVerdict lamp = is_ample(s, l);
        if (!lamp.passed()) {
            last_failure = "ampleness";
            continue;
        }
        if (QuadValue(c) > seshadri_divisor(s, l, total).value) {
            last_failure = "parameter above the Seshadri bound";
            continue;
        }
        if (mu_divisor(s, l, total, c) >= mu_surface(s, l)) {
            last_failure = "slope inequality not strict";
            continue;
        }
        Perturbation out;
        out.s = step;
        out.l_s = std::move(l);
        out.conditional = lamp.conditional();
        return out;
    }
    throw Error("perturb_polarization: 64 halvings exhausted, last failure: " + last_failure);
}

Certificate build_certificate(const SurfaceModel& s, const DivisorConfig& cfg,
                              const DivClass& base) {
    OrthogonalSolution sol = solve_orthogonal_polarization(s, cfg, base);
    Certificate cert;
    cert.surface = s.name;
    for (const auto& comp : cfg.components) cert.config.emplace_back(comp.label, comp.mult);
    cert.base = base;
    cert.q = sol.q;
    cert.l0 = sol.l0;
    cert.epsilon_floor = floor_of(cfg, sol.q);
    cert.genus = arithmetic_genus(s, total_class(s, cfg));
    cert.c = find_destabilizing_c(s, sol.l0, cfg, cert.epsilon_floor);
    Perturbation pert = perturb_polarization(s, sol.l0, base, cfg, cert.c);
    cert.s = pert.s;
    cert.polarisation = pert.l_s;
    cert.conditional = pert.conditional;
    cert.mu_x = mu_surface(s, cert.polarisation);
    cert.mu_c = mu_divisor(s, cert.polarisation, total_class(s, cfg), cert.c);
    return cert;
}

VerifyResult verify_certificate(const SurfaceModel& s, const Certificate& cert) {
    VerifyResult res;
    try {
        DivisorConfig cfg;
        try {
            cfg = make_config(s, cert.config);
        } catch (const Error&) {
            res.violated = "config";
            return res;
        }
        if (connected_components(s, cfg).size() != 1) {
            res.violated = "connected";
            return res;
        }
        if (!is_exceptional(s, cfg)) {
            res.violated = "exceptional";
            return res;
        }
        if (!pairs_nonpositively(s, cfg)) {
            res.violated = "component-pairing";
            return res;
        }
        DivClass total = total_class(s, cfg);
        if (arithmetic_genus(s, total) != cert.genus || cert.genus < 2) {
            res.violated = "genus";
            return res;
        }
        const std::size_t m = cfg.components.size();
        if (cert.q.size() != m) {
            res.violated = "coefficients";
            return res;
        }
        for (const Rat& qi : cert.q)
            if (sign(qi) <= 0) {
                res.violated = "coefficients";
                return res;
            }
        if (scaled_sum(cfg, cert.q, cert.base) != cert.l0) {
            res.violated = "orthogonal-base";
            return res;
        }
        for (std::size_t j = 0; j < m; ++j)
            if (sign(pair(s, cert.l0, cfg.components[j].cls)) != 0) {
                res.violated = "orthogonal-base";
                return res;
            }
        if (cert.epsilon_floor != floor_of(cfg, cert.q) || sign(cert.c) <= 0 ||
            cert.c >= cert.epsilon_floor) {
            res.violated = "floor";
            return res;
        }
        if (sign(cert.s) <= 0 || cert.polarisation != cert.l0 + cert.s * cert.base) {
            res.violated = "polarisation";
            return res;
        }
        PositivityVerdict amp = is_ample(s, cert.polarisation);
        if (!amp.passed()) {
            res.violated = "ample";
            return res;
        }
        if (amp.conditional() && !cert.conditional) {
            res.violated = "certainty";
            return res;
        }
        if (QuadValue(cert.c) > seshadri_divisor(s, cert.polarisation, total).value) {
            res.violated = "parameter";
            return res;
        }
        if (mu_surface(s, cert.polarisation) != cert.mu_x ||
            mu_divisor(s, cert.polarisation, total, cert.c) != cert.mu_c ||
            cert.mu_c >= cert.mu_x) {
            res.violated = "slope";
            return res;
        }
        res.ok = true;
        return res;
    } catch (const Error& e) {
        res.violated = std::string("exception: ") + e.what();
        return res;
    }
}

namespace {

void put_class(std::ostringstream& out, const char* key, const DivClass& d) {
    out << key;
    for (const Rat& x : d) out << ' ' << rat_str(x);
    out << '\n';
}

DivClass take_class(std::istringstream& in) {
    DivClass d;
    std::string tok;
    while (in >> tok) d.push_back(parse_rat(tok));
    return d;
}

}  // namespace

std::string serialize_certificate(const Certificate& cert) {
    std::ostringstream out;
    out << "cert_surface " << cert.surface << '\n';
    for (const auto& [label, mult] : cert.config)
        out << "cert_component " << label << ' ' << mult << '\n';
    put_class(out, "cert_base", cert.base);
    out << "cert_q";
    for (const Rat& qi : cert.q) out << ' ' << rat_str(qi);
    out << '\n';
    put_class(out, "cert_l0", cert.l0);
    out << "cert_epsilon_floor " << rat_str(cert.epsilon_floor) << '\n';
    out << "cert_s " << rat_str(cert.s) << '\n';
    put_class(out, "cert_polarisation", cert.polarisation);
    out << "cert_c " << rat_str(cert.c) << '\n';
    out << "cert_genus " << rat_str(cert.genus) << '\n';
    out << "cert_mu_x " << rat_str(cert.mu_x) << '\n';
    out << "cert_mu_c " << rat_str(cert.mu_c) << '\n';
    out << "cert_conditional " << (cert.conditional ? "true" : "false") << '\n';
    return out.str();
}

Certificate parse_certificate(const std::string& text) {
    Certificate cert;
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    bool saw_surface = false, saw_c = false, saw_s = false;
    auto fail = [&](const std::string& msg) {
        throw Error("certificate line " + std::to_string(lineno) + ": " + msg);
    };
    auto take_rat = [&](std::istringstream& in) {
        std::string tok;
        if (!(in >> tok)) fail("expected a rational");
        return parse_rat(tok);
    };
    while (std::getline(lines, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream in(line);
        std::string key;
        in >> key;
        try {
            if (key == "cert_surface") {
                in >> cert.surface;
                saw_surface = true;
            } else if (key == "cert_component") {
                std::string label;
                int mult = 0;
                if (!(in >> label >> mult)) fail("expected label and multiplicity");
                cert.config.emplace_back(label, mult);
            } else if (key == "cert_base") {
                cert.base = take_class(in);
            } else if (key == "cert_q") {
                cert.q.clear();
                std::string tok;
                while (in >> tok) cert.q.push_back(parse_rat(tok));
            } else if (key == "cert_l0") {
                cert.l0 = take_class(in);
            } else if (key == "cert_epsilon_floor") {
                cert.epsilon_floor = take_rat(in);
            } else if (key == "cert_s") {
                cert.s = take_rat(in);
                saw_s = true;
            } else if (key == "cert_polarisation") {
                cert.polarisation = take_class(in);
            } else if (key == "cert_c") {
                cert.c = take_rat(in);
                saw_c = true;
            } else if (key == "cert_genus") {
                cert.genus = take_rat(in);
            } else if (key == "cert_mu_x") {
                cert.mu_x = take_rat(in);
            } else if (key == "cert_mu_c") {
                cert.mu_c = take_rat(in);
            } else if (key == "cert_conditional") {
                std::string tok;
                in >> tok;
                if (tok != "true" && tok != "false") fail("expected true or false");
                cert.conditional = (tok == "true");
            } else {
                fail("unknown key '" + key + "'");
            }
        } catch (const Error& e) {
            std::string what = e.what();
            if (what.rfind("certificate line", 0) == 0) throw;
            fail(what);
        }
    }
    if (!saw_surface || cert.config.empty() || !saw_c || !saw_s)
        throw Error("certificate: missing required fields");
    return cert;
}

}  // namespace slopestab
