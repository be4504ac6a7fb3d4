#include "slopestab/exceptional.hpp"

#include <algorithm>
#include <set>

namespace slopestab {

int DivisorConfig::total_multiplicity() const {
    int total = 0;
    for (const auto& c : components) total += c.mult;
    return total;
}

DivisorConfig make_config(const SurfaceModel& s,
                          const std::vector<std::pair<std::string, int>>& parts) {
    DivisorConfig cfg;
    std::set<std::string> seen;
    for (const auto& [label, mult] : parts) {
        if (mult <= 0) throw Error("config: multiplicity of '" + label + "' must be positive");
        if (!seen.insert(label).second)
            throw Error("config: component '" + label + "' listed twice");
        const CurveRecord* c = s.find_curve(label);
        if (!c) throw Error("config: '" + label + "' is not a roster curve");
        cfg.components.push_back({label, c->cls, mult});
    }
    // Distinct labels can still carry equal classes in malformed rosters;
    // components must be distinct curves.
    for (std::size_t i = 0; i < cfg.components.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.components.size(); ++j)
            if (cfg.components[i].cls == cfg.components[j].cls)
                throw Error("config: components '" + cfg.components[i].label + "' and '" +
                            cfg.components[j].label + "' have the same class");
    return cfg;
}

DivClass total_class(const SurfaceModel& s, const DivisorConfig& cfg) {
    DivClass total(s.rank(), Rat(0));
    for (const auto& c : cfg.components) total = total + Rat(c.mult) * c.cls;
    return total;
}

QMatrix component_gram(const SurfaceModel& s, const DivisorConfig& cfg) {
    const std::size_t m = cfg.components.size();
    QMatrix g(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            g.at(i, j) = pair(s, cfg.components[i].cls, cfg.components[j].cls);
    return g;
}

bool is_exceptional(const SurfaceModel& s, const DivisorConfig& cfg) {
    if (cfg.empty()) return false;
    return is_negative_definite(component_gram(s, cfg));
}

std::vector<DivisorConfig> connected_components(const SurfaceModel& s,
                                                const DivisorConfig& cfg) {
    const std::size_t m = cfg.components.size();
    const QMatrix g = component_gram(s, cfg);
    std::vector<std::size_t> owner(m);
    for (std::size_t i = 0; i < m; ++i) owner[i] = i;
    // Union by minimum index keeps the output order deterministic.
    auto find = [&](std::size_t x) {
        while (owner[x] != x) x = owner[x] = owner[owner[x]];
        return x;
    };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (sign(g.at(i, j)) > 0) {
                std::size_t a = find(i), b = find(j);
                if (a != b) owner[std::max(a, b)] = std::min(a, b);
            }
    std::vector<DivisorConfig> out;
    std::vector<std::size_t> root_slot(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t r = find(i);
        if (root_slot[r] == m) {
            root_slot[r] = out.size();
            out.emplace_back();
        }
        out[root_slot[r]].components.push_back(cfg.components[i]);
    }
    return out;
}

CycleResult numerical_cycle(const SurfaceModel& s, const DivisorConfig& cfg,
                            const std::optional<std::vector<std::size_t>>& priority) {
    if (cfg.empty()) throw Error("numerical_cycle: empty configuration");
    if (connected_components(s, cfg).size() != 1)
        throw Error("numerical_cycle: configuration not connected");
    if (!is_exceptional(s, cfg))
        throw Error("numerical_cycle: configuration not exceptional");

    const std::size_t m = cfg.components.size();
    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    if (priority) {
        if (priority->size() != m) throw Error("numerical_cycle: bad priority size");
        order = *priority;
    }

    // Loop guard from the inverse component Gram: the cycle multiplicities
    // solve a system bounded by it, so the step count cannot exceed this.
    const QMatrix ginv = inverse(component_gram(s, cfg));
    Rat inv_sum = 0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) inv_sum += ginv.at(i, j);
    long guard = 16 + static_cast<long>(m);
    {
        Int bound = rat_ceil(Rat(-2) * inv_sum);
        if (bound.fits_slong_p()) guard += std::max(0L, bound.get_si());
        else throw Error("numerical_cycle: implausible iteration bound");
    }

    CycleResult res;
    res.cycle = cfg;
    for (auto& c : res.cycle.components) c.mult = 1;  // reduced start
    while (true) {
        DivClass z = total_class(s, res.cycle);
        std::size_t hit = m;
        for (std::size_t oi = 0; oi < m && hit == m; ++oi) {
            std::size_t i = order[oi];
            if (sign(pair(s, z, res.cycle.components[i].cls)) > 0) hit = i;
        }
        if (hit == m) break;
        res.cycle.components[hit].mult += 1;
        if (++res.steps > guard)
            throw Error("numerical_cycle: iteration guard exceeded");
    }
    return res;
}

SingularityClass classify_singularity(const SurfaceModel& s, const DivisorConfig& cfg) {
    SingularityClass out{SingularityKind::Rational, numerical_cycle(s, cfg), Rat(0)};
    out.cycle_genus = arithmetic_genus(s, total_class(s, out.cycle.cycle));
    if (!is_integer(out.cycle_genus))
        throw Error("classify_singularity: cycle genus not an integer");
    if (out.cycle_genus < 0)
        throw Error("classify_singularity: cycle genus negative — inconsistent model");
    if (out.cycle_genus == 0) out.kind = SingularityKind::Rational;
    else if (out.cycle_genus == 1) out.kind = SingularityKind::Elliptic;
    else out.kind = SingularityKind::HighGenus;
    return out;
}

bool pairs_nonpositively(const SurfaceModel& s, const DivisorConfig& cfg) {
    const DivClass total = total_class(s, cfg);
    for (const auto& c : cfg.components)
        if (sign(pair(s, total, c.cls)) > 0) return false;
    return true;
}

std::string config_str(const DivisorConfig& cfg) {
    std::string out;
    for (const auto& c : cfg.components) {
        if (!out.empty()) out += "+";
        if (c.mult != 1) out += std::to_string(c.mult) + "*";
        out += c.label;
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace slopestab
