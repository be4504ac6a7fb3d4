#include "slopestab/slope.hpp"

#include <algorithm>
#include <utility>

namespace slopestab {
namespace {

// Intersection numbers every decision below consumes.
struct PairData {
    Rat ld, kd, d2, l2, kl;
};

PairData pairs_of(const SurfaceModel& s, const DivClass& l, const DivClass& d) {
    return {pair(s, l, d), pair(s, s.canonical, d), selfint(s, d), selfint(s, l),
            pair(s, s.canonical, l)};
}

// N(c) = 3(2L.D - c(K.D + D^2)) - mu * 2c(3L.D - c D^2), expanded in c.
// Negative exactly where mu_c(O_D) < mu(X), as long as the parameter stays
// below the square bound (which keeps the slope denominator positive).
struct DecisionQuadratic {
    Rat qa, qb, qc;  // qa c^2 + qb c + qc

    Rat eval(const Rat& c) const { return qa * c * c + qb * c + qc; }
};

DecisionQuadratic decision_quadratic(const PairData& p, const Rat& mu) {
    DecisionQuadratic n;
    n.qa = 2 * mu * p.d2;
    n.qb = -3 * (p.kd + p.d2) - 6 * mu * p.ld;
    n.qc = 6 * p.ld;
    return n;
}

struct Interval {
    QuadValue lo;  // always open: either 0 or a root of N
    QuadValue hi;
    bool hi_closed = false;
};

// Open intervals of the real line where N < 0, clipped to (0, end] or
// (0, end). N(0) = 6 L.D > 0, so 0 is never interior to the negative set.
std::vector<Interval> negative_set(const DecisionQuadratic& n, const QuadValue& end,
                                   bool end_closed) {
    std::vector<std::pair<QuadValue, std::optional<QuadValue>>> raw;  // (lo, hi or +inf)
    if (sign(n.qa) == 0) {
        if (sign(n.qb) < 0) {
            Rat r = -n.qc / n.qb;
            raw.emplace_back(QuadValue(r), std::nullopt);
        }
        // qb >= 0 with qc > 0: never negative for c > 0.
    } else {
        Rat disc = n.qb * n.qb - 4 * n.qa * n.qc;
        if (sign(disc) > 0) {
            QuadValue sq = QuadValue::sqrt_of(disc);
            QuadValue half(Rat(1) / (2 * n.qa));
            QuadValue r1 = (QuadValue(-n.qb) - sq) * half;
            QuadValue r2 = (QuadValue(-n.qb) + sq) * half;
            if (r2 < r1) std::swap(r1, r2);
            if (sign(n.qa) > 0) {
                raw.emplace_back(r1, r2);
            } else {
                // (-inf, r1) cannot meet (0, end]: with qa < 0 the root
                // product qc/qa is negative, so r1 < 0. Only (r2, +inf) counts.
                raw.emplace_back(r2, std::nullopt);
            }
        }
        // qa > 0 with disc <= 0: N >= 0 everywhere.
        // qa < 0 forces disc > 0 because qc > 0.
    }

    std::vector<Interval> out;
    const QuadValue zero{Rat(0)};
    for (auto& [lo, hi] : raw) {
        Interval iv;
        iv.lo = (lo < zero) ? zero : lo;
        if (!hi.has_value() || *hi > end) {
            iv.hi = end;
            iv.hi_closed = end_closed;
        } else if (*hi == end) {
            iv.hi = end;
            iv.hi_closed = false;  // a root of N: never feasible itself
        } else {
            iv.hi = *hi;
            iv.hi_closed = false;
        }
        if (iv.lo < iv.hi) out.push_back(std::move(iv));
    }
    return out;
}

bool quad_is_integer(const QuadValue& v) {
    return v.is_rational() && is_integer(v.as_rational());
}

// Inward rounding at denominator m: the largest grid subinterval
// [k_lo/m, k_hi/m] inside iv. Returns false when the grid misses it.
bool grid_clip(const Interval& iv, const Int& m, Int& k_lo, Int& k_hi) {
    QuadValue scale{Rat(m)};
    QuadValue lo_m = iv.lo * scale;
    QuadValue hi_m = iv.hi * scale;
    k_lo = lo_m.floor() + 1;  // strictly above an open lower end
    k_hi = hi_m.floor();
    if (!iv.hi_closed && quad_is_integer(hi_m)) k_hi -= 1;
    return k_lo <= k_hi;
}

std::string quantity(const Rat& value, const char* what) {
    return std::string(what) + " = " + rat_str(value);
}

}  // namespace

Rat mu_surface(const SurfaceModel& s, const DivClass& l) {
    Rat l2 = selfint(s, l);
    if (sign(l2) <= 0) throw Error("mu_surface: needs L^2 > 0, got " + quantity(l2, "L^2"));
    return -pair(s, s.canonical, l) / l2;
}

Rat mu_divisor(const SurfaceModel& s, const DivClass& l, const DivClass& d, const Rat& c) {
    if (sign(c) <= 0) throw Error("mu_divisor: parameter must be positive");
    PairData p = pairs_of(s, l, d);
    Rat den = 2 * c * (3 * p.ld - c * p.d2);
    if (sign(den) == 0) throw Error("mu_divisor: slope denominator vanishes at c = " + rat_str(c));
    return 3 * (2 * p.ld - c * (p.kd + p.d2)) / den;
}

QuadValue pseudo_epsilon(const SurfaceModel& s, const DivClass& l, const DivClass& d) {
    PairData p = pairs_of(s, l, d);
    if (sign(p.l2) <= 0) throw Error("pseudo_epsilon: needs L^2 > 0");
    if (sign(p.ld) <= 0) throw Error("pseudo_epsilon: needs L.D > 0");

    QuadValue root;
    if (sign(p.d2) == 0) {
        root = QuadValue(p.l2 / (2 * p.ld));
    } else {
        Rat disc = p.ld * p.ld - p.d2 * p.l2;
        if (sign(disc) < 0)
            throw Error("pseudo_epsilon: (L.D)^2 < L^2 D^2 contradicts the lattice signature");
        root = (QuadValue(p.ld) - QuadValue::sqrt_of(disc)) * QuadValue(Rat(1) / p.d2);
    }

    // The root must satisfy its quadratic, be positive, and obey D^2 e <= L.D.
    QuadValue residue =
        QuadValue(p.d2) * root * root - QuadValue(2 * p.ld) * root + QuadValue(p.l2);
    if (residue.sign() != 0 || root.sign() <= 0 || QuadValue(p.d2) * root > QuadValue(p.ld))
        throw Error("pseudo_epsilon: root invariants violated");
    return root;
}

SeshadriBound seshadri_divisor(const SurfaceModel& s, const DivClass& l, const DivClass& d) {
    PositivityVerdict amp = is_ample(s, l);
    if (!amp.passed()) throw Error("seshadri_divisor: polarisation fails the ampleness test");
    SeshadriBound out;
    out.value = pseudo_epsilon(s, l, d);
    out.binding = "square-bound";
    out.conditional = !s.curves_complete;
    for (const auto& c : s.curves) {
        Rat dc = pair(s, d, c.cls);
        if (sign(dc) <= 0) continue;
        Rat ratio = pair(s, l, c.cls) / dc;
        if (QuadValue(ratio) < out.value) {
            out.value = QuadValue(ratio);
            out.binding = c.label;
        }
    }
    return out;
}

StabilityVerdict destabilizes(const SurfaceModel& s, const DivClass& l, const DivClass& d,
                              Mode mode) {
    if (is_zero_class(d)) throw Error("destabilizes: divisor class is zero");
    PositivityVerdict amp = is_ample(s, l);
    if (!amp.passed()) throw Error("destabilizes: polarisation fails the ampleness test");
    PairData p = pairs_of(s, l, d);
    if (sign(p.ld) <= 0) throw Error("destabilizes: needs L.D > 0, got " + quantity(p.ld, "L.D"));

    StabilityVerdict v;
    v.mu_x = mu_surface(s, l);
    v.conditional = amp.conditional();
    if (mode == Mode::Strict) {
        SeshadriBound sb = seshadri_divisor(s, l, d);
        v.epsilon_used = sb.value;
        v.epsilon_kind = EpsilonKind::RosterSeshadri;
    } else {
        v.epsilon_used = pseudo_epsilon(s, l, d);
        v.epsilon_kind = EpsilonKind::PseudoEpsilon;
    }

    // The slope denominator 3L.D - c D^2 must stay positive across the whole
    // parameter interval; positive at 0, so linearity needs only the end.
    QuadValue den_end = QuadValue(3 * p.ld) - v.epsilon_used * QuadValue(p.d2);
    if (den_end.sign() <= 0) throw Error("destabilizes: slope denominator loses positivity");

    DecisionQuadratic n = decision_quadratic(p, v.mu_x);
    const bool end_closed = (mode == Mode::Strict);
    std::vector<Interval> feasible = negative_set(n, v.epsilon_used, end_closed);
    if (feasible.empty()) {
        v.stable_wrt = true;
        return v;
    }
    v.stable_wrt = false;

    // Witness: midpoint of the widest grid-clipped subinterval, verified
    // exactly; a finer grid is only needed when every interval falls between
    // consecutive grid points.
    const Int grid_cap("1000000000000000000000000000000");
    for (Int m(1000000); m <= grid_cap; m *= 1000) {
        Int best_lo(0), best_hi(0), best_width(-1);
        for (const auto& iv : feasible) {
            Int k_lo, k_hi;
            if (!grid_clip(iv, m, k_lo, k_hi)) continue;
            Int width = k_hi - k_lo;
            if (width > best_width) {
                best_width = width;
                best_lo = k_lo;
                best_hi = k_hi;
            }
        }
        if (best_width < 0) continue;
        Rat w(best_lo + best_hi, 2 * m);
        w.canonicalize();
        QuadValue wq{w};
        bool inside = end_closed ? (wq <= v.epsilon_used) : (wq < v.epsilon_used);
        if (sign(w) > 0 && inside && sign(n.eval(w)) < 0) {
            v.witness_c = w;
            v.mu_at_witness = mu_divisor(s, l, d, w);
            if (*v.mu_at_witness >= v.mu_x)
                throw Error("destabilizes: witness fails the slope inequality");
            return v;
        }
    }
    throw Error("destabilizes: witness rounding exhausted its grid refinement");
}

Rat q_form(const SurfaceModel& s, const DivClass& a, const DivClass& d) {
    DivClass k2d = s.canonical + Rat(2) * d;
    return 2 * pair(s, k2d, a) * pair(s, a, d) -
           (pair(s, s.canonical, d) - selfint(s, d)) * selfint(s, a);
}

StabilityCubic stability_cubic(const SurfaceModel& s, const DivClass& l, const DivClass& d,
                               const Rat& c) {
    DivClass a = l - c * d;
    Rat d2 = selfint(s, d);
    Rat kd = pair(s, s.canonical, d);
    Rat ad = pair(s, a, d);
    Rat a2 = selfint(s, a);
    Rat ka = pair(s, s.canonical, a);
    StabilityCubic out;
    out.terms[0] = c * c * c * (kd + 3 * d2) * d2;
    out.terms[1] = 4 * c * c * (ka + 3 * ad) * d2;
    out.terms[2] = 3 * c * q_form(s, a, d);
    out.terms[3] = 6 * ad * a2;
    out.value = out.terms[0] + out.terms[1] + out.terms[2] + out.terms[3];
    return out;
}

RemovalAdmissible removal_admissible(const SurfaceModel& s, const DivClass& d,
                                     const DivisorConfig& f) {
    if (f.empty()) throw Error("removal_admissible: empty component set");
    DivClass ft = total_class(s, f);
    Rat f2 = selfint(s, ft);
    Rat kf = pair(s, s.canonical, ft);
    Rat bound = std::min(f2, Rat(f2 - kf));
    RemovalAdmissible out;
    out.total_bound = (2 * pair(s, d, ft) <= bound);
    out.component_bound = out.total_bound;
    for (const auto& comp : f.components) {
        if (pair(s, d, comp.cls) > selfint(s, comp.cls)) {
            out.component_bound = false;
            break;
        }
    }
    return out;
}

namespace {

bool is_minus_one_curve(const SurfaceModel& s, const DivClass& c) {
    return selfint(s, c) == -1 && pair(s, s.canonical, c) == -1;
}

// Rank-one plane with a line: gram [[1]], K = -3e, D a positive multiple.
bool plane_line_shape(const SurfaceModel& s, const DivClass& total) {
    if (s.rank() != 1 || s.gram.at(0, 0) != 1) return false;
    if (s.canonical.size() != 1 || s.canonical[0] != -3) return false;
    return sign(total[0]) > 0;
}

// Rank-two model carrying a roster fibre class f (f^2 = 0, K.f = -2) with D
// a positive multiple of f.
bool ruled_fibre_shape(const SurfaceModel& s, const DivClass& total) {
    if (s.rank() != 2 || is_zero_class(total)) return false;
    for (const auto& c : s.curves) {
        if (selfint(s, c.cls) != 0 || pair(s, s.canonical, c.cls) != -2) continue;
        // total = t * f for some t > 0: cross-coefficients must vanish.
        if (total[0] * c.cls[1] != total[1] * c.cls[0]) continue;
        Rat t;
        if (c.cls[0] != 0) t = total[0] / c.cls[0];
        else if (c.cls[1] != 0) t = total[1] / c.cls[1];
        else continue;
        if (sign(t) > 0) return true;
    }
    return false;
}

std::string describe_component(const ConfigComponent& comp) {
    return comp.label;
}

}  // namespace

ReductionResult adjoint_reduction(const SurfaceModel& s, const DivisorConfig& cfg,
                                  ReductionMode mode) {
    ReductionResult res;
    SurfaceModel cur = s;
    DivisorConfig dc = cfg;
    const Rat m(mode == ReductionMode::KodairaNonneg ? 1 : 2);

    for (int guard = 0; guard < 1000; ++guard) {
        DivClass total = dc.empty() ? DivClass(cur.rank(), Rat(0)) : total_class(cur, dc);
        DivClass target = cur.canonical + m * total;
        if (is_nef(cur, target).passed()) {
            res.outcome = ReductionOutcome::AdjointNef;
            res.final_model = std::move(cur);
            res.final_config = std::move(dc);
            return res;
        }
        if (plane_line_shape(cur, total)) {
            res.outcome = ReductionOutcome::PlaneLine;
            res.final_model = std::move(cur);
            res.final_config = std::move(dc);
            return res;
        }
        if (ruled_fibre_shape(cur, total)) {
            res.outcome = ReductionOutcome::RuledFibres;
            res.final_model = std::move(cur);
            res.final_config = std::move(dc);
            return res;
        }

        // Rule (a): remove one copy of the first component breaking the
        // normal form (D.F >= 0 for (-1)-curves, (K+D).F >= 0 for the other
        // negative curves), provided the removal bound sanctions it.
        bool acted = false;
        for (std::size_t i = 0; i < dc.components.size(); ++i) {
            const ConfigComponent comp = dc.components[i];
            if (sign(selfint(cur, comp.cls)) >= 0) continue;
            bool violates;
            if (is_minus_one_curve(cur, comp.cls)) {
                violates = sign(pair(cur, total, comp.cls)) < 0;
            } else {
                violates = sign(pair(cur, cur.canonical + total, comp.cls)) < 0;
            }
            if (!violates) continue;

            DivisorConfig single;
            single.components.push_back({comp.label, comp.cls, 1});
            RemovalAdmissible adm = removal_admissible(cur, total, single);
            if (!adm.total_bound) {
                res.outcome = ReductionOutcome::Stuck;
                res.stuck_reason = "removal bound fails for " + describe_component(comp);
                res.final_model = std::move(cur);
                res.final_config = std::move(dc);
                return res;
            }
            res.log.push_back({"remove", describe_component(comp)});
            if (--dc.components[i].mult == 0) dc.components.erase(dc.components.begin() + i);
            acted = true;
            break;
        }
        if (acted) continue;

        // Rule (b): contract a roster (-1)-curve the divisor misses.
        for (const auto& c : cur.curves) {
            if (!is_minus_one_curve(cur, c.cls)) continue;
            if (sign(pair(cur, total, c.cls)) != 0) continue;
            Contraction con = contract_minus_one(cur, c.cls);
            DivisorConfig pushed;
            for (const auto& comp : dc.components) {
                DivClass pc = con.push(comp.cls);
                if (is_zero_class(pc)) continue;
                bool merged = false;
                for (auto& existing : pushed.components) {
                    if (existing.cls == pc) {
                        existing.mult += comp.mult;
                        merged = true;
                        break;
                    }
                }
                if (merged) continue;
                std::string label = comp.label;
                for (const auto& rc : con.model.curves) {
                    if (rc.cls == pc) {
                        label = rc.label;
                        break;
                    }
                }
                pushed.components.push_back({label, pc, comp.mult});
            }
            res.log.push_back({"contract", c.label});
            cur = std::move(con.model);
            dc = std::move(pushed);
            acted = true;
            break;
        }
        if (acted) continue;

        res.outcome = ReductionOutcome::Stuck;
        res.stuck_reason = "no applicable rule";
        res.final_model = std::move(cur);
        res.final_config = std::move(dc);
        return res;
    }
    res.outcome = ReductionOutcome::Stuck;
    res.stuck_reason = "iteration guard exceeded";
    res.final_model = std::move(cur);
    res.final_config = std::move(dc);
    return res;
}

PositivityVerdict check_weinkove(const SurfaceModel& s, const DivClass& l) {
    Rat kl = pair(s, s.canonical, l);
    Rat l2 = selfint(s, l);
    DivClass w = (2 * kl) * l - l2 * s.canonical;
    return is_ample(s, w);
}

bool genus_obstruction(const SurfaceModel& s, const DivClass& l, const DivClass& d) {
    if (sign(pair(s, s.canonical, l)) < 0)
        throw Error("genus_obstruction: needs K.L >= 0");
    return arithmetic_genus(s, d) >= 2;
}

}  // namespace slopestab
