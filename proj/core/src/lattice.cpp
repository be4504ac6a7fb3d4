#include "slopestab/lattice.hpp"

#include <algorithm>
#include <set>

namespace slopestab {

DivClass operator+(const DivClass& x, const DivClass& y) {
    if (x.size() != y.size()) throw Error("class addition: dimension mismatch");
    DivClass r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

DivClass operator-(const DivClass& x, const DivClass& y) {
    if (x.size() != y.size()) throw Error("class subtraction: dimension mismatch");
    DivClass r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

DivClass operator*(const Rat& t, const DivClass& x) {
    DivClass r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = t * x[i];
    return r;
}

bool is_zero_class(const DivClass& x) {
    return std::all_of(x.begin(), x.end(), [](const Rat& c) { return c == 0; });
}

const CurveRecord* SurfaceModel::find_curve(const std::string& label) const {
    for (const auto& c : curves)
        if (c.label == label) return &c;
    return nullptr;
}

Rat pair(const SurfaceModel& s, const DivClass& d, const DivClass& e) {
    const std::size_t n = s.rank();
    if (d.size() != n || e.size() != n)
        throw Error("pair: class dimension does not match model rank");
    Rat acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (d[i] == 0) continue;
        Rat row = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (e[j] != 0) row += s.gram.at(i, j) * e[j];
        acc += d[i] * row;
    }
    return acc;
}

Rat arithmetic_genus(const SurfaceModel& s, const DivClass& d) {
    return Rat(1) + (selfint(s, d) + pair(s, s.canonical, d)) / 2;
}

void validate(const SurfaceModel& s) {
    const std::size_t n = s.rank();
    if (n == 0) throw Error("model '" + s.name + "': empty basis");
    std::set<std::string> labels(s.basis.begin(), s.basis.end());
    if (labels.size() != n) throw Error("model '" + s.name + "': duplicate basis labels");
    if (s.gram.rows() != n || s.gram.cols() != n)
        throw Error("model '" + s.name + "': gram size does not match basis");
    if (!s.gram.is_symmetric())
        throw Error("model '" + s.name + "': gram matrix not symmetric");
    const Inertia sig = inertia(s.gram);
    if (sig.positive != 1 || sig.negative != n - 1 || sig.zero != 0)
        throw Error("model '" + s.name + "': gram signature is not (1," +
                    std::to_string(n - 1) + ")");
    if (s.canonical.size() != n)
        throw Error("model '" + s.name + "': canonical class dimension mismatch");

    std::set<std::string> curve_labels;
    for (const auto& c : s.curves) {
        if (c.cls.size() != n)
            throw Error("model '" + s.name + "': curve '" + c.label + "' dimension mismatch");
        if (!curve_labels.insert(c.label).second)
            throw Error("model '" + s.name + "': duplicate curve label '" + c.label + "'");
        const Rat adj = pair(s, s.canonical, c.cls) + selfint(s, c.cls);
        if (!is_even_integer(adj))
            throw Error("model '" + s.name + "': curve '" + c.label +
                        "' fails adjunction parity (K.C + C^2 = " + rat_str(adj) + ")");
        if (c.genus) {
            const Rat expect = Rat(1) + adj / 2;
            if (*c.genus != expect)
                throw Error("model '" + s.name + "': curve '" + c.label +
                            "' stored genus " + rat_str(*c.genus) +
                            " contradicts adjunction value " + rat_str(expect));
            if (!is_integer(*c.genus) || *c.genus < 0)
                throw Error("model '" + s.name + "': curve '" + c.label +
                            "' genus must be a non-negative integer");
        }
    }

    if (s.curves_complete) {
        // Negative-square members of a complete roster are extremal and must
        // be listed exactly once.
        for (std::size_t i = 0; i < s.curves.size(); ++i)
            for (std::size_t j = i + 1; j < s.curves.size(); ++j)
                if (s.curves[i].cls == s.curves[j].cls &&
                    sign(selfint(s, s.curves[i].cls)) < 0)
                    throw Error("model '" + s.name + "': negative curve '" +
                                s.curves[i].label + "' repeated in complete roster");
    }

    if (s.reference_positive) {
        if (s.reference_positive->size() != n)
            throw Error("model '" + s.name + "': reference class dimension mismatch");
        if (sign(selfint(s, *s.reference_positive)) <= 0)
            throw Error("model '" + s.name + "': reference class must have positive square");
    }
    for (const auto& g : s.effective_generators)
        if (g.size() != n)
            throw Error("model '" + s.name + "': effective generator dimension mismatch");
    for (const auto& p : s.polarisations)
        if (p.cls.size() != n)
            throw Error("model '" + s.name + "': polarisation '" + p.label +
                        "' dimension mismatch");
    for (const auto& dv : s.divisors)
        for (const auto& [lbl, mult] : dv.parts) {
            if (!s.find_curve(lbl))
                throw Error("model '" + s.name + "': divisor '" + dv.label +
                            "' references unknown curve '" + lbl + "'");
            if (mult <= 0)
                throw Error("model '" + s.name + "': divisor '" + dv.label +
                            "' has non-positive multiplicity");
        }
}

bool is_negative_definite(const QMatrix& m) {
    if (!m.is_square()) throw Error("is_negative_definite: matrix not square");
    if (!m.is_symmetric()) throw Error("is_negative_definite: matrix not symmetric");
    const std::vector<Rat> minors = leading_principal_minors(m);
    for (std::size_t k = 1; k <= minors.size(); ++k) {
        const int want = (k % 2 == 0) ? 1 : -1;
        if (sign(minors[k - 1]) != want) return false;
    }
    return true;
}

std::string positivity_reasons(const PositivityVerdict& v) {
    std::string out;
    for (const auto& [label, value] : v.reasons) {
        if (!out.empty()) out += ", ";
        out += label + "=" + rat_str(value);
    }
    return out;
}

PositivityVerdict is_nef(const SurfaceModel& s, const DivClass& d) {
    PositivityVerdict v;
    for (const auto& c : s.curves) {
        Rat p = pair(s, d, c.cls);
        if (sign(p) < 0) v.reasons.emplace_back(c.label, p);
    }
    if (!v.reasons.empty()) {
        v.status = Positivity::No;
        return v;
    }
    v.status = s.curves_complete ? Positivity::Yes : Positivity::ConditionalYes;
    return v;
}

PositivityVerdict is_ample(const SurfaceModel& s, const DivClass& d) {
    PositivityVerdict v;
    const Rat d2 = selfint(s, d);
    if (sign(d2) <= 0) v.reasons.emplace_back("self-intersection", d2);
    for (const auto& c : s.curves) {
        Rat p = pair(s, d, c.cls);
        if (sign(p) <= 0) v.reasons.emplace_back(c.label, p);
    }
    // Orientation: the curve conditions constrain D only up to sign when the
    // roster pairings vanish, so anchor against a fixed positive-square class.
    const DivClass* ref = nullptr;
    std::string ref_label;
    for (const auto& c : s.curves)
        if (sign(selfint(s, c.cls)) > 0) {
            ref = &c.cls;
            ref_label = c.label;
            break;
        }
    if (!ref && s.reference_positive) {
        ref = &*s.reference_positive;
        ref_label = "reference";
    }
    if (ref) {
        Rat p = pair(s, d, *ref);
        if (sign(p) <= 0) v.reasons.emplace_back("orientation:" + ref_label, p);
    } else {
        v.reasons.emplace_back("no-orientation-reference", Rat(0));
    }
    if (!v.reasons.empty()) {
        v.status = Positivity::No;
        return v;
    }
    v.status = s.curves_complete ? Positivity::Yes : Positivity::ConditionalYes;
    return v;
}

DivClass Contraction::push(const DivClass& d) const {
    if (d.size() != push_matrix.cols()) throw Error("pushforward: dimension mismatch");
    DivClass out(push_matrix.rows(), Rat(0));
    for (std::size_t i = 0; i < push_matrix.rows(); ++i)
        for (std::size_t j = 0; j < push_matrix.cols(); ++j)
            if (d[j] != 0) out[i] += push_matrix.at(i, j) * d[j];
    return out;
}

Contraction contract_minus_one(const SurfaceModel& s, const DivClass& e0) {
    const std::size_t n = s.rank();
    if (e0.size() != n) throw Error("contract: class dimension mismatch");
    if (n < 2) throw Error("contract: rank would drop below 1");
    if (selfint(s, e0) != -1) throw Error("contract: class has self-intersection != -1");
    if (pair(s, s.canonical, e0) != -1) throw Error("contract: class has K.E != -1");
    bool in_roster = false;
    for (const auto& c : s.curves) in_roster = in_roster || c.cls == e0;
    if (!in_roster) throw Error("contract: class is not a roster curve");

    // Projection along E0: pi(D) = D + (D.E0) E0 lands in the orthogonal
    // complement; dropping a basis index whose E0-coefficient is nonzero
    // leaves the projected remaining basis vectors independent.
    std::size_t drop = n;
    for (std::size_t i = 0; i < n; ++i)
        if (e0[i] != 0) { drop = i; break; }
    if (drop == n) throw Error("contract: zero class");

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
        if (i != drop) keep.push_back(i);
    const std::size_t m = keep.size();

    // p_i = e_i.E0 for the kept basis vectors.
    std::vector<Rat> p(m);
    for (std::size_t a = 0; a < m; ++a) {
        DivClass ei(n, Rat(0));
        ei[keep[a]] = 1;
        p[a] = pair(s, ei, e0);
    }

    // New gram: (e_i + p_i E0).(e_j + p_j E0) = g_ij + p_i p_j.
    QMatrix gram(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            gram.at(a, b) = s.gram.at(keep[a], keep[b]) + p[a] * p[b];

    // Coordinates of pi(D) in the projected basis come from pairing data:
    // gram_new * coords = [pi(D).e_hat_a], so push = gram_new^{-1} B^T G Pi.
    QMatrix gram_inv = inverse(gram);
    // rows: pairing of pi(D) against each e_hat_a, as a linear map of D.
    QMatrix pairing_rows(m, n);
    for (std::size_t a = 0; a < m; ++a) {
        // e_hat_a.pi(D) = (e_a + p_a E0).(D + (D.E0)E0) = e_a.D + p_a (D.E0)
        //   + (e_a.E0)(D.E0) + p_a (D.E0)(E0^2) = e_a.D + p_a (D.E0).
        // As a row vector over D's coordinates: G[keep[a],*] + p_a (G e0)^T.
        DivClass ge0(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (e0[j] != 0) ge0[i] += s.gram.at(i, j) * e0[j];
        for (std::size_t j = 0; j < n; ++j)
            pairing_rows.at(a, j) = s.gram.at(keep[a], j) + p[a] * ge0[j];
    }
    QMatrix push(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat acc = 0;
            for (std::size_t k = 0; k < m; ++k) acc += gram_inv.at(i, k) * pairing_rows.at(k, j);
            push.at(i, j) = acc;
        }

    Contraction out;
    out.push_matrix = push;
    SurfaceModel& t = out.model;
    t.name = s.name + "'";
    for (std::size_t a = 0; a < m; ++a) t.basis.push_back(s.basis[keep[a]]);
    t.gram = gram;
    t.canonical = out.push(s.canonical);
    t.curves_complete = s.curves_complete;
    t.kodaira_nonneg = s.kodaira_nonneg;

    for (const auto& c : s.curves) {
        if (c.cls == e0) continue;
        DivClass pushed = out.push(c.cls);
        if (is_zero_class(pushed)) continue;
        bool seen = false;
        for (const auto& existing : t.curves) seen = seen || existing.cls == pushed;
        if (seen) continue;
        CurveRecord rec;
        rec.label = c.label;
        rec.cls = pushed;
        const Rat adj = pair(t, t.canonical, pushed) + selfint(t, pushed);
        if (is_even_integer(adj)) {
            Rat g = Rat(1) + adj / 2;
            if (is_integer(g) && g >= 0) rec.genus = g;
        }
        t.curves.push_back(std::move(rec));
    }
    if (s.reference_positive) {
        DivClass r = out.push(*s.reference_positive);
        if (!is_zero_class(r) && sign(selfint(t, r)) > 0) t.reference_positive = r;
    }
    for (const auto& g : s.effective_generators) {
        DivClass pushed = out.push(g);
        if (!is_zero_class(pushed)) t.effective_generators.push_back(pushed);
    }
    validate(t);
    return out;
}

PlaneFrame plane_coordinates(const SurfaceModel& s, const DivClass& l, const DivClass& d) {
    const Rat l2 = selfint(s, l);
    if (sign(l2) <= 0) throw Error("plane_coordinates: L^2 must be positive");
    // Degenerate direction: D proportional to L.
    std::size_t piv = l.size();
    for (std::size_t i = 0; i < l.size(); ++i)
        if (l[i] != 0) { piv = i; break; }
    if (piv < l.size()) {
        const Rat t = d[piv] / l[piv];
        bool proportional = true;
        for (std::size_t i = 0; i < l.size(); ++i)
            proportional = proportional && d[i] == t * l[i];
        if (proportional) throw Error("plane_coordinates: D proportional to L (degenerate)");
    }
    const Rat d2 = selfint(s, d);
    const Rat y2 = Rat(1) - d2 / l2;
    if (sign(y2) < 0)
        throw Error("plane_coordinates: D^2 > L^2, outside the normalised frame");
    PlaneFrame f{QuadValue::sqrt_of(y2), pair(s, l, d) / l2, -l2, false};
    f.normalized = (pair(s, l, d) == l2);
    return f;
}

std::string class_str(const SurfaceModel& s, const DivClass& d) {
    if (d.size() != s.rank()) throw Error("class_str: dimension mismatch");
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] == 0) continue;
        const Rat c = d[i];
        if (out.empty()) {
            if (c == -1) out += "-";
            else if (c != 1) out += rat_str(c);
        } else {
            if (sign(c) >= 0) out += "+";
            if (c == -1) out += "-";
            else if (c != 1) out += rat_str(c);
        }
        out += s.basis[i];
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace slopestab
