#include "slopestab/monomial.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace slopestab {
namespace {

std::vector<std::pair<long, long>> minimalise(std::vector<std::pair<long, long>> gens) {
    // Sort by a then b; a generator survives iff its b is strictly below the
    // running minimum, which removes everything dominated componentwise.
    std::sort(gens.begin(), gens.end());
    std::vector<std::pair<long, long>> out;
    long best_b = std::numeric_limits<long>::max();
    for (const auto& g : gens) {
        if (g.second >= best_b) continue;
        out.push_back(g);
        best_b = g.second;
    }
    return out;
}

}  // namespace

MonomialIdeal make_ideal(std::vector<std::pair<long, long>> gens) {
    if (gens.empty()) throw Error("make_ideal: no generators");
    for (const auto& [a, b] : gens)
        if (a < 0 || b < 0) throw Error("make_ideal: negative exponent");
    return {minimalise(std::move(gens))};
}

Int colength(const MonomialIdeal& ideal, int j) {
    const MonomialIdeal powered = (j == 1) ? ideal : power(ideal, j);
    long pure_x = -1, pure_y = -1;
    for (const auto& [a, b] : powered.gens) {
        if (b == 0) pure_x = (pure_x < 0) ? a : std::min(pure_x, a);
        if (a == 0) pure_y = (pure_y < 0) ? b : std::min(pure_y, b);
    }
    if (pure_x < 0 || pure_y < 0)
        throw Error("colength: infinite (missing a pure power of a variable)");
    // Column u of the staircase holds min{b : (a, b) a generator, a <= u}
    // standard monomials; columns at and beyond the pure x power are empty.
    Int total = 0;
    for (long u = 0; u < pure_x; ++u) {
        long f = std::numeric_limits<long>::max();
        for (const auto& [a, b] : powered.gens)
            if (a <= u) f = std::min(f, b);
        total += f;
    }
    return total;
}

MonomialIdeal power(const MonomialIdeal& ideal, int j) {
    if (j < 1) throw Error("power: exponent must be >= 1");
    std::vector<std::pair<long, long>> acc = ideal.gens;
    for (int k = 1; k < j; ++k) {
        std::set<std::pair<long, long>> sums;
        for (const auto& [a1, b1] : acc)
            for (const auto& [a2, b2] : ideal.gens) sums.emplace(a1 + a2, b1 + b2);
        acc = minimalise({sums.begin(), sums.end()});
    }
    return {std::move(acc)};
}

GrowthFit fit_coefficients(const MonomialIdeal& ideal) {
    for (int anchor = 10; anchor <= 40; anchor *= 2) {
        std::vector<Rat> v;  // colengths at anchor .. anchor+7
        for (int j = anchor; j < anchor + 8; ++j) v.emplace_back(colength(ideal, j));
        GrowthFit fit;
        fit.fitted_at = anchor;
        fit.c2 = (v[2] - 2 * v[1] + v[0]) / 2;
        fit.c1 = v[1] - v[0] - fit.c2 * (2 * anchor + 1);
        fit.c0 = v[0] - fit.c2 * anchor * anchor - fit.c1 * anchor;
        bool ok = true;
        for (int k = 3; k < 8 && ok; ++k) {
            Rat j(anchor + k);
            ok = (fit.c2 * j * j + fit.c1 * j + fit.c0 == v[k]);
        }
        if (ok) return fit;
    }
    throw Error("fit_coefficients: colength growth is not quadratic by anchor 40");
}

Rat mu_zero_dim(const GrowthFit& fit, const Rat& c) {
    if (sign(c) <= 0) throw Error("mu_zero_dim: parameter must be positive");
    if (sign(fit.c2) <= 0) throw Error("mu_zero_dim: leading coefficient must be positive");
    return 3 * (fit.c1 + fit.c2) / (2 * fit.c2 * c);
}

Rat mu_zero_dim(const MonomialIdeal& ideal, const Rat& c) {
    return mu_zero_dim(fit_coefficients(ideal), c);
}

bool point_bound_check(const SurfaceModel& s, const DivClass& l, const Rat& c) {
    if (sign(c) <= 0) throw Error("point_bound_check: parameter must be positive");
    DivClass lhs = Rat(3) * l + c * s.canonical;
    return sign(pair(s, lhs, l)) >= 0;
}

}  // namespace slopestab
