#pragma once
// Zero-dimensional cross-check: monomial ideals in two variables, exact
// colength via the staircase, powers via Minkowski sums, and the quadratic
// growth fit whose coefficients determine the slope of the corresponding
// punctual subscheme. This gives an oracle for the point-mass slope bounds
// that is entirely independent of the surface-divisor machinery.

#include <utility>
#include <vector>

#include "slopestab/lattice.hpp"
#include "slopestab/rational.hpp"

namespace slopestab {

// Generators x^a y^b as exponent pairs; kept minimal (an antichain under
// componentwise domination).
struct MonomialIdeal {
    std::vector<std::pair<long, long>> gens;
};

// Validates exponents (non-negative, at least one generator) and minimalises.
MonomialIdeal make_ideal(std::vector<std::pair<long, long>> gens);

// Number of standard monomials under the staircase of I^j. Errors unless
// the ideal contains a pure power of each variable (finite colength).
Int colength(const MonomialIdeal& ideal, int j = 1);

// I^j by iterated minimalised Minkowski sums. j >= 1.
MonomialIdeal power(const MonomialIdeal& ideal, int j);

// colength(I^j) = c2 j^2 + c1 j + c0 for large j: fitted exactly at three
// consecutive points starting at `fitted_at` and validated on the next five;
// the anchor doubles (10, 20, 40) until validation passes.
struct GrowthFit {
    Rat c2, c1, c0;
    int fitted_at = 0;
};

GrowthFit fit_coefficients(const MonomialIdeal& ideal);

// Slope of the punctual subscheme cut out by the ideal: 3(c1 + c2)/(2 c2 c).
// Requires c > 0 and c2 > 0. Exceeds the reduced-point value 3/(2c) exactly
// when c1 > 0.
Rat mu_zero_dim(const GrowthFit& fit, const Rat& c);
Rat mu_zero_dim(const MonomialIdeal& ideal, const Rat& c);

// Stability of (X, L) against point-supported subschemes at parameter c
// reduces to the sign of (3L + cK).L.
bool point_bound_check(const SurfaceModel& s, const DivClass& l, const Rat& c);

}  // namespace slopestab
