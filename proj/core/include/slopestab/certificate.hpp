#pragma once
// Destabilisation certificates: a self-contained bundle of exact data — the
// divisor configuration, the orthogonalising coefficients, a polarisation,
// and a parameter — that any verifier can recheck against the surface model
// by pure intersection arithmetic. Construction runs in three stages:
// orthogonalise an ample class against the configuration, pick the parameter
// from the explicit threshold, then walk the polarisation close enough to
// the orthogonal limit for the strict slope inequality to hold.

#include <string>
#include <utility>
#include <vector>

#include "slopestab/exceptional.hpp"
#include "slopestab/slope.hpp"

namespace slopestab {

// Stage 1: solve (C_i.C_j) q = -(base.C_j) for a connected exceptional
// configuration pairing non-positively with its components; all q_i must
// come out positive, and l0 = base + sum q_i C_i pairs to zero with every
// component. Requires is_ample(base) to pass.
struct OrthogonalSolution {
    std::vector<Rat> q;
    DivClass l0;
};

OrthogonalSolution solve_orthogonal_polarization(const SurfaceModel& s, const DivisorConfig& cfg,
                                                 const DivClass& base);

// Stage 2: a parameter 0 < c < epsilon_floor making the limiting slope
// G/c = 3(2 p_a - 2)/(2 c D^2) beat mu(X, l0). The feasible set is the
// interval (0, min(G/mu0, epsilon_floor)) — all of (0, epsilon_floor) when
// mu0 >= 0 — and its midpoint is returned for determinism. Requires
// l0 orthogonal to the configuration, D^2 < 0 and p_a(D) >= 2 (hypothesis
// failure otherwise).
Rat find_destabilizing_c(const SurfaceModel& s, const DivClass& l0, const DivisorConfig& cfg,
                         const Rat& epsilon_floor);

// Stage 3: halving search s = 1, 1/2, 1/4, ... (64 tries) until
// l_s = l0 + s * base is ample, c stays below the Seshadri bound of l_s, and
// the slope inequality at (l_s, c) is strict.
struct Perturbation {
    Rat s;
    DivClass l_s;
    bool conditional = false;  // ampleness rests on an incomplete roster
};

Perturbation perturb_polarization(const SurfaceModel& s, const DivClass& l0, const DivClass& base,
                                  const DivisorConfig& cfg, const Rat& c);

struct Certificate {
    std::string surface;  // model name, informational
    std::vector<std::pair<std::string, int>> config;  // (roster label, multiplicity)
    DivClass base;           // the ample class the construction starts from
    std::vector<Rat> q;      // componentwise positive
    DivClass l0;             // base + sum q_i C_i
    Rat epsilon_floor;       // min q_i / d_i
    Rat s;                   // polarisation offset along base
    DivClass polarisation;   // l0 + s * base
    Rat c;                   // destabilising parameter, 0 < c < epsilon_floor
    Rat genus;               // p_a of the total divisor class, >= 2
    Rat mu_x;                // mu(X, polarisation)
    Rat mu_c;                // mu_c(O_D, polarisation), < mu_x exactly
    bool conditional = false;
};

// Composes the three stages for a connected exceptional configuration of
// arithmetic genus >= 2. Throws Error when the input is ineligible or no
// polarisation in the halving family works.
Certificate build_certificate(const SurfaceModel& s, const DivisorConfig& cfg,
                              const DivClass& base);

struct VerifyResult {
    bool ok = false;
    std::string violated;  // first violated invariant, empty when ok
};

// Rechecks every stored invariant from scratch — only pairings, positivity
// verdicts, the epsilon comparison, and the slope inequality; nothing is
// re-solved. Check order (first failure named): config / connected /
// exceptional / component-pairing / genus / coefficients / orthogonal-base /
// floor / polarisation / ample / certainty / parameter / slope.
VerifyResult verify_certificate(const SurfaceModel& s, const Certificate& cert);

// Line-oriented exact serialisation (cert_* keys, coefficient lists in basis
// order). parse_certificate reports malformed input with line numbers.
std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(const std::string& text);

}  // namespace slopestab
