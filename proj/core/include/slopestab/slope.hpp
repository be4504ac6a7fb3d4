#pragma once
// Slope stability decisions. The central object is the sign of
//   N(c) = 3(2L.D - c(K.D + D^2)) - mu(X) * 2c(3L.D - c D^2),
// a rational quadratic in c whose negativity on the admissible interval is
// exactly "D destabilises at parameter c". Interval endpoints are quadratic
// irrationals, so the analysis runs in Q(sqrt(n)) with no approximation.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "slopestab/exceptional.hpp"
#include "slopestab/lattice.hpp"
#include "slopestab/quadirr.hpp"

namespace slopestab {

// mu(X, L) = -K.L / L^2. Requires L^2 > 0.
Rat mu_surface(const SurfaceModel& s, const DivClass& l);

// Slope of the structure sheaf of an effective divisor class D at parameter
// c: 3(2L.D - c(K.D + D^2)) / (2c(3L.D - c D^2)). Requires c > 0 and a
// nonzero denominator.
Rat mu_divisor(const SurfaceModel& s, const DivClass& l, const DivClass& d, const Rat& c);

// Smallest positive root of (L - tD)^2 = D^2 t^2 - 2 L.D t + L^2, the square
// bound every admissible parameter must respect. Requires L^2 > 0, L.D > 0.
// Postconditions asserted exactly: the root satisfies the defining quadratic
// and D^2 * eps <= L.D.
QuadValue pseudo_epsilon(const SurfaceModel& s, const DivClass& l, const DivClass& d);

// Roster Seshadri bound: min over roster curves C with D.C > 0 of
// (L.C)/(D.C), capped by pseudo_epsilon. Requires is_ample(L) to pass.
struct SeshadriBound {
    QuadValue value;
    bool conditional = false;     // mirrors roster completeness
    std::string binding = "";     // curve label, or "square-bound"
};

SeshadriBound seshadri_divisor(const SurfaceModel& s, const DivClass& l, const DivClass& d);

enum class Mode { Strict, Pseudo };
enum class EpsilonKind { RosterSeshadri, PseudoEpsilon };

struct StabilityVerdict {
    bool stable_wrt = true;
    std::optional<Rat> witness_c;      // present iff unstable
    std::optional<Rat> mu_at_witness;  // mu_c at the witness, < mu_x exactly
    QuadValue epsilon_used;
    EpsilonKind epsilon_kind = EpsilonKind::RosterSeshadri;
    bool conditional = false;  // verdict relies on an incomplete roster
    Rat mu_x;
};

// Decides whether D destabilises (X, L): is there c in (0, eps] (Strict,
// eps the roster Seshadri bound) or (0, eps~) (Pseudo, eps~ the square
// bound) with mu_c(O_D) < mu(X)? Exact endpoint/vertex analysis of N(c); a
// rational witness strictly inside the feasible region is produced by
// rounding the (degree <= 2) interval endpoints inward at denominator 10^6
// and taking the midpoint of the widest rational subinterval (the
// denominator escalates in the measure-zero case where 10^6 is too coarse).
// Requires is_ample(L) to pass, D nonzero, L.D > 0.
StabilityVerdict destabilizes(const SurfaceModel& s, const DivClass& l, const DivClass& d,
                              Mode mode);

// Q(A, D) = 2((K + 2D).A)(A.D) - (K.D - D^2) A^2.
Rat q_form(const SurfaceModel& s, const DivClass& a, const DivClass& d);

// The quartic-free cubic whose sign at c equals the sign of mu_c - mu(X)
// when L, A = L - cD pass the ampleness test and L.D > 0:
//   P(c) = c^3 (K.D + 3D^2) D^2 + 4 c^2 (K.A + 3 A.D) D^2 + 3 c Q(A, D)
//        + 6 (A.D) A^2.
struct StabilityCubic {
    Rat value;
    std::array<Rat, 4> terms;  // the four displayed summands
};

StabilityCubic stability_cubic(const SurfaceModel& s, const DivClass& l, const DivClass& d,
                               const Rat& c);

// Component-removal admissibility: for D = D' + F,
//   total_bound: 2 D.F <= min(F^2, F^2 - K.F)
//   component_bound: additionally D.F_i <= F_i^2 for every component of F.
struct RemovalAdmissible {
    bool total_bound = false;
    bool component_bound = false;
};

RemovalAdmissible removal_admissible(const SurfaceModel& s, const DivClass& d,
                                     const DivisorConfig& f);

// Adjoint reduction: repeatedly (a) remove a component violating the normal
// form (D.F >= 0 for (-1)-curves, (K+D).F >= 0 for other negative curves),
// justified by removal_admissible, or (b) contract a roster (-1)-curve F
// with D.F = 0, pushing D forward; stops when K + D (KodairaNonneg mode) or
// K + 2D (NefDivisor mode) is nef, or on the two recognised terminal shapes.
enum class ReductionMode { KodairaNonneg, NefDivisor };
enum class ReductionOutcome { AdjointNef, PlaneLine, RuledFibres, Stuck };

struct ReductionStep {
    std::string action;  // "remove" | "contract"
    std::string detail;
};

struct ReductionResult {
    ReductionOutcome outcome = ReductionOutcome::Stuck;
    SurfaceModel final_model;
    DivisorConfig final_config;
    std::vector<ReductionStep> log;
    std::string stuck_reason;
};

ReductionResult adjoint_reduction(const SurfaceModel& s, const DivisorConfig& cfg,
                                  ReductionMode mode);

// Ampleness of 2(K.L) L - (L^2) K.
PositivityVerdict check_weinkove(const SurfaceModel& s, const DivClass& l);

// Necessary-genus filter: with K.L >= 0 (error otherwise), only p_a(D) >= 2
// can destabilise; returns that predicate for D.
bool genus_obstruction(const SurfaceModel& s, const DivClass& l, const DivClass& d);

}  // namespace slopestab
