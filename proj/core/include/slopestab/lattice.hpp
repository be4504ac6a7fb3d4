#pragma once
// Numerical model of a polarised surface: a basis of the Neron-Severi
// lattice with its intersection form, the canonical class, and a roster of
// known irreducible curve classes. All downstream stability decisions are
// functions of this data alone.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slopestab/matrix.hpp"
#include "slopestab/quadirr.hpp"
#include "slopestab/rational.hpp"

namespace slopestab {

// A divisor class: coefficients over the model basis.
using DivClass = std::vector<Rat>;

DivClass operator+(const DivClass& x, const DivClass& y);
DivClass operator-(const DivClass& x, const DivClass& y);
DivClass operator*(const Rat& t, const DivClass& x);
bool is_zero_class(const DivClass& x);

struct CurveRecord {
    std::string label;
    DivClass cls;
    std::optional<Rat> genus;  // validated against adjunction when present
};

struct NamedClass {
    std::string label;
    DivClass cls;
};

// A named effective configuration given as roster-curve multiplicities;
// resolved to a full config by the exceptional-analysis layer.
struct NamedConfig {
    std::string label;
    std::vector<std::pair<std::string, int>> parts;  // (curve label, multiplicity)
};

struct SurfaceModel {
    std::string name;
    std::vector<std::string> basis;
    QMatrix gram;
    DivClass canonical;
    std::vector<CurveRecord> curves;
    bool curves_complete = false;
    bool kodaira_nonneg = false;
    std::optional<DivClass> reference_positive;  // orientation witness for is_ample
    std::vector<DivClass> effective_generators;  // extra enumeration generators
    std::vector<NamedClass> polarisations;       // featured polarisations
    std::vector<NamedConfig> divisors;           // featured divisor configs

    std::size_t rank() const { return basis.size(); }
    const CurveRecord* find_curve(const std::string& label) const;
};

// Checks every structural invariant: distinct basis labels, symmetric gram of
// signature (1, rank-1), matching dimensions, adjunction parity for every
// roster curve (K.C + C^2 an even integer, stored genus consistent and a
// non-negative integer), distinct labels, and — when the roster is flagged
// complete — no repeated negative-square roster class. Throws Error.
void validate(const SurfaceModel& s);

// Intersection pairing d^T G e. Throws on dimension mismatch.
Rat pair(const SurfaceModel& s, const DivClass& d, const DivClass& e);
inline Rat selfint(const SurfaceModel& s, const DivClass& d) { return pair(s, d, d); }

// p_a(D) = 1 + (D^2 + K.D)/2, as an exact rational (integrality is a property
// of honest curve classes, not of arbitrary inputs).
Rat arithmetic_genus(const SurfaceModel& s, const DivClass& d);

// Sylvester test: true iff the k-th leading principal minor has sign (-1)^k
// for every k. Requires a square symmetric input.
bool is_negative_definite(const QMatrix& m);

enum class Positivity { Yes, ConditionalYes, No };

struct PositivityVerdict {
    Positivity status = Positivity::No;
    // For No: the violated conditions as (witness label, offending value).
    std::vector<std::pair<std::string, Rat>> reasons;
    bool passed() const { return status != Positivity::No; }
    bool conditional() const { return status == Positivity::ConditionalYes; }
};

// "label=value, label=value" rendering of the violation list, for messages.
std::string positivity_reasons(const PositivityVerdict& v);

// Nefness against the roster: pair(D, C) >= 0 for every roster curve. Yes
// needs a complete roster; otherwise ConditionalYes.
PositivityVerdict is_nef(const SurfaceModel& s, const DivClass& d);

// Ampleness test: D^2 > 0, pair(D, C) > 0 for every roster curve, and a
// positive pairing against the orientation reference (first roster curve of
// positive square if one exists, else the model's declared reference class;
// with neither available the verdict is No with reason
// "no-orientation-reference"). Yes needs a complete roster.
PositivityVerdict is_ample(const SurfaceModel& s, const DivClass& d);

// Blow-down of a (-1)-curve: E0 must have E0^2 = K.E0 = -1 and appear in the
// roster. The result holds the rank-(n-1) model on the orthogonal complement
// of E0 and the linear pushforward map D |-> D + (D.E0) E0 expressed in the
// new basis.
struct Contraction {
    SurfaceModel model;
    QMatrix push_matrix;  // (rank-1) x rank
    DivClass push(const DivClass& d) const;
};

Contraction contract_minus_one(const SurfaceModel& s, const DivClass& e0);

// Coordinates of D in the hyperbolic plane spanned by L (L^2 > 0) and a
// unit-normalised orthogonal direction tau with tau^2 = -L^2. The returned y
// is the normalised-frame parameter, y = sqrt(1 - D^2/L^2) >= 0, i.e. the
// coefficient of tau once L.D is rescaled to L^2; lambda = L.D/L^2 and the
// `normalized` flag report whether the input already satisfied that
// rescaling. Errors: L^2 <= 0, D proportional to L (degenerate), or
// D^2 > L^2 (outside the frame's range).
struct PlaneFrame {
    QuadValue y;
    Rat lambda;
    Rat tau_square;
    bool normalized;
};

PlaneFrame plane_coordinates(const SurfaceModel& s, const DivClass& l, const DivClass& d);

// Formatting helpers shared by the CLI and serialisers: "3H-E" style.
std::string class_str(const SurfaceModel& s, const DivClass& d);

}  // namespace slopestab
