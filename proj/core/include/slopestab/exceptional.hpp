#pragma once
// Effective configurations of roster curves and their contractibility
// analysis: negative-definiteness of the component Gram matrix, connected
// components of the dual graph, the numerical cycle (Laufer iteration), and
// the rational / elliptic / high-genus trichotomy by its arithmetic genus.

#include <optional>
#include <string>
#include <vector>

#include "slopestab/lattice.hpp"

namespace slopestab {

struct ConfigComponent {
    std::string label;  // roster label of the component curve
    DivClass cls;
    int mult = 1;
};

struct DivisorConfig {
    std::vector<ConfigComponent> components;

    bool empty() const { return components.empty(); }
    int total_multiplicity() const;
};

// Resolves (curve label, multiplicity) pairs against the model roster.
// Multiplicities must be positive and labels distinct.
DivisorConfig make_config(const SurfaceModel& s,
                          const std::vector<std::pair<std::string, int>>& parts);

DivClass total_class(const SurfaceModel& s, const DivisorConfig& cfg);

// Component Gram matrix pair(D_i, D_j) in component order.
QMatrix component_gram(const SurfaceModel& s, const DivisorConfig& cfg);

// True iff the component Gram matrix is negative definite (Sylvester test on
// leading minors) — the numerical contractibility criterion.
bool is_exceptional(const SurfaceModel& s, const DivisorConfig& cfg);

// Splits along the dual graph (edges where pair(D_i, D_j) > 0), returned in
// deterministic order by smallest component index.
std::vector<DivisorConfig> connected_components(const SurfaceModel& s,
                                                const DivisorConfig& cfg);

// The numerical cycle of a connected exceptional configuration: starting
// from the reduced cycle, repeatedly add any component with positive pairing
// until all pairings are <= 0. `priority` reorders which violating component
// is picked first (the result is order-independent; tests exercise this).
// Throws when the configuration is not connected and exceptional.
struct CycleResult {
    DivisorConfig cycle;
    int steps = 0;
};

CycleResult numerical_cycle(const SurfaceModel& s, const DivisorConfig& cfg,
                            const std::optional<std::vector<std::size_t>>& priority = {});

enum class SingularityKind { Rational, Elliptic, HighGenus };

struct SingularityClass {
    SingularityKind kind;
    CycleResult cycle;
    Rat cycle_genus;
};

// Trichotomy by the arithmetic genus of the numerical cycle; p_a < 0 means
// the input lattice data is inconsistent and raises an Error.
SingularityClass classify_singularity(const SurfaceModel& s, const DivisorConfig& cfg);

// True iff the total class pairs non-positively with every component — the
// admissibility condition the certificate constructor needs.
bool pairs_nonpositively(const SurfaceModel& s, const DivisorConfig& cfg);

std::string config_str(const DivisorConfig& cfg);

}  // namespace slopestab
