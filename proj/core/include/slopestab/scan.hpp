#pragma once

#include "slopestab/slope.hpp"

#include <string>
#include <vector>

namespace slopestab {

// Verdict for one grid polarisation. A cell is unstable as soon as one of
// the probe divisors destabilises it; the first such divisor (in the order
// given) is recorded together with its verified parameter.
struct ScanCell {
    int t = 0;                     // grid position, 1..grid-1
    DivClass polarisation;         // (1 - t/n) La + (t/n) Lb
    std::string polarisation_str;  // rendered over the model basis
    std::string verdict;           // "stable" | "unstable" | "conditional"
    std::string witness_divisor;   // probe label, empty when stable
    Rat witness_c;                 // verified parameter, 0 when stable
};

struct ScanReport {
    int grid = 0;
    std::string from, to;  // endpoint labels used in headers
    std::vector<ScanCell> cells;
};

// Walks the segment between two polarisation classes on a grid of n steps
// and tests each interior point against the named probe divisors. Both
// endpoints must pass the nef test and at least one the ampleness test, so
// every interior point is an ample polarisation.
ScanReport cone_scan(const SurfaceModel& s, const NamedClass& la,
                     const NamedClass& lb, int grid,
                     const std::vector<NamedClass>& probes,
                     Mode mode = Mode::Strict);

// CSV with header "t,polarisation,verdict,witness_divisor,witness_c";
// stable cells leave the witness fields empty. Deterministic.
std::string scan_csv(const ScanReport& rep);

// Self-contained SVG strip chart of the verdicts, byte-identical across
// runs on the same report.
std::string scan_svg(const ScanReport& rep);

}  // namespace slopestab
