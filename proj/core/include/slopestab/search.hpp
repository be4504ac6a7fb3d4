#pragma once

#include "slopestab/slope.hpp"

#include <string>
#include <vector>

namespace slopestab {

// One destabilising class found by the bounded enumeration.
struct SearchHit {
    DivClass cls;
    std::string expr;  // combination in generator labels, e.g. "E" or "2E+F"
    StabilityVerdict verdict;
};

struct SearchReport {
    std::vector<SearchHit> hits;   // enumeration order
    long long tested = 0;          // candidates actually run through the slope test
    long long skipped_genus = 0;   // candidates discarded by the genus filter
    bool genus_filter_active = false;
    bool conditional = false;      // some verdict leaned on an incomplete roster
};

struct SearchOptions {
    long bound = 5;                   // coefficient range 0..bound per generator
    Mode mode = Mode::Strict;
    bool genus_filter = true;         // skip p_a < 2 candidates when K.L >= 0
    long long candidate_cap = 2000000;  // refuse larger enumerations up front
};

// Enumerates D = sum a_i G_i with 0 <= a_i <= bound over the roster curves
// together with any extra effective generators (deduplicated by class), and
// reports every D that destabilises (s, l).  The polarisation must pass the
// ampleness test.  Candidates with p_a(D) < 2 cannot destabilise when
// K.L >= 0, so they are skipped unless the filter is turned off; the skip
// count is reported so callers can audit the shortcut.
SearchReport search_destabilizers(const SurfaceModel& s, const DivClass& l,
                                  const SearchOptions& opt = {});

}  // namespace slopestab
