#pragma once
// Built-in surface models: the worked examples every test and CLI run leans
// on. Each entry ships its curve roster, a completeness flag that separates
// certified lattice facts from asserted geometry, and featured divisor
// configurations / polarisations under stable labels.

#include <string>
#include <vector>

#include "slopestab/lattice.hpp"

namespace slopestab {

struct CatalogEntry {
    std::string key;  // canonical key, e.g. "product(2,11,5)"
    SurfaceModel model;
    std::string notes;  // what is certified vs asserted
};

// Keys: p2 | dp1 | dp2 | k3-shell | synthetic-highgenus | hirzebruch(n) |
// product(g,d) = product(g,h,d) with h = (g-1)d+1 | verygen-product(g1,g2) |
// blownup-quartic(17). Every returned model has passed validate(); featured
// polarisations are nef with positive square (ample unless noted).
// Errors on unknown keys or out-of-range parameters.
CatalogEntry catalog_get(const std::string& key);

// Key templates, for listings.
std::vector<std::string> catalog_keys();

}  // namespace slopestab
