#pragma once

#include <string>
#include <vector>

namespace slopestab {

// One acceptance criterion: a frozen end-to-end check of the library against
// independently derived values. `detail` carries the headline numbers on
// success and the first few failures otherwise.
struct CheckResult {
    std::string tag;
    bool passed = false;
    std::string detail;
};

// Tags in execution order.
std::vector<std::string> selfcheck_tags();

// Runs the acceptance suite; an empty filter runs every check, otherwise
// only the named one. Unknown tags throw. Exceptions inside a check are
// caught and reported as failures of that check.
std::vector<CheckResult> run_selfcheck(const std::string& only = "");

}  // namespace slopestab
