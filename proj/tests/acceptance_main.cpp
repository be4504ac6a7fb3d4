// Acceptance gate: runs every selfcheck criterion and prints exactly one
// PASS/FAIL line per criterion. Exit status is the number of failures
// (capped), so `ctest` treats any red line as a failed test.

#include <cstdio>

#include "slopestab/selfcheck.hpp"

int main() {
    int failures = 0;
    for (const auto& r : slopestab::run_selfcheck()) {
        std::printf("%s  %-26s %s\n", r.passed ? "PASS" : "FAIL", r.tag.c_str(),
                    r.detail.c_str());
        if (!r.passed) ++failures;
    }
    std::printf("%d criteria failed\n", failures);
    return failures > 99 ? 99 : failures;
}
