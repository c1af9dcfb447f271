#pragma once

// Fast invariant suite run by `fqdiff selftest`. The options allow injecting
// faults so that the negative controls can be demonstrated to fail.

#include <string>
#include <vector>

namespace fqd {

struct SelftestOptions {
    /// Crossover radius used by the dispatcher-consistency check (0 = default).
    double crossover_radius = 0.0;
    /// |alpha - beta| tolerance handed to the regime classifier check.
    double ballistic_tolerance = 0.0;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

std::vector<CheckResult> run_selftest(const SelftestOptions& options = {});

}  // namespace fqd
