#pragma once

#include <string>
#include <utility>
#include <vector>

namespace symbidisc {

struct CheckResult {
    std::string suite;  // "acceptance" or the module the invariants belong to
    int criterion = 0;  // 1..12 for acceptance entries, 0 for invariant sweeps
    std::string name;
    bool pass = false;
    std::vector<std::pair<std::string, double>> stats;
};

/// The twelve acceptance criteria, with every count and tolerance pinned.
std::vector<CheckResult> run_acceptance(unsigned seed = 20240901);

/// Per-module invariant sweeps beyond the acceptance set.
std::vector<CheckResult> run_invariants(unsigned seed = 20240901);

/// suite: "all", "acceptance", "invariants", or a module name filter.
std::vector<CheckResult> run_suite(const std::string& suite, unsigned seed = 20240901);

}  // namespace symbidisc
