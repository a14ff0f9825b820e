#pragma once

#include <string>
#include <vector>

namespace eqkl {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first counterexample on failure, case count on success
};

/// Names accepted by run_suites, in canonical order.
const std::vector<std::string>& all_suite_names();

/// Runs the named verification suites over the sweep 0..max_m × 1..max_d
/// (lemma sweeps use their own fixed parameter ranges), fanning independent
/// cells across up to `threads` workers. Results come back in suite order
/// regardless of schedule. Throws std::invalid_argument for unknown suite
/// names or bounds < 1.
std::vector<SuiteResult> run_suites(const std::vector<std::string>& names, int max_m, int max_d,
                                    int threads);

} // namespace eqkl
