#pragma once

#include <vector>

#include "crossfam/oracle.hpp"
#include "crossfam/report.hpp"

namespace crossfam {

struct SuiteConfig {
    int n_max = 11;  // criteria with lower stated caps keep them
    int t_max = 3;
    long long budget = kDefaultBudget;
};

struct SuiteResult {
    std::vector<Check> checks;  // criterion-1 .. criterion-9
    nlohmann::json results;

    bool pass() const {
        for (const Check& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

/// Runs the full verification suite. Criteria 1-8 are executed twice and the
/// serialized outcomes compared, which is criterion 9 (determinism).
SuiteResult run_suite(const SuiteConfig& cfg);

/// All valid instance shapes with n <= n_max, 2 <= t <= t_max,
/// k_1 >= ... >= k_t >= 1, k_1 <= k1_max, n >= k_1 + k_2.
std::vector<ProblemInstance> instance_grid(int n_max, int k1_max, int t_max);

}  // namespace crossfam
