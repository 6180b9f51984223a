#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossfam/bound.hpp"
#include "crossfam/instance.hpp"
#include "crossfam/linitial.hpp"

namespace crossfam {

/// Thrown when an exhaustive search would exceed the configured state budget;
/// carries the budget that would have been required.
struct BudgetExceeded : std::runtime_error {
    Natural required;
    explicit BudgetExceeded(Natural need)
        : std::runtime_error("search space of " + need.str() +
                             " states exceeds the configured budget"),
          required(std::move(need)) {}
};

struct OracleResult {
    Natural optimum;
    std::vector<std::vector<Natural>> witnesses;  // maximizing size-vectors
    std::vector<std::vector<FamilyID>> ids;       // matching L-initial IDs
    std::optional<std::string> matched_case;      // extremal-config label
    bool witnesses_complete = true;
    long long states_searched = 0;
    long long maximizer_count = 0;  // total maximizers (micro: A_1 choices)
    std::string method;
};

constexpr long long kDefaultBudget = 100'000'000;

/// Exact maximum of sum |A_j| over tuples of non-empty L-initial families,
/// pairwise cross-intersecting per the size-threshold test. Exhaustive over
/// the size grid with optimistic pruning; all maximizing size-vectors are
/// collected (up to an internal cap, flagged via witnesses_complete).
OracleResult linitial_search(const ProblemInstance& inst,
                             long long budget = kDefaultBudget);

/// Unrestricted two-family ground truth: maximizes |A_1| + |A_2| over every
/// non-empty A_1 of k_1-sets with A_2 = all k_2-sets meeting every member of
/// A_1 (the closure; any optimum can be assumed closed, since replacing A_2
/// by the closure never shrinks it and keeps the pair cross-intersecting).
/// Small spaces are enumerated subset-by-subset; larger ones are solved
/// exactly via the bipartite matching deficiency formula on the
/// disjointness graph.
OracleResult micro_search_t2(int n, int k1, int k2);

/// Feasibility of a size-vector (1-based family order) via the maximal
/// counterpart thresholds, checked in both directions for every ordered pair.
bool pairwise_threshold_feasible(const std::vector<Natural>& sizes,
                                 const ProblemInstance& inst);

}  // namespace crossfam
