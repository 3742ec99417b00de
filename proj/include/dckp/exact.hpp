#pragma once

#include <cstdint>
#include <vector>

#include "dckp/instance.hpp"

namespace dckp {

struct OracleResult {
    profit_t optimum = 0;
    std::vector<int> witness;  // one optimal selected set, ascending
    std::int64_t nodes_explored = 0;
    // False only when the node budget ran out before the search space was
    // exhausted; the result is then a lower bound, never a wrong answer.
    bool proven = true;
};

// Exact optimum by depth-first branch and bound: items ordered by decreasing
// profit/weight, pruned with the fractional-knapsack bound over the items
// that still fit and conflict with nothing selected (the bound ignores
// conflicts among the remaining items, a valid relaxation). Intended for
// small verification instances; refuses item counts above 40. If the budget
// runs out on an instance with at most 20 items, plain exhaustive
// enumeration finishes the job instead.
OracleResult solve_exact(const Instance& inst, std::int64_t node_budget = 20'000'000);

}  // namespace dckp
