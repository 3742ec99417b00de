#include "dckp/exact.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dckp {

namespace {

struct Search {
    const Instance& inst;
    std::int64_t budget;
    std::vector<int> order;       // item ids by decreasing p/w
    std::vector<int> blocked;     // selected neighbors of each item
    std::vector<char> in_set;
    std::vector<int> chosen;
    OracleResult result;
    bool aborted = false;

    explicit Search(const Instance& inst_, std::int64_t budget_) : inst(inst_), budget(budget_) {
        const int n = inst.item_count();
        order.resize(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            // p_a/w_a > p_b/w_b without division
            auto lhs = inst.profit(a) * inst.weight(b);
            auto rhs = inst.profit(b) * inst.weight(a);
            if (lhs != rhs) return lhs > rhs;
            return a < b;
        });
        blocked.assign(static_cast<std::size_t>(n) + 1, 0);
        in_set.assign(static_cast<std::size_t>(n) + 1, 0);
    }

    // Fractional knapsack over the unblocked tail, conflicts ignored.
    double upper_bound(std::size_t idx, weight_t room, profit_t base) const {
        double bound = static_cast<double>(base);
        for (std::size_t k = idx; k < order.size() && room > 0; ++k) {
            int item = order[k];
            if (blocked[static_cast<std::size_t>(item)] > 0) continue;
            weight_t w = inst.weight(item);
            if (w <= room) {
                bound += static_cast<double>(inst.profit(item));
                room -= w;
            } else {
                bound += static_cast<double>(inst.profit(item)) * static_cast<double>(room) / static_cast<double>(w);
                room = 0;
            }
        }
        return bound;
    }

    void dfs(std::size_t idx, profit_t profit, weight_t room) {
        if (aborted) return;
        if (++result.nodes_explored > budget) {
            aborted = true;
            return;
        }
        if (profit > result.optimum) {
            result.optimum = profit;
            result.witness = chosen;
        }
        if (idx == order.size()) return;
        if (upper_bound(idx, room, profit) <= static_cast<double>(result.optimum)) return;

        int item = order[idx];
        if (blocked[static_cast<std::size_t>(item)] == 0 && inst.weight(item) <= room) {
            chosen.push_back(item);
            inst.adjacency(item).for_each([&](std::size_t j) { ++blocked[j]; });
            dfs(idx + 1, profit + inst.profit(item), room - inst.weight(item));
            inst.adjacency(item).for_each([&](std::size_t j) { --blocked[j]; });
            chosen.pop_back();
        }
        dfs(idx + 1, profit, room);
    }
};

// Unpruned subset enumeration; only for tiny item counts.
OracleResult enumerate_all(const Instance& inst) {
    const int n = inst.item_count();
    OracleResult result;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        ++result.nodes_explored;
        profit_t profit = 0;
        weight_t weight = 0;
        bool ok = true;
        for (int i = 1; ok && i <= n; ++i) {
            if (!(mask >> (i - 1) & 1)) continue;
            profit += inst.profit(i);
            weight += inst.weight(i);
            if (weight > inst.capacity()) ok = false;
            for (int j = i + 1; ok && j <= n; ++j)
                if ((mask >> (j - 1) & 1) && inst.conflicts(i, j)) ok = false;
        }
        if (ok && profit > result.optimum) {
            result.optimum = profit;
            result.witness.clear();
            for (int i = 1; i <= n; ++i)
                if (mask >> (i - 1) & 1) result.witness.push_back(i);
        }
    }
    return result;
}

}  // namespace

OracleResult solve_exact(const Instance& inst, std::int64_t node_budget) {
    if (inst.item_count() > 40)
        throw std::invalid_argument("solve_exact: refusing instances with more than 40 items");
    Search search(inst, node_budget);
    search.dfs(0, 0, inst.capacity());
    if (search.aborted) {
        if (inst.item_count() <= 20) {
            auto exhaustive = enumerate_all(inst);
            exhaustive.nodes_explored += search.result.nodes_explored;
            return exhaustive;
        }
        search.result.proven = false;
    }
    std::sort(search.result.witness.begin(), search.result.witness.end());
    return search.result;
}

}  // namespace dckp
