#pragma once

#include <utility>
#include <vector>

#include "dckp/instance.hpp"
#include "dckp/rng.hpp"
#include "dckp/solution.hpp"

namespace testutil {

// Five-item fixture used across the suites: optimum 13 via {1,5} or {2,3}.
inline dckp::Instance tiny5() {
    return dckp::Instance(5, 10, {6, 5, 8, 4, 7}, {5, 4, 6, 3, 5}, {{1, 2}, {3, 4}}, "T5");
}

// Independent oracle: enumerate all subsets, checking constraints straight
// from the instance data. Only for n <= 20.
inline std::pair<dckp::profit_t, std::vector<int>> brute_force_optimum(const dckp::Instance& inst) {
    const int n = inst.item_count();
    dckp::profit_t best = 0;
    std::vector<int> witness;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        dckp::profit_t profit = 0;
        dckp::weight_t weight = 0;
        bool ok = true;
        for (int i = 1; ok && i <= n; ++i) {
            if (!(mask >> (i - 1) & 1)) continue;
            profit += inst.profit(i);
            weight += inst.weight(i);
            for (int j = i + 1; ok && j <= n; ++j)
                if ((mask >> (j - 1) & 1) && inst.conflicts(i, j)) ok = false;
        }
        if (ok && weight <= inst.capacity() && profit > best) {
            best = profit;
            witness.clear();
            for (int i = 1; i <= n; ++i)
                if (mask >> (i - 1) & 1) witness.push_back(i);
        }
    }
    return {best, witness};
}

// Rebuild an instance with a different capacity (instances are immutable).
inline dckp::Instance with_capacity(const dckp::Instance& inst, dckp::weight_t capacity) {
    std::vector<dckp::profit_t> p;
    std::vector<dckp::weight_t> w;
    for (int i = 1; i <= inst.item_count(); ++i) {
        p.push_back(inst.profit(i));
        w.push_back(inst.weight(i));
    }
    return dckp::Instance(inst.item_count(), capacity, std::move(p), std::move(w), inst.edges(),
                          inst.name());
}

// Uniformly random feasible solution: random maximal fill, then drop a random
// subset again so the result is not always maximal.
inline dckp::Solution random_feasible(const dckp::Instance& inst, dckp::Rng& rng) {
    dckp::Solution sol(inst);
    for (;;) {
        std::vector<int> candidates;
        for (int i = 1; i <= inst.item_count(); ++i)
            if (!sol.selected(i) && sol.add_keeps_feasible(i)) candidates.push_back(i);
        if (candidates.empty()) break;
        sol.add(candidates[dckp::uniform_below(rng, candidates.size())]);
    }
    auto items = sol.selected_items();
    for (int i : items)
        if (dckp::uniform_below(rng, 3) == 0) sol.drop(i);
    return sol;
}

// A membership-legal random move (result may be infeasible; apply() permits
// that by contract).
inline dckp::Move random_legal_move(const dckp::Solution& sol, dckp::Rng& rng) {
    const int n = sol.instance().item_count();
    std::vector<int> in, out;
    for (int i = 1; i <= n; ++i) (sol.selected(i) ? in : out).push_back(i);
    for (;;) {
        switch (dckp::uniform_below(rng, 3)) {
            case 0:
                if (!out.empty()) return dckp::Move::add(out[dckp::uniform_below(rng, out.size())]);
                break;
            case 1:
                if (!in.empty()) return dckp::Move::drop(in[dckp::uniform_below(rng, in.size())]);
                break;
            default:
                if (!in.empty() && !out.empty())
                    return dckp::Move::swap(in[dckp::uniform_below(rng, in.size())],
                                            out[dckp::uniform_below(rng, out.size())]);
                break;
        }
    }
}

inline dckp::Instance random_small_instance(dckp::Rng& rng, int n_lo = 6, int n_hi = 14) {
    dckp::GeneratorSpec spec;
    spec.n = static_cast<int>(dckp::uniform_int(rng, n_lo, n_hi));
    spec.density = 0.05 + 0.01 * static_cast<double>(dckp::uniform_below(rng, 60));
    spec.weight_lo = 1;
    spec.weight_hi = 30;
    spec.shifted_profit = dckp::uniform_below(rng, 2) == 0;
    spec.profit_shift = 10;
    spec.profit_lo = 1;
    spec.profit_hi = 40;
    spec.capacity = 1;  // replaced below
    spec.seed = rng();
    auto inst = dckp::generate_instance(spec);
    dckp::weight_t cap = std::max<dckp::weight_t>(1, inst.total_weight() / 2);
    return with_capacity(inst, cap);
}

}  // namespace testutil
