#include "dckp/evolution.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace dckp {

int pop_size(int item_count) {
    assert(item_count >= 1);
    return item_count / 100 + 5;
}

void random_fill(Solution& sol, Rng& rng) {
    const Instance& inst = sol.instance();
    std::vector<int> candidates;
    candidates.reserve(static_cast<std::size_t>(inst.item_count()));
    for (;;) {
        candidates.clear();
        for (int i = 1; i <= inst.item_count(); ++i)
            if (!sol.selected(i) && sol.add_keeps_feasible(i)) candidates.push_back(i);
        if (candidates.empty()) return;
        sol.add(candidates[uniform_below(rng, candidates.size())]);
    }
}

std::vector<Solution> init_population(const Instance& inst, const TspParams& search_template,
                                      ProhibitionStore* store, Rng& rng) {
    std::vector<Solution> pool;
    const int size = pop_size(inst.item_count());
    pool.reserve(static_cast<std::size_t>(size));
    for (int k = 0; k < size; ++k) {
        Solution sol(inst);
        random_fill(sol, rng);
        TspParams params = search_template;
        params.iter_max = iter_max_for(inst.item_count(), TspPhase::init);
        pool.push_back(run_tsp(inst, sol, params, store, rng).best);
    }
    return pool;
}

Solution crossover_with_order(const Solution& a, const Solution& b, const std::vector<int>& unique_order) {
    assert(a.feasible() && b.feasible());
    const Instance& inst = a.instance();
    Solution offspring(inst);
    // Shared items first; feasible as a subset of either parent.
    for (int i = 1; i <= inst.item_count(); ++i)
        if (a.selected(i) && b.selected(i)) offspring.add(i);
    for (int i : unique_order) {
        assert(a.selected(i) != b.selected(i));
        if (offspring.add_keeps_feasible(i)) offspring.add(i);
    }
    return offspring;
}

Solution crossover(const Solution& a, const Solution& b, Rng& rng) {
    const Instance& inst = a.instance();
    std::vector<int> unique;
    for (int i = 1; i <= inst.item_count(); ++i)
        if (a.selected(i) != b.selected(i)) unique.push_back(i);
    shuffle(unique, rng);
    return crossover_with_order(a, b, unique);
}

std::vector<double> goodness_from_values(const std::vector<profit_t>& objectives,
                                         const std::vector<int>& min_distances, double beta) {
    assert(objectives.size() == min_distances.size());
    auto normalized = [](auto lo, auto hi, auto y) {
        return static_cast<double>(y - lo) / static_cast<double>(hi - lo + 1);
    };
    auto [f_lo, f_hi] = std::minmax_element(objectives.begin(), objectives.end());
    auto [d_lo, d_hi] = std::minmax_element(min_distances.begin(), min_distances.end());
    std::vector<double> scores(objectives.size());
    for (std::size_t i = 0; i < scores.size(); ++i)
        scores[i] = beta * normalized(*f_lo, *f_hi, objectives[i]) +
                    (1.0 - beta) * normalized(*d_lo, *d_hi, min_distances[i]);
    return scores;
}

std::vector<double> goodness_scores(const std::vector<Solution>& pool, double beta) {
    assert(pool.size() >= 2);
    std::vector<profit_t> objectives(pool.size());
    std::vector<int> min_distances(pool.size(), std::numeric_limits<int>::max());
    for (std::size_t i = 0; i < pool.size(); ++i) objectives[i] = pool[i].profit();
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            int d = hamming_distance(pool[i], pool[j]);
            min_distances[i] = std::min(min_distances[i], d);
            min_distances[j] = std::min(min_distances[j], d);
        }
    return goodness_from_values(objectives, min_distances, beta);
}

PoolUpdate update_pool(std::vector<Solution>& pool, const Solution& candidate, double beta) {
    assert(!pool.empty());
    pool.push_back(candidate);
    auto scores = goodness_scores(pool, beta);
    std::size_t worst = 0;
    for (std::size_t i = 1; i < pool.size(); ++i)
        if (scores[i] < scores[worst]) worst = i;

    PoolUpdate info;
    profit_t best_profit = pool[0].profit();
    int best_count = 1;
    for (std::size_t i = 1; i < pool.size(); ++i) {
        if (pool[i].profit() > best_profit) {
            best_profit = pool[i].profit();
            best_count = 1;
        } else if (pool[i].profit() == best_profit) {
            ++best_count;
        }
    }
    info.removed_unique_best = (pool[worst].profit() == best_profit && best_count == 1);
    info.candidate_kept = (worst != pool.size() - 1);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(worst));
    return info;
}

}  // namespace dckp
