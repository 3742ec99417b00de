#pragma once

#include <vector>

#include "dckp/threshold_search.hpp"

namespace dckp {

// Population size rule |P| = n/100 + 5.
int pop_size(int item_count);

// Random construction: repeatedly add a uniformly random item that still fits
// and conflicts with nothing selected, until no such item exists. Starting
// from the empty solution this always succeeds and ends maximal.
void random_fill(Solution& sol, Rng& rng);

// Build pop_size(n) members, each random-filled and then refined by a short
// threshold search run (iteration budget 2n). Draws construction and
// refinement randomness from the same stream.
std::vector<Solution> init_population(const Instance& inst, const TspParams& search_template,
                                      ProhibitionStore* store, Rng& rng);

// Double-backbone crossover: the offspring receives every item the parents
// share, then items unique to one parent in the given order, each only if the
// offspring stays feasible. Items selected by neither parent never enter.
Solution crossover_with_order(const Solution& a, const Solution& b, const std::vector<int>& unique_order);
Solution crossover(const Solution& a, const Solution& b, Rng& rng);

// Pool-updating goodness score: beta * norm(objective) + (1-beta) * norm(D),
// where D_i is the minimum Hamming distance from solution i to the rest of
// the pool and norm(y) = (y - y_min) / (y_max - y_min + 1) over the pool.
// Isolated here so the scoring scheme can be swapped wholesale.
std::vector<double> goodness_from_values(const std::vector<profit_t>& objectives,
                                         const std::vector<int>& min_distances, double beta = 0.6);

std::vector<double> goodness_scores(const std::vector<Solution>& pool, double beta = 0.6);

struct PoolUpdate {
    bool candidate_kept = false;
    // The removed solution held the strictly largest objective of the
    // temporary pool; tracked because it should never happen when the
    // candidate is at least as good as the pool best.
    bool removed_unique_best = false;
};

// Temporarily insert the candidate, score the |P|+1 solutions, remove the
// worst. Pool size is unchanged.
PoolUpdate update_pool(std::vector<Solution>& pool, const Solution& candidate, double beta = 0.6);

}  // namespace dckp
