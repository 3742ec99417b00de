#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>

#include "dckp/prohibition.hpp"
#include "dckp/rng.hpp"
#include "dckp/solution.hpp"

namespace dckp {

enum class ThresholdPolicy { set1, set2 };

// set1 derives the acceptance threshold from the best-found objective and the
// instance size; set2 uses a margin of the minimum profit plus a fresh draw
// from {0..19}. With absolute_threshold the set2 value is used as-is instead
// of as a margin below the best objective.
enum class AcceptancePolicy { threshold, first_improve, best_improve };

struct TspParams {
    ThresholdPolicy threshold_policy = ThresholdPolicy::set1;
    std::int64_t iter_max = 1;
    AcceptancePolicy acceptance = AcceptancePolicy::threshold;
    bool absolute_threshold = false;  // literal set2 reading, experimentation only
    std::ostream* trace = nullptr;    // per-iteration CSV rows when non-null
    // Optional hard deadline checked every iteration; unset means the caller
    // controls wall-clock at a coarser granularity.
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

enum class TspTermination { budget_exhausted, neighborhoods_exhausted, deadline_reached };

struct TspResult {
    Solution best;
    std::int64_t iterations = 0;
    TspTermination reason = TspTermination::budget_exhausted;
};

// Acceptance threshold for the current best objective. set2 draws from rng on
// every call.
profit_t threshold_value(ThresholdPolicy policy, const Instance& inst, profit_t f_best, Rng& rng,
                         bool absolute = false);

// Iteration budget: the long main-phase budget or the short initialization
// budget of 2n.
enum class TspPhase { init, main };
std::int64_t iter_max_for(int item_count, TspPhase phase);

// One token-ring pass over the three move neighborhoods. Returns the move to
// accept or nothing if every neighborhood is exhausted.
//
//  - adds: all feasible, non-prohibited adds meeting the threshold collected,
//    one returned uniformly at random;
//  - swaps: items of the selected set and its complement are each freshly
//    shuffled, pairs scanned in that order; a candidate is skipped unless it
//    strictly improves on the best feasible neighbor value seen in this scan
//    (dynamic filtering), then skipped if prohibited; the first survivor
//    meeting the threshold is returned;
//  - drops: same protocol over the selected items.
//
// `store` may be null (prohibition disabled). Under first_improve /
// best_improve the threshold is ignored and only strictly improving neighbors
// are returned (first one, or the best over all three neighborhoods).
std::optional<Move> scan_neighborhoods(const Solution& current, profit_t threshold,
                                       const ProhibitionStore* store, const HashTriple& current_triple,
                                       Rng& rng, AcceptancePolicy acceptance);

// Threshold search: repeated scans with threshold acceptance, prohibition of
// revisited solutions, and a stall budget of iter_max iterations without
// improving the best solution. The store is cleared on entry unless
// keep_store is set.
TspResult run_tsp(const Instance& inst, const Solution& start, TspParams& params, ProhibitionStore* store,
                  Rng& rng, bool keep_store = false);

}  // namespace dckp
