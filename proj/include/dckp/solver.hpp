#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dckp/evolution.hpp"

namespace dckp {

struct SolverConfig {
    double time_limit_s = 60.0;
    std::uint64_t seed = 0;
    ThresholdPolicy threshold_policy = ThresholdPolicy::set1;
    AcceptancePolicy acceptance = AcceptancePolicy::threshold;
    bool op_enabled = true;
    bool absolute_threshold = false;
    // Keep the prohibition store across local search calls instead of
    // clearing it per call; experimentation only.
    bool global_op_store = false;
    // When positive, run exactly this many generations instead of stopping on
    // wall clock; makes results bitwise reproducible.
    std::int64_t budget_generations = 0;
    // Check the wall clock inside the local search on every iteration rather
    // than once per generation.
    bool strict_time = false;
    // Stop as soon as the best objective reaches this value (e.g. a known
    // optimum); leaves Alg-style behavior untouched when unset.
    std::optional<profit_t> stop_at;
    double pool_beta = 0.6;
    bool keep_generation_log = false;
    std::ostream* trace = nullptr;
};

struct GenerationRecord {
    std::int64_t generation = 0;
    profit_t offspring = 0;
    profit_t refined = 0;
    profit_t overall_best = 0;
    double elapsed_s = 0.0;
};

struct SolveReport {
    std::string instance_name;
    profit_t f_best = 0;
    weight_t weight_best = 0;
    std::vector<int> best_items;  // ascending
    double time_to_best_s = 0.0;
    double total_time_s = 0.0;
    std::int64_t generations = 0;
    SolverConfig config;
    std::vector<GenerationRecord> log;  // populated when keep_generation_log

    Solution best_solution(const Instance& inst) const;
};

// The memetic main loop: threshold-search-refined random population, then
// generations of parent selection, double-backbone crossover, threshold
// search, best-solution update (strict improvement only) and diversity-based
// pool updating, until the time (or generation) budget runs out.
SolveReport solve(const Instance& inst, const SolverConfig& config);

// Independent certificate check: recomputes feasibility and objective from
// the item list alone.
bool verify(const Instance& inst, const std::vector<int>& items, profit_t claimed_f);
bool verify(const Instance& inst, const Solution& sol, profit_t claimed_f);

std::string report_to_json(const SolveReport& report);

}  // namespace dckp
