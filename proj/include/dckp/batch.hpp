#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dckp/solver.hpp"
#include "dckp/stats.hpp"

namespace dckp {

struct RunRow {
    std::string instance;
    std::uint64_t seed = 0;
    int run = 1;  // 1-based
    profit_t f_best = 0;
    double time_to_best_s = 0.0;
    std::int64_t generations = 0;
};

struct AggregateRow {
    std::string instance;
    int runs = 0;
    profit_t f_best = 0;  // best over runs
    double f_avg = 0.0;
    double stddev = 0.0;  // population standard deviation over runs
    double t_avg_s = 0.0;
};

struct BatchResult {
    std::vector<RunRow> rows;  // instance order as given, runs ascending
    std::vector<AggregateRow> aggregates;
};

AggregateRow aggregate_runs(const std::string& instance, const std::vector<RunRow>& rows);

// Run `runs` seeded solves per instance (seed_base + run - 1), optionally on
// `jobs` worker threads. Every result is verified against its instance before
// it is reported; a verification failure is a solver defect and throws.
// Completed rows are streamed to `incremental` (when given) in deterministic
// order as soon as they are contiguous, so a crash leaves a valid prefix.
// An instance that fails to load is reported on `errors` and skipped; the
// rest of the batch proceeds.
BatchResult run_batch(const std::vector<std::string>& instance_paths, const SolverConfig& base_config,
                      int runs, int jobs = 1, std::ostream* incremental = nullptr,
                      std::ostream* errors = nullptr);

extern const char* const kRunCsvHeader;        // instance,seed,run,f_best,time_to_best_s,generations
extern const char* const kAggregateCsvHeader;  // instance,runs,f_best,f_avg,std,t_avg_s

std::string format_run_row(const RunRow& row);
std::string format_aggregate_row(const AggregateRow& row);

// Per-run rows to `path`, aggregates to the companion file (".csv" replaced
// by ".agg.csv", or ".agg" appended).
void emit_csv(const BatchResult& batch, const std::string& path);
std::string aggregate_path_for(const std::string& run_path);

std::vector<RunRow> parse_run_csv(std::istream& in);
std::vector<AggregateRow> parse_aggregate_csv(std::istream& in);

// Long-format results table "instance,solver,f_best" for profile input.
std::vector<ProfileCell> parse_profile_csv(std::istream& in);

}  // namespace dckp
