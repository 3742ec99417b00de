#include "dckp/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dckp {

const char* const kRunCsvHeader = "instance,seed,run,f_best,time_to_best_s,generations";
const char* const kAggregateCsvHeader = "instance,runs,f_best,f_avg,std,t_avg_s";

namespace {

std::string format_seconds(double s) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", s);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

}  // namespace

AggregateRow aggregate_runs(const std::string& instance, const std::vector<RunRow>& rows) {
    AggregateRow agg;
    agg.instance = instance;
    agg.runs = static_cast<int>(rows.size());
    if (rows.empty()) return agg;
    double sum_f = 0.0, sum_t = 0.0;
    agg.f_best = rows.front().f_best;
    for (const auto& row : rows) {
        agg.f_best = std::max(agg.f_best, row.f_best);
        sum_f += static_cast<double>(row.f_best);
        sum_t += row.time_to_best_s;
    }
    agg.f_avg = sum_f / static_cast<double>(rows.size());
    agg.t_avg_s = sum_t / static_cast<double>(rows.size());
    double sq = 0.0;
    for (const auto& row : rows) {
        double d = static_cast<double>(row.f_best) - agg.f_avg;
        sq += d * d;
    }
    agg.stddev = std::sqrt(sq / static_cast<double>(rows.size()));
    return agg;
}

std::string format_run_row(const RunRow& row) {
    std::ostringstream out;
    out << row.instance << ',' << row.seed << ',' << row.run << ',' << row.f_best << ','
        << format_seconds(row.time_to_best_s) << ',' << row.generations;
    return out.str();
}

std::string format_aggregate_row(const AggregateRow& row) {
    std::ostringstream out;
    out << row.instance << ',' << row.runs << ',' << row.f_best << ',' << format_seconds(row.f_avg) << ','
        << format_seconds(row.stddev) << ',' << format_seconds(row.t_avg_s);
    return out.str();
}

BatchResult run_batch(const std::vector<std::string>& instance_paths, const SolverConfig& base_config,
                      int runs, int jobs, std::ostream* incremental, std::ostream* errors) {
    if (runs < 1) throw std::invalid_argument("run_batch: runs must be >= 1");
    jobs = std::max(jobs, 1);

    struct Loaded {
        std::string path;
        std::optional<Instance> instance;
    };
    std::vector<Loaded> loaded;
    for (const auto& path : instance_paths) {
        try {
            loaded.push_back({path, load_instance(path)});
        } catch (const std::exception& e) {
            if (errors) *errors << "skipping " << path << ": " << e.what() << '\n';
            loaded.push_back({path, std::nullopt});
        }
    }

    struct Task {
        const Instance* instance;
        int run;  // 1-based
    };
    std::vector<Task> tasks;
    for (const auto& entry : loaded) {
        if (!entry.instance) continue;
        for (int r = 1; r <= runs; ++r) tasks.push_back({&*entry.instance, r});
    }

    if (incremental) *incremental << kRunCsvHeader << '\n';

    std::vector<std::optional<RunRow>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    std::mutex sink_mutex;
    std::size_t flushed = 0;
    std::string failure;

    auto flush_ready = [&]() {
        while (flushed < slots.size() && slots[flushed].has_value()) {
            if (incremental) *incremental << format_run_row(*slots[flushed]) << '\n' << std::flush;
            ++flushed;
        }
    };

    auto worker = [&]() {
        for (;;) {
            std::size_t k = next.fetch_add(1);
            if (k >= tasks.size()) return;
            const Task& task = tasks[k];
            SolverConfig config = base_config;
            config.seed = base_config.seed + static_cast<std::uint64_t>(task.run - 1);
            SolveReport report = solve(*task.instance, config);
            bool ok = verify(*task.instance, report.best_items, report.f_best);
            std::lock_guard<std::mutex> lock(sink_mutex);
            if (!ok && failure.empty())
                failure = "verification failed for " + task.instance->name() + " run " +
                          std::to_string(task.run);
            slots[k] = RunRow{task.instance->name(), config.seed,          task.run,
                              report.f_best,         report.time_to_best_s, report.generations};
            flush_ready();
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (!failure.empty()) throw std::logic_error("run_batch: " + failure);

    BatchResult result;
    for (auto& slot : slots) result.rows.push_back(std::move(*slot));
    std::size_t offset = 0;
    for (const auto& entry : loaded) {
        if (!entry.instance) continue;
        std::vector<RunRow> rows(result.rows.begin() + static_cast<std::ptrdiff_t>(offset),
                                 result.rows.begin() + static_cast<std::ptrdiff_t>(offset + static_cast<std::size_t>(runs)));
        result.aggregates.push_back(aggregate_runs(entry.instance->name(), rows));
        offset += static_cast<std::size_t>(runs);
    }
    return result;
}

std::string aggregate_path_for(const std::string& run_path) {
    const std::string suffix = ".csv";
    if (run_path.size() > suffix.size() &&
        run_path.compare(run_path.size() - suffix.size(), suffix.size(), suffix) == 0)
        return run_path.substr(0, run_path.size() - suffix.size()) + ".agg.csv";
    return run_path + ".agg";
}

void emit_csv(const BatchResult& batch, const std::string& path) {
    std::ofstream runs_out(path);
    if (!runs_out) throw std::runtime_error("cannot write " + path);
    runs_out << kRunCsvHeader << '\n';
    for (const auto& row : batch.rows) runs_out << format_run_row(row) << '\n';
    if (!runs_out.flush()) throw std::runtime_error("write failed: " + path);

    const std::string agg_path = aggregate_path_for(path);
    std::ofstream agg_out(agg_path);
    if (!agg_out) throw std::runtime_error("cannot write " + agg_path);
    agg_out << kAggregateCsvHeader << '\n';
    for (const auto& row : batch.aggregates) agg_out << format_aggregate_row(row) << '\n';
    if (!agg_out.flush()) throw std::runtime_error("write failed: " + agg_path);
}

std::vector<RunRow> parse_run_csv(std::istream& in) {
    std::vector<RunRow> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == kRunCsvHeader) continue;
        }
        auto fields = split_csv_line(line);
        if (fields.size() != 6) throw std::runtime_error("bad per-run CSV row: " + line);
        RunRow row;
        row.instance = fields[0];
        row.seed = std::stoull(fields[1]);
        row.run = std::stoi(fields[2]);
        row.f_best = std::stoll(fields[3]);
        row.time_to_best_s = std::stod(fields[4]);
        row.generations = std::stoll(fields[5]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<AggregateRow> parse_aggregate_csv(std::istream& in) {
    std::vector<AggregateRow> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line == kAggregateCsvHeader) continue;
        }
        auto fields = split_csv_line(line);
        if (fields.size() != 6) throw std::runtime_error("bad aggregate CSV row: " + line);
        AggregateRow row;
        row.instance = fields[0];
        row.runs = std::stoi(fields[1]);
        row.f_best = std::stoll(fields[2]);
        row.f_avg = std::stod(fields[3]);
        row.stddev = std::stod(fields[4]);
        row.t_avg_s = std::stod(fields[5]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ProfileCell> parse_profile_csv(std::istream& in) {
    std::vector<ProfileCell> cells;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (first) {
            first = false;
            if (!fields.empty() && fields[0] == "instance") continue;
        }
        if (fields.size() != 3) throw std::runtime_error("bad results-table CSV row: " + line);
        cells.push_back({fields[0], fields[1], std::stod(fields[2])});
    }
    return cells;
}

}  // namespace dckp
