#include "dckp/solver.hpp"

#include <algorithm>
#include <chrono>

#include <json.hpp>

namespace dckp {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

Solution SolveReport::best_solution(const Instance& inst) const {
    Solution sol(inst);
    for (int i : best_items) sol.add(i);
    return sol;
}

SolveReport solve(const Instance& inst, const SolverConfig& config) {
    const auto t0 = Clock::now();

    Rng init_rng = make_stream(config.seed, RngStream::population_init);
    Rng select_rng = make_stream(config.seed, RngStream::parent_selection);
    Rng cross_rng = make_stream(config.seed, RngStream::crossover);
    Rng tsp_rng = make_stream(config.seed, RngStream::tsp);

    std::unique_ptr<ProhibitionStore> store;
    if (config.op_enabled) store = std::make_unique<ProhibitionStore>(inst.item_count());

    TspParams search_template;
    search_template.threshold_policy = config.threshold_policy;
    search_template.acceptance = config.acceptance;
    search_template.absolute_threshold = config.absolute_threshold;
    search_template.trace = config.trace;
    if (config.strict_time && config.budget_generations <= 0)
        search_template.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                                            std::chrono::duration<double>(config.time_limit_s));

    auto pool = init_population(inst, search_template, store.get(), init_rng);

    SolveReport report;
    report.instance_name = inst.name();
    report.config = config;

    const Solution* best = &pool.front();
    for (const auto& member : pool)
        if (member.profit() > best->profit()) best = &member;
    Solution overall_best = *best;
    report.time_to_best_s = seconds_since(t0);

    TspParams main_params = search_template;
    main_params.iter_max = iter_max_for(inst.item_count(), TspPhase::main);

    auto done = [&](std::int64_t generation) {
        if (config.stop_at && overall_best.profit() >= *config.stop_at) return true;
        if (config.budget_generations > 0) return generation >= config.budget_generations;
        return seconds_since(t0) > config.time_limit_s;
    };

    std::int64_t generation = 0;
    while (!done(generation)) {
        std::size_t i = uniform_below(select_rng, pool.size());
        std::size_t j = i;
        if (pool.size() > 1)
            while (j == i) j = uniform_below(select_rng, pool.size());

        Solution offspring = crossover(pool[i], pool[j], cross_rng);
        TspResult refined = run_tsp(inst, offspring, main_params, store.get(), tsp_rng,
                                    config.global_op_store);
        ++generation;

        if (refined.best.profit() > overall_best.profit()) {
            overall_best = refined.best;
            report.time_to_best_s = seconds_since(t0);
        }
        update_pool(pool, refined.best, config.pool_beta);

        if (config.keep_generation_log)
            report.log.push_back({generation, offspring.profit(), refined.best.profit(),
                                  overall_best.profit(), seconds_since(t0)});
    }

    report.generations = generation;
    report.f_best = overall_best.profit();
    report.weight_best = overall_best.weight();
    report.best_items = overall_best.selected_items();
    report.total_time_s = seconds_since(t0);
    return report;
}

bool verify(const Instance& inst, const std::vector<int>& items, profit_t claimed_f) {
    std::vector<char> taken(static_cast<std::size_t>(inst.item_count()) + 1, 0);
    profit_t profit = 0;
    weight_t weight = 0;
    for (int i : items) {
        if (i < 1 || i > inst.item_count()) return false;
        if (taken[static_cast<std::size_t>(i)]) return false;
        taken[static_cast<std::size_t>(i)] = 1;
        profit += inst.profit(i);
        weight += inst.weight(i);
    }
    if (weight > inst.capacity()) return false;
    for (std::size_t k = 0; k < items.size(); ++k)
        for (std::size_t l = k + 1; l < items.size(); ++l)
            if (inst.conflicts(items[k], items[l])) return false;
    return profit == claimed_f;
}

bool verify(const Instance& inst, const Solution& sol, profit_t claimed_f) {
    std::vector<int> items;
    sol.selected_set().for_each([&](std::size_t i) { items.push_back(static_cast<int>(i)); });
    return verify(inst, items, claimed_f);
}

std::string report_to_json(const SolveReport& report) {
    nlohmann::json j;
    j["instance"] = report.instance_name;
    j["f_best"] = report.f_best;
    j["weight_best"] = report.weight_best;
    j["items"] = report.best_items;
    j["time_to_best_s"] = report.time_to_best_s;
    j["total_time_s"] = report.total_time_s;
    j["generations"] = report.generations;
    j["config"] = {
        {"time_limit_s", report.config.time_limit_s},
        {"seed", report.config.seed},
        {"threshold_policy", report.config.threshold_policy == ThresholdPolicy::set1 ? "set1" : "set2"},
        {"acceptance", report.config.acceptance == AcceptancePolicy::threshold     ? "threshold"
                       : report.config.acceptance == AcceptancePolicy::first_improve ? "first"
                                                                                     : "best"},
        {"op_enabled", report.config.op_enabled},
        {"absolute_threshold", report.config.absolute_threshold},
        {"global_op_store", report.config.global_op_store},
        {"budget_generations", report.config.budget_generations},
        {"strict_time", report.config.strict_time},
        {"pool_beta", report.config.pool_beta},
    };
    if (report.config.keep_generation_log) {
        nlohmann::json log = nlohmann::json::array();
        for (const auto& rec : report.log)
            log.push_back({{"generation", rec.generation},
                           {"offspring", rec.offspring},
                           {"refined", rec.refined},
                           {"overall_best", rec.overall_best},
                           {"elapsed_s", rec.elapsed_s}});
        j["generations_log"] = std::move(log);
    }
    return j.dump(2);
}

}  // namespace dckp
