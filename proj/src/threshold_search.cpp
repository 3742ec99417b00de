#include "dckp/threshold_search.hpp"

#include <cassert>
#include <limits>
#include <ostream>

namespace dckp {

profit_t threshold_value(ThresholdPolicy policy, const Instance& inst, profit_t f_best, Rng& rng,
                         bool absolute) {
    if (policy == ThresholdPolicy::set1) return f_best - inst.item_count() / 10;
    profit_t margin = inst.min_profit() + static_cast<profit_t>(uniform_below(rng, 20));
    return absolute ? margin : f_best - margin;
}

std::int64_t iter_max_for(int item_count, TspPhase phase) {
    assert(item_count >= 1);
    if (phase == TspPhase::init) return 2LL * item_count;
    return (item_count / 500 + 5) * 10000LL;
}

namespace {

constexpr profit_t kNegInf = std::numeric_limits<profit_t>::min();

struct ScanScratch {
    std::vector<int> selected;
    std::vector<int> complement;
    std::vector<int> add_candidates;
};

thread_local ScanScratch tls_scratch;

bool prohibited(const ProhibitionStore* store, const HashTriple& triple, const Move& mv) {
    return store != nullptr && store->is_prohibited(store->shift_triple(triple, mv));
}

// Descent variants used by the ablation studies: accept only strictly
// improving neighbors, either the first one found or the best across all
// three neighborhoods.
std::optional<Move> scan_descent(const Solution& s, const ProhibitionStore* store, const HashTriple& triple,
                                 ScanScratch& scratch, Rng& rng, bool best_improve) {
    const Instance& inst = s.instance();
    const profit_t f = s.profit();

    scratch.add_candidates.clear();
    for (int p : scratch.complement) {
        if (!s.add_keeps_feasible(p)) continue;
        if (prohibited(store, triple, Move::add(p))) continue;
        scratch.add_candidates.push_back(p);
    }

    std::optional<Move> best_move;
    profit_t best_value = f;
    if (!scratch.add_candidates.empty()) {
        if (!best_improve) {
            int p = scratch.add_candidates[uniform_below(rng, scratch.add_candidates.size())];
            return Move::add(p);
        }
        for (int p : scratch.add_candidates) {
            profit_t value = f + inst.profit(p);
            if (value > best_value) {
                best_value = value;
                best_move = Move::add(p);
            }
        }
    }

    for (int q : scratch.selected) {
        for (int p : scratch.complement) {
            profit_t value = f - inst.profit(q) + inst.profit(p);
            if (value <= (best_improve ? best_value : f)) continue;
            if (!s.swap_keeps_feasible(q, p)) continue;
            if (prohibited(store, triple, Move::swap(q, p))) continue;
            if (!best_improve) return Move::swap(q, p);
            best_value = value;
            best_move = Move::swap(q, p);
        }
    }
    // Drops never improve the objective, so descent ignores them.
    return best_move;
}

}  // namespace

std::optional<Move> scan_neighborhoods(const Solution& s, profit_t threshold, const ProhibitionStore* store,
                                       const HashTriple& current_triple, Rng& rng,
                                       AcceptancePolicy acceptance) {
    const Instance& inst = s.instance();
    ScanScratch& scratch = tls_scratch;
    scratch.selected.clear();
    scratch.complement.clear();
    for (int i = 1; i <= inst.item_count(); ++i)
        (s.selected(i) ? scratch.selected : scratch.complement).push_back(i);
    shuffle(scratch.selected, rng);
    shuffle(scratch.complement, rng);

    if (acceptance != AcceptancePolicy::threshold)
        return scan_descent(s, store, current_triple, scratch, rng,
                            acceptance == AcceptancePolicy::best_improve);

    const profit_t f = s.profit();

    // N1: every feasible, non-prohibited add that meets the threshold is an
    // equally valid successor; ties broken uniformly at random.
    scratch.add_candidates.clear();
    for (int p : scratch.complement) {
        if (!s.add_keeps_feasible(p)) continue;
        if (f + inst.profit(p) < threshold) continue;
        if (prohibited(store, current_triple, Move::add(p))) continue;
        scratch.add_candidates.push_back(p);
    }
    if (!scratch.add_candidates.empty())
        return Move::add(scratch.add_candidates[uniform_below(rng, scratch.add_candidates.size())]);

    // N2: swaps in randomized order with dynamic filtering. A candidate must
    // strictly beat the best feasible neighbor value seen in this scan before
    // it is considered at all; the first survivor meeting the threshold wins.
    profit_t best_seen = kNegInf;
    for (int q : scratch.selected) {
        const profit_t base = f - inst.profit(q);
        for (int p : scratch.complement) {
            profit_t value = base + inst.profit(p);
            if (value <= best_seen) continue;
            if (!s.swap_keeps_feasible(q, p)) continue;
            best_seen = value;
            if (prohibited(store, current_triple, Move::swap(q, p))) continue;
            if (value >= threshold) return Move::swap(q, p);
        }
    }

    // N3: drops, same protocol; always feasible.
    best_seen = kNegInf;
    for (int q : scratch.selected) {
        profit_t value = f - inst.profit(q);
        if (value <= best_seen) continue;
        best_seen = value;
        if (prohibited(store, current_triple, Move::drop(q))) continue;
        if (value >= threshold) return Move::drop(q);
    }
    return std::nullopt;
}

namespace {

const char* neighborhood_tag(const Move& mv) {
    switch (mv.kind) {
        case Move::Kind::add: return "N1";
        case Move::Kind::swap: return "N2";
        case Move::Kind::drop: return "N3";
    }
    return "?";
}

}  // namespace

TspResult run_tsp(const Instance& inst, const Solution& start, TspParams& params, ProhibitionStore* store,
                  Rng& rng, bool keep_store) {
    assert(start.feasible());
    assert(&inst == &start.instance());
    if (store && !keep_store) store->clear();

    Solution current = start;
    Solution best = start;
    HashTriple triple = store ? store->hash_triple(current) : HashTriple{};
    profit_t threshold =
        threshold_value(params.threshold_policy, inst, best.profit(), rng, params.absolute_threshold);

    TspResult result{best, 0, TspTermination::budget_exhausted};
    std::int64_t stall = 0;
    while (stall <= params.iter_max) {
        if (params.deadline && std::chrono::steady_clock::now() >= *params.deadline) {
            result.reason = TspTermination::deadline_reached;
            break;
        }
        auto mv = scan_neighborhoods(current, threshold, store, triple, rng, params.acceptance);
        if (!mv) {
            result.reason = TspTermination::neighborhoods_exhausted;
            break;
        }
        current.apply(*mv);
        if (store) {
            triple = store->shift_triple(triple, *mv);
            store->record(triple);
        }
        ++result.iterations;
        if (current.profit() > best.profit()) {
            best = current;
            stall = 0;
            threshold =
                threshold_value(params.threshold_policy, inst, best.profit(), rng, params.absolute_threshold);
        } else {
            ++stall;
        }
        if (params.trace) {
            *params.trace << result.iterations << ',' << current.profit() << ',' << best.profit() << ','
                          << threshold << ',' << neighborhood_tag(*mv) << ',' << mv->out_item << ','
                          << mv->in_item << ',' << triple.h1 << ',' << triple.h2 << ',' << triple.h3 << '\n';
        }
    }
    result.best = best;
    return result;
}

}  // namespace dckp
