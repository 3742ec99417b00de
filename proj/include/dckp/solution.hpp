#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dckp/instance.hpp"

namespace dckp {

// A move between a solution and one of its neighbors. `out_item` leaves the
// selected set, `in_item` enters it.
struct Move {
    enum class Kind { add, drop, swap };
    Kind kind;
    int out_item = 0;  // member of A for drop/swap
    int in_item = 0;   // member of the complement for add/swap

    static Move add(int p) { return {Kind::add, 0, p}; }
    static Move drop(int q) { return {Kind::drop, q, 0}; }
    static Move swap(int q, int p) { return {Kind::swap, q, p}; }
};

// A candidate solution: the selected item set plus caches that are maintained
// incrementally on every move. conflict_count(i) is the number of selected
// items adjacent to i, for every item i (selected or not), which makes the
// compatibility test for a candidate item O(1).
//
// apply() does not enforce feasibility; neighborhoods gate feasibility before
// applying (drop moves are always feasible and crossover needs raw adds).
class Solution {
public:
    explicit Solution(const Instance& inst);

    const Instance& instance() const { return *inst_; }

    profit_t profit() const { return profit_; }
    weight_t weight() const { return weight_; }
    bool selected(int i) const { return selected_.test(static_cast<std::size_t>(i)); }
    int selected_count() const { return selected_count_; }
    int conflict_count(int i) const { return conflict_count_[static_cast<std::size_t>(i)]; }
    const Bitset& selected_set() const { return selected_; }

    void add(int p);
    void drop(int q);
    void apply(const Move& mv);

    // Feasibility of the current state: weight within capacity and no selected
    // item in conflict with another selected item.
    bool feasible() const;

    // O(1) tests for whether a move keeps the solution feasible.
    bool add_keeps_feasible(int p) const {
        return weight_ + inst_->weight(p) <= inst_->capacity() && conflict_count_[static_cast<std::size_t>(p)] == 0;
    }
    bool swap_keeps_feasible(int q, int p) const {
        int blockers = conflict_count_[static_cast<std::size_t>(p)] - (inst_->conflicts(q, p) ? 1 : 0);
        return blockers == 0 && weight_ - inst_->weight(q) + inst_->weight(p) <= inst_->capacity();
    }

    std::vector<int> selected_items() const;  // ascending

    // Recompute profit/weight/conflict counts from the raw selected set and
    // compare with the caches; used by debug assertions and tests.
    bool caches_consistent() const;

    bool same_selection(const Solution& other) const { return selected_ == other.selected_; }

private:
    const Instance* inst_;
    Bitset selected_;
    profit_t profit_ = 0;
    weight_t weight_ = 0;
    int selected_count_ = 0;
    std::vector<int> conflict_count_;
};

bool is_feasible(const Instance& inst, const Solution& sol);
profit_t objective(const Solution& sol);

// |A1 ^ A2|; both solutions must come from instances of the same size.
int hamming_distance(const Solution& a, const Solution& b);

// Certificate format: "name f W k" on the first line, then the k selected
// item ids in ascending order on one line.
void write_certificate(const Solution& sol, std::ostream& out);
std::string write_certificate(const Solution& sol);

struct Certificate {
    std::string name;
    profit_t claimed_profit = 0;
    weight_t claimed_weight = 0;
    std::vector<int> items;
};

Certificate parse_certificate(std::istream& in);

}  // namespace dckp
