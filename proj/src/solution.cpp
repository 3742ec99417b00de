#include "dckp/solution.hpp"

#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dckp {

Solution::Solution(const Instance& inst)
    : inst_(&inst),
      selected_(static_cast<std::size_t>(inst.item_count()) + 1),
      conflict_count_(static_cast<std::size_t>(inst.item_count()) + 1, 0) {}

void Solution::add(int p) {
    assert(p >= 1 && p <= inst_->item_count());
    assert(!selected_.test(static_cast<std::size_t>(p)));
    selected_.set(static_cast<std::size_t>(p));
    profit_ += inst_->profit(p);
    weight_ += inst_->weight(p);
    ++selected_count_;
    inst_->adjacency(p).for_each([&](std::size_t j) { ++conflict_count_[j]; });
}

void Solution::drop(int q) {
    assert(q >= 1 && q <= inst_->item_count());
    assert(selected_.test(static_cast<std::size_t>(q)));
    selected_.reset(static_cast<std::size_t>(q));
    profit_ -= inst_->profit(q);
    weight_ -= inst_->weight(q);
    --selected_count_;
    inst_->adjacency(q).for_each([&](std::size_t j) { --conflict_count_[j]; });
}

void Solution::apply(const Move& mv) {
    switch (mv.kind) {
        case Move::Kind::add: add(mv.in_item); break;
        case Move::Kind::drop: drop(mv.out_item); break;
        case Move::Kind::swap:
            assert(mv.out_item != mv.in_item);
            drop(mv.out_item);
            add(mv.in_item);
            break;
    }
}

bool Solution::feasible() const {
    if (weight_ > inst_->capacity()) return false;
    bool ok = true;
    selected_.for_each([&](std::size_t i) {
        if (conflict_count_[i] != 0) ok = false;
    });
    return ok;
}

std::vector<int> Solution::selected_items() const {
    std::vector<int> items;
    items.reserve(static_cast<std::size_t>(selected_count_));
    selected_.for_each([&](std::size_t i) { items.push_back(static_cast<int>(i)); });
    return items;
}

bool Solution::caches_consistent() const {
    profit_t p = 0;
    weight_t w = 0;
    int cnt = 0;
    selected_.for_each([&](std::size_t i) {
        p += inst_->profit(static_cast<int>(i));
        w += inst_->weight(static_cast<int>(i));
        ++cnt;
    });
    if (p != profit_ || w != weight_ || cnt != selected_count_) return false;
    for (int i = 1; i <= inst_->item_count(); ++i) {
        int expected = 0;
        inst_->adjacency(i).for_each([&](std::size_t j) {
            if (selected_.test(j)) ++expected;
        });
        if (expected != conflict_count_[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

bool is_feasible(const Instance& inst, const Solution& sol) {
    assert(&inst == &sol.instance());
    (void)inst;
    return sol.feasible();
}

profit_t objective(const Solution& sol) {
    return sol.profit();
}

int hamming_distance(const Solution& a, const Solution& b) {
    if (a.instance().item_count() != b.instance().item_count())
        throw std::invalid_argument("hamming_distance: mismatched item counts");
    return static_cast<int>(a.selected_set().symmetric_difference_count(b.selected_set()));
}

void write_certificate(const Solution& sol, std::ostream& out) {
    auto items = sol.selected_items();
    out << sol.instance().name() << ' ' << sol.profit() << ' ' << sol.weight() << ' ' << items.size() << '\n';
    for (std::size_t k = 0; k < items.size(); ++k) out << items[k] << (k + 1 < items.size() ? ' ' : '\n');
    if (items.empty()) out << '\n';
}

std::string write_certificate(const Solution& sol) {
    std::ostringstream out;
    write_certificate(sol, out);
    return out.str();
}

Certificate parse_certificate(std::istream& in) {
    Certificate cert;
    std::size_t k = 0;
    if (!(in >> cert.name >> cert.claimed_profit >> cert.claimed_weight >> k))
        throw std::runtime_error("malformed certificate header");
    cert.items.resize(k);
    for (std::size_t i = 0; i < k; ++i)
        if (!(in >> cert.items[i])) throw std::runtime_error("certificate item list truncated");
    return cert;
}

}  // namespace dckp
