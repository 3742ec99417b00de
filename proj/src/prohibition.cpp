#include "dckp/prohibition.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace dckp {

namespace {

// Saturating integer power on 128 bits; returns max on overflow, which only
// matters far beyond the item counts this library targets.
__int128 ipow128(std::int64_t base, int exp) {
    constexpr __int128 kMax = ~static_cast<unsigned __int128>(0) >> 1;
    __int128 r = 1;
    for (int e = 0; e < exp; ++e) {
        if (r > kMax / base) return kMax;
        r *= base;
    }
    return r;
}

// floor(i^(num/5)) via long double estimate corrected by the exact predicate
// w^5 <= i^num.
std::int64_t floor_fifth_root_power(int item, int num) {
    auto fits = [&](std::int64_t w) { return ipow128(w, 5) <= ipow128(item, num); };
    auto est = static_cast<std::int64_t>(
        std::floor(std::pow(static_cast<long double>(item), static_cast<long double>(num) / 5.0L)));
    est = std::max<std::int64_t>(est, 0);
    while (!fits(est)) --est;
    while (fits(est + 1)) ++est;
    return est;
}

}  // namespace

std::int64_t floor_power(int item, int v) {
    assert(item >= 1);
    switch (v) {
        case 1: return floor_fifth_root_power(item, 6);   // gamma 1.2
        case 2: return floor_fifth_root_power(item, 8);   // gamma 1.6
        case 3: return static_cast<std::int64_t>(item) * item;  // gamma 2.0
        default: throw std::invalid_argument("floor_power: v must be 1, 2 or 3");
    }
}

ProhibitionStore::ProhibitionStore(int item_count, std::int64_t hash_space) : space_(hash_space) {
    if (item_count < 1) throw std::invalid_argument("ProhibitionStore: item_count must be >= 1");
    if (hash_space < 1) throw std::invalid_argument("ProhibitionStore: hash space must be >= 1");
    for (int v = 1; v <= 3; ++v) {
        auto& w = weights_[v - 1];
        w.assign(static_cast<std::size_t>(item_count) + 1, 0);
        for (int i = 1; i <= item_count; ++i) w[static_cast<std::size_t>(i)] = floor_power(i, v) % space_;
    }
    const std::size_t words = (static_cast<std::size_t>(space_) + 63) / 64;
    for (auto& b : bits_) b.assign(words, 0);
}

HashTriple ProhibitionStore::hash_triple(const Solution& sol) const {
    HashTriple t;
    std::int64_t* h[3] = {&t.h1, &t.h2, &t.h3};
    sol.selected_set().for_each([&](std::size_t i) {
        for (int v = 0; v < 3; ++v) *h[v] = (*h[v] + weights_[v][i]) % space_;
    });
    return t;
}

HashTriple ProhibitionStore::shift_triple(const HashTriple& t, const Move& mv) const {
    auto shift = [&](std::int64_t h, int v) {
        switch (mv.kind) {
            case Move::Kind::add: h += weights_[v][static_cast<std::size_t>(mv.in_item)]; break;
            case Move::Kind::drop: h += space_ - weights_[v][static_cast<std::size_t>(mv.out_item)]; break;
            case Move::Kind::swap:
                h += space_ - weights_[v][static_cast<std::size_t>(mv.out_item)] +
                     weights_[v][static_cast<std::size_t>(mv.in_item)];
                break;
        }
        return h % space_;
    };
    return {shift(t.h1, 0), shift(t.h2, 1), shift(t.h3, 2)};
}

bool ProhibitionStore::is_prohibited(const HashTriple& t) const {
    auto bit = [&](const std::vector<std::uint64_t>& b, std::int64_t h) {
        return (b[static_cast<std::size_t>(h >> 6)] >> (h & 63)) & 1u;
    };
    return bit(bits_[0], t.h1) && bit(bits_[1], t.h2) && bit(bits_[2], t.h3);
}

void ProhibitionStore::record(const HashTriple& t) {
    auto set = [](std::vector<std::uint64_t>& b, std::int64_t h) {
        b[static_cast<std::size_t>(h >> 6)] |= std::uint64_t{1} << (h & 63);
    };
    set(bits_[0], t.h1);
    set(bits_[1], t.h2);
    set(bits_[2], t.h3);
}

void ProhibitionStore::clear() {
    for (auto& b : bits_) std::fill(b.begin(), b.end(), 0);
}

std::int64_t ProhibitionStore::popcount_h1() const {
    std::int64_t c = 0;
    for (auto w : bits_[0]) c += std::popcount(w);
    return c;
}

}  // namespace dckp
