#pragma once

#include <cstdint>
#include <vector>

#include "dckp/solution.hpp"

namespace dckp {

inline constexpr std::int64_t kHashSpace = 100'000'000;  // L

struct HashTriple {
    std::int64_t h1 = 0;
    std::int64_t h2 = 0;
    std::int64_t h3 = 0;
    bool operator==(const HashTriple&) const = default;
};

// Solution-based tabu memory: three bit vectors indexed by three independent
// hash functions h_v(S) = (sum over selected items of floor(i^gamma_v)) mod L,
// gamma = (1.2, 1.6, 2.0). A solution is prohibited iff all three bits are
// set, so false positives need a simultaneous collision in all vectors.
//
// Per-item weights floor(i^gamma_v) are precomputed as exact integers
// (long double estimate corrected with 128-bit integer comparisons), which
// makes the incremental triple update of shift_triple agree bit-exactly with
// recomputation. Weights are stored reduced mod L; identical hash values
// either way.
//
// One store per solver run; clear() re-zeroes all vectors between local
// search calls.
class ProhibitionStore {
public:
    explicit ProhibitionStore(int item_count, std::int64_t hash_space = kHashSpace);

    std::int64_t hash_space() const { return space_; }
    std::int64_t hash_weight(int v, int item) const { return weights_[static_cast<std::size_t>(v - 1)][static_cast<std::size_t>(item)]; }

    HashTriple hash_triple(const Solution& sol) const;
    HashTriple shift_triple(const HashTriple& t, const Move& mv) const;

    bool is_prohibited(const HashTriple& t) const;
    void record(const HashTriple& t);
    void clear();

    // Set bits in H1; used by collision-audit tests.
    std::int64_t popcount_h1() const;

private:
    std::int64_t space_;
    std::vector<std::int64_t> weights_[3];  // [v][item], item 1..n, reduced mod L
    std::vector<std::uint64_t> bits_[3];
};

// floor(i^gamma) for gamma in {1.2, 1.6, 2.0} (v = 1, 2, 3), exact.
std::int64_t floor_power(int item, int v);

}  // namespace dckp
