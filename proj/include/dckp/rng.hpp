#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace dckp {

using Rng = std::mt19937_64;

// One splitmix64 step; used both as a seed scrambler and for stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Stream ids for the independent generator streams derived from one root seed.
// Keeping the streams separate means an ablation that draws more (or fewer)
// numbers in one component does not shift the sequences seen by the others.
enum class RngStream : std::uint64_t {
    population_init = 1,
    parent_selection = 2,
    crossover = 3,
    tsp = 4,
    instance_generator = 5,
};

// Derive a seeded engine for (root_seed, stream): two splitmix64 steps over
// the root xored with the stream id.
inline Rng make_stream(std::uint64_t root_seed, RngStream stream) {
    std::uint64_t s = root_seed ^ (0xA0761D6478BD642FULL * static_cast<std::uint64_t>(stream));
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return Rng{a ^ (b << 1)};
}

// Unbiased integer in [0, bound) via rejection sampling. Hand-rolled so that
// draws are reproducible across standard library implementations
// (std::uniform_int_distribution is not pinned by the standard).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw > limit);
    return draw % bound;
}

// Integer in [lo, hi], inclusive.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Fisher-Yates shuffle with the reproducible draw above.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace dckp
