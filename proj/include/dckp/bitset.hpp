#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace dckp {

// Fixed-capacity bitset sized at runtime, one 64-bit word per 64 bits.
// Item ids are 1-based throughout the library, so callers allocate n+1 bits
// and leave bit 0 unused.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        assert(i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(std::size_t i) {
        assert(i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    // |this △ other|
    std::size_t symmetric_difference_count(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(words_[k] ^ other.words_[k]));
        return c;
    }

    bool intersects(const Bitset& other) const {
        assert(nbits_ == other.nbits_);
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & other.words_[k]) return true;
        return false;
    }

    // Visit every set bit in increasing order.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w) {
                unsigned b = static_cast<unsigned>(std::countr_zero(w));
                fn(k * 64 + b);
                w &= w - 1;
            }
        }
    }

    bool operator==(const Bitset& other) const = default;

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace dckp
