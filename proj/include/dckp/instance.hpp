#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "dckp/bitset.hpp"
#include "dckp/rng.hpp"

namespace dckp {

using profit_t = std::int64_t;
using weight_t = std::int64_t;

// A knapsack instance with pairwise item conflicts. Items are numbered 1..n;
// index 0 of the per-item arrays is unused. Instances are immutable after
// construction and safe to share across concurrent solver runs.
class Instance {
public:
    // Throws std::invalid_argument on any invariant violation (non-positive
    // profit/weight, out-of-range edge, self-loop, duplicate edge).
    Instance(int n, weight_t capacity, std::vector<profit_t> profits, std::vector<weight_t> weights,
             std::vector<std::pair<int, int>> edges, std::string name = "");

    int item_count() const { return n_; }
    weight_t capacity() const { return capacity_; }
    profit_t profit(int i) const { return profits_[static_cast<std::size_t>(i)]; }
    weight_t weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
    profit_t min_profit() const { return min_profit_; }
    weight_t total_weight() const { return total_weight_; }

    // Conflict edges with smaller endpoint first, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Bitset& adjacency(int i) const { return adjacency_[static_cast<std::size_t>(i)]; }
    bool conflicts(int i, int j) const { return adjacency_[static_cast<std::size_t>(i)].test(static_cast<std::size_t>(j)); }
    int degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }

    const std::string& name() const { return name_; }

    // Structural equality; the name is metadata and not compared.
    bool same_instance(const Instance& other) const;

private:
    int n_;
    weight_t capacity_;
    std::vector<profit_t> profits_;   // size n+1, [0] unused
    std::vector<weight_t> weights_;   // size n+1, [0] unused
    std::vector<std::pair<int, int>> edges_;
    std::vector<Bitset> adjacency_;   // size n+1, [0] empty
    std::vector<int> degrees_;
    profit_t min_profit_;
    weight_t total_weight_;
    std::string name_;
};

// Conflict-graph density 2m / n(n-1). Throws std::domain_error for n < 2.
double density(const Instance& inst);

// Canonical text format:
//   line 1: "n m C"
//   next n lines: "p_i w_i"
//   next m lines: "i j" with i < j, sorted
// Lines starting with '#' are ignored anywhere; errors carry a line number.
Instance parse_instance(std::istream& in, std::string name = "");
Instance parse_instance_text(const std::string& text, std::string name = "");
Instance load_instance(const std::string& path);

void serialize_instance(const Instance& inst, std::ostream& out);
std::string serialize_instance(const Instance& inst);

// Synthetic instance generation: G(n,m) conflict graph with exactly
// m = round(density * n(n-1)/2) edges, uniform weights, profits by rule.
struct GeneratorSpec {
    int n = 0;
    weight_t capacity = 0;
    double density = 0.0;        // in (0,1)
    weight_t weight_lo = 1;
    weight_t weight_hi = 100;
    bool shifted_profit = true;  // true: p_i = w_i + profit_shift
    profit_t profit_shift = 10;
    profit_t profit_lo = 1;      // used when shifted_profit is false
    profit_t profit_hi = 100;
    std::uint64_t seed = 0;
    std::string name;
};

Instance generate_instance(const GeneratorSpec& spec);

}  // namespace dckp
