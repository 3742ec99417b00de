#include "dckp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace dckp {

Instance::Instance(int n, weight_t capacity, std::vector<profit_t> profits, std::vector<weight_t> weights,
                   std::vector<std::pair<int, int>> edges, std::string name)
    : n_(n), capacity_(capacity), name_(std::move(name)) {
    if (n < 1) throw std::invalid_argument("item count must be >= 1");
    if (capacity < 1) throw std::invalid_argument("capacity must be >= 1");
    if (profits.size() != static_cast<std::size_t>(n) || weights.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("profit/weight arrays must have exactly n entries");

    profits_.assign(static_cast<std::size_t>(n) + 1, 0);
    weights_.assign(static_cast<std::size_t>(n) + 1, 0);
    total_weight_ = 0;
    for (int i = 1; i <= n; ++i) {
        profit_t p = profits[static_cast<std::size_t>(i - 1)];
        weight_t w = weights[static_cast<std::size_t>(i - 1)];
        if (p <= 0) throw std::invalid_argument("profit of item " + std::to_string(i) + " must be positive");
        if (w <= 0) throw std::invalid_argument("weight of item " + std::to_string(i) + " must be positive");
        profits_[static_cast<std::size_t>(i)] = p;
        weights_[static_cast<std::size_t>(i)] = w;
        total_weight_ += w;
    }
    min_profit_ = *std::min_element(profits_.begin() + 1, profits_.end());

    adjacency_.assign(static_cast<std::size_t>(n) + 1, Bitset(static_cast<std::size_t>(n) + 1));
    degrees_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto& [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (a == b) throw std::invalid_argument("self-loop on item " + std::to_string(a));
        if (a > b) std::swap(a, b);
        if (adjacency_[static_cast<std::size_t>(a)].test(static_cast<std::size_t>(b)))
            throw std::invalid_argument("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        adjacency_[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
        adjacency_[static_cast<std::size_t>(b)].set(static_cast<std::size_t>(a));
        ++degrees_[static_cast<std::size_t>(a)];
        ++degrees_[static_cast<std::size_t>(b)];
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
}

bool Instance::same_instance(const Instance& other) const {
    return n_ == other.n_ && capacity_ == other.capacity_ && profits_ == other.profits_ &&
           weights_ == other.weights_ && edges_ == other.edges_;
}

double density(const Instance& inst) {
    if (inst.item_count() < 2) throw std::domain_error("density undefined for instances with fewer than 2 items");
    double n = inst.item_count();
    return 2.0 * static_cast<double>(inst.edge_count()) / (n * (n - 1.0));
}

namespace {

// Line-oriented reader that skips '#' comments and blank lines, tracking the
// physical line number for error reporting.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& out, int& line_no) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            std::size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (line[start] == '#') continue;
            out = line;
            line_no = line_;
            return true;
        }
        return false;
    }

    int current_line() const { return line_; }

private:
    std::istream& in_;
    int line_ = 0;
};

[[noreturn]] void parse_fail(int line, const std::string& what) {
    throw std::runtime_error("parse error at line " + std::to_string(line) + ": " + what);
}

std::vector<std::int64_t> parse_ints(const std::string& line, int line_no, std::size_t expected) {
    std::istringstream ss(line);
    std::vector<std::int64_t> vals;
    std::int64_t v;
    while (ss >> v) vals.push_back(v);
    std::string tail;
    if (!ss.eof()) {
        ss.clear();
        ss >> tail;
    }
    if (!tail.empty() || vals.size() != expected)
        parse_fail(line_no, "expected " + std::to_string(expected) + " integers, got '" + line + "'");
    return vals;
}

}  // namespace

Instance parse_instance(std::istream& in, std::string name) {
    LineReader reader(in);
    std::string line;
    int line_no = 0;

    if (!reader.next(line, line_no)) parse_fail(reader.current_line(), "missing header 'n m C'");
    auto header = parse_ints(line, line_no, 3);
    std::int64_t n = header[0], m = header[1], cap = header[2];
    if (n < 1) parse_fail(line_no, "item count must be >= 1");
    if (m < 0 || m > n * (n - 1) / 2) parse_fail(line_no, "edge count out of range");
    if (cap < 1) parse_fail(line_no, "capacity must be >= 1");

    std::vector<profit_t> profits;
    std::vector<weight_t> weights;
    profits.reserve(static_cast<std::size_t>(n));
    weights.reserve(static_cast<std::size_t>(n));
    for (std::int64_t i = 1; i <= n; ++i) {
        if (!reader.next(line, line_no)) parse_fail(reader.current_line(), "unexpected end of file in item list");
        auto vals = parse_ints(line, line_no, 2);
        if (vals[0] <= 0) parse_fail(line_no, "profit of item " + std::to_string(i) + " must be positive");
        if (vals[1] <= 0) parse_fail(line_no, "weight of item " + std::to_string(i) + " must be positive");
        profits.push_back(vals[0]);
        weights.push_back(vals[1]);
    }

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    std::unordered_set<std::int64_t> seen;
    for (std::int64_t e = 0; e < m; ++e) {
        if (!reader.next(line, line_no)) parse_fail(reader.current_line(), "unexpected end of file in edge list");
        auto vals = parse_ints(line, line_no, 2);
        std::int64_t a = vals[0], b = vals[1];
        if (a < 1 || a > n || b < 1 || b > n) parse_fail(line_no, "edge index out of range");
        if (a == b) parse_fail(line_no, "self-loop on item " + std::to_string(a));
        if (a > b) std::swap(a, b);
        if (!seen.insert(a * (n + 1) + b).second)
            parse_fail(line_no, "duplicate edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (reader.next(line, line_no)) parse_fail(line_no, "trailing content after edge list");

    return Instance(static_cast<int>(n), cap, std::move(profits), std::move(weights), std::move(edges),
                    std::move(name));
}

Instance parse_instance_text(const std::string& text, std::string name) {
    std::istringstream in(text);
    return parse_instance(in, std::move(name));
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file: " + path);
    std::string stem = path;
    if (auto slash = stem.find_last_of('/'); slash != std::string::npos) stem = stem.substr(slash + 1);
    if (auto dot = stem.find_last_of('.'); dot != std::string::npos && dot > 0) stem = stem.substr(0, dot);
    return parse_instance(in, stem);
}

void serialize_instance(const Instance& inst, std::ostream& out) {
    out << inst.item_count() << ' ' << inst.edge_count() << ' ' << inst.capacity() << '\n';
    for (int i = 1; i <= inst.item_count(); ++i) out << inst.profit(i) << ' ' << inst.weight(i) << '\n';
    for (const auto& [a, b] : inst.edges()) out << a << ' ' << b << '\n';
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    serialize_instance(inst, out);
    return out.str();
}

Instance generate_instance(const GeneratorSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("generator: n must be >= 1");
    if (spec.capacity < 1) throw std::invalid_argument("generator: capacity must be >= 1");
    if (!(spec.density > 0.0 && spec.density < 1.0)) throw std::invalid_argument("generator: density must be in (0,1)");
    if (spec.weight_lo < 1 || spec.weight_lo > spec.weight_hi) throw std::invalid_argument("generator: bad weight range");
    if (!spec.shifted_profit && (spec.profit_lo < 1 || spec.profit_lo > spec.profit_hi))
        throw std::invalid_argument("generator: bad profit range");

    const std::int64_t n = spec.n;
    const std::int64_t total_pairs = n * (n - 1) / 2;
    const std::int64_t m = std::llround(spec.density * static_cast<double>(total_pairs));

    Rng rng = make_stream(spec.seed, RngStream::instance_generator);

    std::vector<weight_t> weights(static_cast<std::size_t>(n));
    std::vector<profit_t> profits(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) {
        weights[static_cast<std::size_t>(i)] = uniform_int(rng, spec.weight_lo, spec.weight_hi);
        profits[static_cast<std::size_t>(i)] = spec.shifted_profit
                                                   ? weights[static_cast<std::size_t>(i)] + spec.profit_shift
                                                   : uniform_int(rng, spec.profit_lo, spec.profit_hi);
    }

    // Exactly m distinct edges, uniform over pairs (G(n,m)). For m beyond half
    // the complete graph, sample the complement instead so rejection stays cheap.
    auto sample_pairs = [&](std::int64_t count) {
        std::unordered_set<std::int64_t> keys;
        keys.reserve(static_cast<std::size_t>(count) * 2);
        while (static_cast<std::int64_t>(keys.size()) < count) {
            std::int64_t a = uniform_int(rng, 1, n);
            std::int64_t b = uniform_int(rng, 1, n);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            keys.insert(a * (n + 1) + b);
        }
        return keys;
    };

    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    if (m <= total_pairs / 2) {
        for (std::int64_t key : sample_pairs(m))
            edges.emplace_back(static_cast<int>(key / (n + 1)), static_cast<int>(key % (n + 1)));
    } else {
        auto holes = sample_pairs(total_pairs - m);
        for (std::int64_t a = 1; a <= n; ++a)
            for (std::int64_t b = a + 1; b <= n; ++b)
                if (!holes.contains(a * (n + 1) + b)) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }

    std::string name = spec.name;
    if (name.empty()) {
        std::ostringstream tag;
        tag << "gen_n" << n << "_d" << spec.density << "_s" << spec.seed;
        name = tag.str();
    }
    return Instance(spec.n, spec.capacity, std::move(profits), std::move(weights), std::move(edges), std::move(name));
}

}  // namespace dckp
