#include "dckp/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dckp {

namespace {

double normal_two_sided_p(double z) {
    return std::erfc(std::fabs(z) / std::sqrt(2.0));
}

}  // namespace

WilcoxonResult wilcoxon_signed_rank(const std::vector<std::pair<double, double>>& pairs) {
    std::vector<double> diffs;
    diffs.reserve(pairs.size());
    for (const auto& [a, b] : pairs)
        if (a != b) diffs.push_back(a - b);

    WilcoxonResult result;
    result.n_nonzero = static_cast<int>(diffs.size());
    if (diffs.empty()) {
        result.status = WilcoxonResult::Status::identical;
        return result;
    }

    // Average ranks of |d|, doubled so tied ranks stay integral.
    const std::size_t n = diffs.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](std::size_t x, std::size_t y) { return std::fabs(diffs[x]) < std::fabs(diffs[y]); });
    std::vector<std::int64_t> rank2(n);
    std::vector<std::size_t> tie_sizes;
    for (std::size_t lo = 0; lo < n;) {
        std::size_t hi = lo + 1;
        while (hi < n && std::fabs(diffs[idx[hi]]) == std::fabs(diffs[idx[lo]])) ++hi;
        // ranks lo+1 .. hi averaged; doubled average = (lo+1) + hi
        std::int64_t doubled = static_cast<std::int64_t>(lo + 1 + hi);
        for (std::size_t k = lo; k < hi; ++k) rank2[idx[k]] = doubled;
        tie_sizes.push_back(hi - lo);
        lo = hi;
    }

    std::int64_t w_plus2 = 0, w_minus2 = 0;
    for (std::size_t k = 0; k < n; ++k) (diffs[k] > 0 ? w_plus2 : w_minus2) += rank2[k];
    result.w_plus = static_cast<double>(w_plus2) / 2.0;
    result.w_minus = static_cast<double>(w_minus2) / 2.0;
    result.w = std::min(result.w_plus, result.w_minus);

    if (n <= 30) {
        // Exact null distribution of the doubled positive rank sum: count the
        // subset sums of rank2 (2^n assignments in total).
        result.exact = true;
        const std::int64_t total2 = std::accumulate(rank2.begin(), rank2.end(), std::int64_t{0});
        std::vector<std::uint64_t> count(static_cast<std::size_t>(total2) + 1, 0);
        count[0] = 1;
        for (std::size_t k = 0; k < n; ++k)
            for (std::int64_t s = total2; s >= rank2[k]; --s)
                count[static_cast<std::size_t>(s)] += count[static_cast<std::size_t>(s - rank2[k])];
        const double denom = std::ldexp(1.0, static_cast<int>(n));  // 2^n
        auto tail = [&](std::int64_t limit2, bool lower) {
            std::uint64_t c = 0;
            for (std::int64_t s = 0; s <= total2; ++s)
                if (lower ? s <= limit2 : s >= limit2) c += count[static_cast<std::size_t>(s)];
            return static_cast<double>(c) / denom;
        };
        double p_low = tail(w_plus2, true);
        double p_high = tail(w_plus2, false);
        result.p_value = std::min(1.0, 2.0 * std::min(p_low, p_high));
    } else {
        const double nd = static_cast<double>(n);
        const double mean = nd * (nd + 1.0) / 4.0;
        double tie_term = 0.0;
        for (std::size_t t : tie_sizes) {
            double td = static_cast<double>(t);
            tie_term += td * td * td - td;
        }
        const double var = nd * (nd + 1.0) * (2.0 * nd + 1.0) / 24.0 - tie_term / 48.0;
        double delta = result.w_plus - mean;
        // continuity correction toward the mean
        if (delta > 0.5) delta -= 0.5;
        else if (delta < -0.5) delta += 0.5;
        else delta = 0.0;
        result.p_value = var > 0 ? normal_two_sided_p(delta / std::sqrt(var)) : 1.0;
    }
    return result;
}

std::vector<ProfileCurve> performance_profiles(const std::vector<ProfileCell>& cells, bool literal_ratio) {
    if (cells.empty()) throw std::invalid_argument("performance_profiles: empty results table");

    std::set<std::string> instances, solvers;
    std::map<std::pair<std::string, std::string>, double> table;
    for (const auto& cell : cells) {
        if (!(cell.f > 0)) throw std::invalid_argument("performance_profiles: non-positive objective for " +
                                                       cell.instance + "/" + cell.solver);
        if (!table.emplace(std::make_pair(cell.instance, cell.solver), cell.f).second)
            throw std::invalid_argument("performance_profiles: duplicate cell " + cell.instance + "/" +
                                        cell.solver);
        instances.insert(cell.instance);
        solvers.insert(cell.solver);
    }
    for (const auto& p : instances)
        for (const auto& s : solvers)
            if (!table.contains({p, s}))
                throw std::invalid_argument("performance_profiles: missing cell " + p + "/" + s);

    std::map<std::string, double> reference;  // per instance: max (or min) over solvers
    for (const auto& p : instances) {
        double best = table[{p, *solvers.begin()}];
        for (const auto& s : solvers) {
            double f = table[{p, s}];
            best = literal_ratio ? std::min(best, f) : std::max(best, f);
        }
        reference[p] = best;
    }

    std::vector<ProfileCurve> curves;
    const double count = static_cast<double>(instances.size());
    for (const auto& s : solvers) {
        std::vector<double> ratios;
        ratios.reserve(instances.size());
        for (const auto& p : instances) {
            double f = table[{p, s}];
            ratios.push_back(literal_ratio ? f / reference[p] : reference[p] / f);
        }
        std::sort(ratios.begin(), ratios.end());
        ProfileCurve curve{s, {}};
        for (std::size_t k = 0; k < ratios.size(); ++k) {
            if (k + 1 < ratios.size() && ratios[k + 1] == ratios[k]) continue;
            curve.points.emplace_back(ratios[k], static_cast<double>(k + 1) / count);
        }
        curves.push_back(std::move(curve));
    }
    return curves;
}

}  // namespace dckp
