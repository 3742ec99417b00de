#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dckp {

// Two-sided Wilcoxon signed-rank test over paired samples. Zero differences
// are dropped and tied absolute differences receive averaged ranks. With up
// to 30 non-zero differences the p-value comes from the exact null
// distribution (subset-sum counting over doubled ranks, so ties stay exact);
// larger samples use the normal approximation with tie and continuity
// corrections. All-zero differences are the distinct "NA" outcome, not a
// number.
struct WilcoxonResult {
    enum class Status { ok, identical };
    Status status = Status::ok;
    double w = 0.0;       // min(w_plus, w_minus)
    double w_plus = 0.0;  // rank sum of positive differences (first minus second)
    double w_minus = 0.0;
    double p_value = 1.0;
    int n_nonzero = 0;
    bool exact = false;
};

WilcoxonResult wilcoxon_signed_rank(const std::vector<std::pair<double, double>>& pairs);

// One (instance, solver) objective cell of a results table.
struct ProfileCell {
    std::string instance;
    std::string solver;
    double f = 0.0;
};

// Performance-profile step curve of one solver: cumulative fraction of
// instances whose quality ratio is within tau.
struct ProfileCurve {
    std::string solver;
    std::vector<std::pair<double, double>> points;  // (tau, rho), tau ascending
};

// For maximization the ratio of solver s on instance p is
// max_s f_{p,s} / f_{p,s} >= 1, so rho_s(1) is the fraction of instances
// where s attains the best value. literal_ratio instead divides by the
// minimum (f_{p,s} / min_s f_{p,s}), for comparison experiments only.
// Throws on a missing or duplicate (instance, solver) cell or non-positive f.
std::vector<ProfileCurve> performance_profiles(const std::vector<ProfileCell>& cells,
                                               bool literal_ratio = false);

}  // namespace dckp
