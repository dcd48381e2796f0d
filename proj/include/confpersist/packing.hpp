#pragma once

#include "confpersist/metric.hpp"
#include "confpersist/util.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace confpersist {

enum class PackingMode { exact, greedy };

struct PackingResult {
    int k = 1;
    double r_star = 0; // max over k-subsets of sep/2; Conf_k nonempty iff r < r_star
    std::vector<std::string> witness;
    PackingMode mode = PackingMode::exact;
    bool lower_bound_only = false; // greedy results are lower bounds
};

// Exact mode enumerates all k-subsets and maximizes the minimum pairwise
// distance, breaking ties by the lexicographically smallest witness. Greedy
// mode runs farthest-point insertion from every start (order shuffled by
// `seed`) and is labeled a lower bound.
PackingResult max_packing_radius(const FiniteMetricSpace& space, int k, PackingMode mode,
                                 std::size_t budget = kDefaultBudget,
                                 std::uint64_t seed = 0);

// Conf_k(X, r) is nonempty exactly when r < r_star (strict).
bool conf_nonempty(const FiniteMetricSpace& space, int k, double r,
                   std::size_t budget = kDefaultBudget);

} // namespace confpersist
