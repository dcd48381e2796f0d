#include "confpersist/packing.hpp"

#include "confpersist/complex.hpp"
#include "confpersist/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace confpersist {

namespace {

PackingResult exact_packing(const FiniteMetricSpace& space, int k, std::size_t budget) {
    const int n = static_cast<int>(space.size());
    if (binomial(n, k) > budget)
        throw Error(Errc::budget_exceeded, "exact packing enumeration exceeds budget");

    double best = -1;
    VertTuple best_subset;
    VertTuple cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            double s = separation(cur, space);
            // Lexicographic enumeration: the first maximizer seen is the
            // lexicographically smallest witness.
            if (s > best) {
                best = s;
                best_subset = cur;
            }
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);

    PackingResult out;
    out.k = k;
    out.mode = PackingMode::exact;
    out.r_star = best / 2;
    for (int v : best_subset) out.witness.push_back(space.point(v));
    return out;
}

PackingResult greedy_packing(const FiniteMetricSpace& space, int k, std::uint64_t seed) {
    const int n = static_cast<int>(space.size());
    std::vector<int> starts(n);
    std::iota(starts.begin(), starts.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(starts.begin(), starts.end(), rng);

    double best = -1;
    VertTuple best_subset;
    for (int s0 : starts) {
        VertTuple chosen{s0};
        std::vector<double> mind(n);
        for (int v = 0; v < n; ++v) mind[v] = space.dist(s0, v);
        while (static_cast<int>(chosen.size()) < k) {
            int pick = -1;
            double pd = -1;
            for (int v = 0; v < n; ++v) {
                bool taken = std::find(chosen.begin(), chosen.end(), v) != chosen.end();
                if (taken) continue;
                if (mind[v] > pd) {
                    pd = mind[v];
                    pick = v;
                }
            }
            chosen.push_back(pick);
            for (int v = 0; v < n; ++v) mind[v] = std::min(mind[v], space.dist(pick, v));
        }
        std::sort(chosen.begin(), chosen.end());
        double s = separation(chosen, space);
        if (s > best || (s == best && chosen < best_subset)) {
            best = s;
            best_subset = chosen;
        }
    }

    PackingResult out;
    out.k = k;
    out.mode = PackingMode::greedy;
    out.lower_bound_only = true;
    out.r_star = best / 2;
    for (int v : best_subset) out.witness.push_back(space.point(v));
    return out;
}

} // namespace

PackingResult max_packing_radius(const FiniteMetricSpace& space, int k, PackingMode mode,
                                 std::size_t budget, std::uint64_t seed) {
    if (k < 1) throw Error(Errc::invalid_input, "k must be >= 1");
    if (static_cast<std::size_t>(k) > space.size())
        throw Error(Errc::k_too_large, "k exceeds the number of points");
    return mode == PackingMode::exact ? exact_packing(space, k, budget)
                                      : greedy_packing(space, k, seed);
}

bool conf_nonempty(const FiniteMetricSpace& space, int k, double r, std::size_t budget) {
    if (k < 1) throw Error(Errc::invalid_input, "k must be >= 1");
    if (static_cast<std::size_t>(k) > space.size()) return false;
    PackingResult p = max_packing_radius(space, k, PackingMode::exact, budget);
    return r < p.r_star;
}

} // namespace confpersist
