#pragma once

#include "confpersist/cochain.hpp"
#include "confpersist/complex.hpp"
#include "confpersist/covering.hpp"
#include "confpersist/metric.hpp"

#include <random>
#include <vector>

namespace confpersist::fixtures {

// Minimal 6-vertex triangulation of the projective plane: 10 triangles on
// the complete 1-skeleton, every edge in exactly two triangles.
inline Snapshot projective_plane6() {
    static const int tris[10][3] = {{0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5}, {0, 4, 5},
                                    {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5}};
    Snapshot s;
    for (int v = 0; v < 6; ++v) s.add_simplex({v});
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) s.add_simplex({u, v});
    for (const auto& t : tris) s.add_simplex({t[0], t[1], t[2]});
    s.finalize();
    return s;
}

// Sign cocycle generating H^1(RP^2; Z/2), realized as a 2-sheeted covering
// cocycle: edges with sign 1 carry the transposition.
inline std::pair<Snapshot, CoveringCocycle> projective_plane6_cover() {
    Snapshot s = projective_plane6();
    // Kernel of delta^1 modulo coboundaries has one nontrivial class; find a
    // representative by scanning coordinate cocycles and their sums.
    Cochain gen = Cochain::zero(s, 1, Ring::Z2);
    bool found = false;
    const std::size_t n_edges = s.count(1);
    for (std::size_t seed = 1; seed < (std::size_t(1) << n_edges) && !found; ++seed) {
        Cochain z = Cochain::zero(s, 1, Ring::Z2);
        for (std::size_t i = 0; i < n_edges; ++i) z.c[i] = (seed >> i) & 1;
        if (!is_cocycle(z, s)) continue;
        if (!is_coboundary(z, s).coboundary) {
            gen = z;
            found = true;
        }
    }
    CoveringCocycle g;
    g.k = 2;
    const auto& edges = s.simplices(1);
    for (std::size_t i = 0; i < edges.size(); ++i)
        g.set(edges[i][0], edges[i][1], gen.c[i] ? Perm{1, 0} : Perm{0, 1});
    return {s, g};
}

// Metric with exactly two admissible pairs at r = 1: {a,b} and {c,d} are
// far apart internally, every cross pair is too close.
inline FiniteMetricSpace two_far_pairs() {
    std::vector<std::string> ids{"a", "b", "c", "d"};
    std::vector<std::vector<double>> d(4, std::vector<double>(4, 2.0));
    for (int i = 0; i < 4; ++i) d[i][i] = 0;
    d[0][1] = d[1][0] = 3.0; // a-b
    d[2][3] = d[3][2] = 3.0; // c-d
    return FiniteMetricSpace::create(ids, d);
}

// Metric on six points where the three pair-configurations {a,b}, {c,d},
// {e,f} are pairwise matched at delta = 1 but the transports fail to
// compose: u->v and v->w are identities while u->w crosses. The triangle
// must be excluded and logged.
inline FiniteMetricSpace cocycle_breaker() {
    std::vector<std::string> ids{"a", "b", "c", "d", "e", "f"};
    auto at = [&](char c) { return static_cast<std::size_t>(c - 'a'); };
    std::vector<std::vector<double>> d(6, std::vector<double>(6, 2.0));
    for (int i = 0; i < 6; ++i) d[i][i] = 0;
    auto set = [&](char x, char y, double v) { d[at(x)][at(y)] = d[at(y)][at(x)] = v; };
    set('a', 'b', 2.5);
    set('c', 'd', 2.5);
    set('e', 'f', 2.5);
    set('a', 'c', 1);
    set('b', 'd', 1);
    set('c', 'e', 1);
    set('d', 'f', 1);
    set('a', 'f', 1); // the u->w matching crosses
    set('b', 'e', 1);
    return FiniteMetricSpace::create(ids, d);
}

// Uniformly random connected-ish weighted graph on n vertices: a random
// spanning tree plus extra edges, weights in 1..max_w.
inline WeightedGraph random_weighted_graph(std::mt19937_64& rng, int n, int max_w,
                                           bool integer_weights = true) {
    WeightedGraph g;
    int width = n > 10 ? 2 : 1;
    for (int i = 0; i < n; ++i) {
        std::string s = std::to_string(i);
        g.vertices.push_back("v" + std::string(width - static_cast<int>(s.size()), '0') + s);
    }
    std::uniform_int_distribution<int> wdist(1, max_w);
    std::uniform_real_distribution<double> fdist(0.5, max_w);
    auto weight = [&]() {
        return integer_weights ? static_cast<double>(wdist(rng)) : fdist(rng);
    };
    for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> pick(0, i - 1);
        g.edges.push_back({g.vertices[pick(rng)], g.vertices[i], weight()});
    }
    std::uniform_int_distribution<int> extra(0, n - 1);
    int added = 0;
    while (added < n / 2) {
        int u = extra(rng), v = extra(rng);
        if (u == v) continue;
        bool dup = false;
        for (const auto& e : g.edges)
            if ((e.u == g.vertices[u] && e.v == g.vertices[v]) ||
                (e.u == g.vertices[v] && e.v == g.vertices[u]))
                dup = true;
        if (dup) {
            ++added;
            continue;
        }
        g.edges.push_back({g.vertices[u], g.vertices[v], weight()});
        ++added;
    }
    g.validate();
    return g;
}

} // namespace confpersist::fixtures
