#pragma once

// Test-only oracles, kept independent of the library's bit-packed and
// Smith-based code paths: dense byte matrices, Floyd-Warshall, exhaustive
// enumeration.

#include "confpersist/complex.hpp"
#include "confpersist/metric.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace confpersist::oracles {

using DenseZ2 = std::vector<std::vector<std::uint8_t>>; // row-major

inline DenseZ2 dense_boundary(const Snapshot& s, int q) {
    DenseZ2 m(s.count(q - 1), std::vector<std::uint8_t>(s.count(q), 0));
    for (std::size_t j = 0; j < s.count(q); ++j) {
        const auto& simp = s.simplex(q, j);
        for (std::size_t drop = 0; drop < simp.size(); ++drop) {
            VertTuple f;
            for (std::size_t i = 0; i < simp.size(); ++i)
                if (i != drop) f.push_back(simp[i]);
            m[static_cast<std::size_t>(s.index_of(q - 1, f))][j] ^= 1;
        }
    }
    return m;
}

inline std::size_t dense_rank(DenseZ2 m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && !m[pivot][c]) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r)
            if (r != rank && m[r][c])
                for (std::size_t cc = 0; cc < cols; ++cc) m[r][cc] ^= m[rank][cc];
        ++rank;
    }
    return rank;
}

// Betti number over Z/2 of a snapshot by dense Gaussian elimination.
inline long long dense_betti(const Snapshot& s, int q) {
    if (q < 0 || s.count(q) == 0) return 0;
    long long nq = static_cast<long long>(s.count(q));
    long long rq = q >= 1 ? static_cast<long long>(dense_rank(dense_boundary(s, q))) : 0;
    long long rq1 =
        q + 1 <= s.dim() ? static_cast<long long>(dense_rank(dense_boundary(s, q + 1))) : 0;
    return nq - rq - rq1;
}

// All-pairs shortest paths by Floyd-Warshall (the label-setting production
// path uses Dijkstra).
inline std::vector<std::vector<double>> floyd_warshall(const WeightedGraph& g) {
    const std::size_t n = g.vertices.size();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
    auto idx = [&](const std::string& name) {
        for (std::size_t i = 0; i < n; ++i)
            if (g.vertices[i] == name) return i;
        return n;
    };
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
    for (const auto& e : g.edges) {
        std::size_t u = idx(e.u), v = idx(e.v);
        d[u][v] = std::min(d[u][v], e.w);
        d[v][u] = std::min(d[v][u], e.w);
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

// Connected components via a plain flood fill over an edge list.
inline std::size_t component_count(std::size_t n,
                                   const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<bool> seen(n, false);
    std::size_t comps = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        std::vector<int> stack{static_cast<int>(s)};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj[u])
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
    }
    return comps;
}

// Exhaustive classification of Z/2 1-cochains on a small snapshot:
// which bitmasks are cocycles, and which are coboundaries of 0-cochains.
struct CochainClasses {
    std::set<std::uint64_t> cocycles;
    std::set<std::uint64_t> coboundaries;
};

inline CochainClasses classify_1_cochains(const Snapshot& s) {
    const std::size_t ne = s.count(1), nv = s.count(0), nt = s.count(2);
    CochainClasses out;
    // delta^1 rows: per triangle, the 3 edge positions.
    std::vector<std::vector<std::size_t>> tri_edges(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        const auto& tri = s.simplex(2, t);
        for (std::size_t drop = 0; drop < 3; ++drop) {
            VertTuple e;
            for (std::size_t i = 0; i < 3; ++i)
                if (i != drop) e.push_back(tri[i]);
            tri_edges[t].push_back(static_cast<std::size_t>(s.index_of(1, e)));
        }
    }
    for (std::uint64_t z = 0; z < (std::uint64_t(1) << ne); ++z) {
        bool closed = true;
        for (std::size_t t = 0; t < nt && closed; ++t) {
            int sum = 0;
            for (std::size_t e : tri_edges[t]) sum ^= static_cast<int>((z >> e) & 1);
            if (sum) closed = false;
        }
        if (closed) out.cocycles.insert(z);
    }
    for (std::uint64_t x = 0; x < (std::uint64_t(1) << nv); ++x) {
        std::uint64_t dz = 0;
        for (std::size_t e = 0; e < ne; ++e) {
            const auto& edge = s.simplex(1, e);
            int val = static_cast<int>((x >> edge[0]) & 1) ^ static_cast<int>((x >> edge[1]) & 1);
            if (val) dz |= std::uint64_t(1) << e;
        }
        out.coboundaries.insert(dz);
    }
    return out;
}

} // namespace confpersist::oracles
