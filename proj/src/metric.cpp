#include "confpersist/metric.hpp"

#include "confpersist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>

namespace confpersist {

namespace {

constexpr double kRelTol = 1e-9;

bool tri_violated(double dik, double dij, double djk) {
    if (std::isinf(dij) || std::isinf(djk)) return false;
    if (std::isinf(dik)) return true; // finite detour beats an infinite direct entry
    double slack = kRelTol * std::max({1.0, dik, dij + djk});
    return dik > dij + djk + slack;
}

} // namespace

FiniteMetricSpace FiniteMetricSpace::create(std::vector<std::string> points,
                                            std::vector<std::vector<double>> dist) {
    const std::size_t n = points.size();
    if (dist.size() != n)
        throw Error(Errc::invalid_input, "distance matrix row count != point count");
    for (const auto& row : dist)
        if (row.size() != n)
            throw Error(Errc::invalid_input, "distance matrix is not square");

    // Canonical order is lexicographic on identifiers.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (points[order[i]] == points[order[i + 1]])
            throw Error(Errc::invalid_input, "duplicate point id '" + points[order[i]] + "'");

    FiniteMetricSpace s;
    s.points_.reserve(n);
    for (std::size_t i : order) s.points_.push_back(points[i]);
    s.d_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s.d_[i * n + j] = dist[order[i]][order[j]];

    for (std::size_t i = 0; i < n; ++i) {
        if (s.d_[i * n + i] != 0.0)
            throw Error(Errc::invalid_input, "nonzero diagonal at '" + s.points_[i] + "'");
        for (std::size_t j = i + 1; j < n; ++j) {
            double dij = s.d_[i * n + j];
            if (std::isnan(dij) || dij < 0)
                throw Error(Errc::invalid_input, "negative or NaN distance");
            if (dij != s.d_[j * n + i])
                throw Error(Errc::invalid_input, "asymmetric distance matrix");
            if (dij == 0.0)
                throw Error(Errc::invalid_input, "zero off-diagonal distance between '" +
                                                     s.points_[i] + "' and '" + s.points_[j] + "'");
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (tri_violated(s.d_[i * n + k], s.d_[i * n + j], s.d_[j * n + k]))
                    throw Error(Errc::invalid_input,
                                "triangle inequality violated on (" + s.points_[i] + "," +
                                    s.points_[j] + "," + s.points_[k] + ")");
    return s;
}

std::optional<std::size_t> FiniteMetricSpace::index_of(const std::string& id) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), id);
    if (it == points_.end() || *it != id) return std::nullopt;
    return static_cast<std::size_t>(it - points_.begin());
}

void WeightedGraph::validate() const {
    std::set<std::string> seen(vertices.begin(), vertices.end());
    if (seen.size() != vertices.size())
        throw Error(Errc::invalid_input, "duplicate vertex id");
    std::set<std::pair<std::string, std::string>> edge_seen;
    for (const auto& e : edges) {
        if (e.u == e.v) throw Error(Errc::invalid_input, "self-loop at '" + e.u + "'");
        if (!seen.count(e.u) || !seen.count(e.v))
            throw Error(Errc::invalid_input, "edge endpoint not in vertex list");
        if (!(e.w > 0)) throw Error(Errc::invalid_input, "non-positive edge weight");
        auto key = std::minmax(e.u, e.v);
        if (!edge_seen.insert(key).second)
            throw Error(Errc::invalid_input, "duplicate edge {" + e.u + "," + e.v + "}");
    }
}

bool WeightedGraph::integer_weights() const {
    for (const auto& e : edges)
        if (e.w != std::floor(e.w) || e.w < 1) return false;
    return true;
}

namespace {

// Dijkstra with a generic weight type; Dist = long long gives exact results
// for integer weights, Dist = double otherwise.
template <typename Dist>
std::vector<Dist> dijkstra(std::size_t n,
                           const std::vector<std::vector<std::pair<std::size_t, Dist>>>& adj,
                           std::size_t src, Dist inf) {
    std::vector<Dist> d(n, inf);
    d[src] = 0;
    using Item = std::pair<Dist, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    pq.push({Dist(0), src});
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du > d[u]) continue;
        for (auto [v, w] : adj[u]) {
            Dist nd = du + w;
            if (nd < d[v]) {
                d[v] = nd;
                pq.push({nd, v});
            }
        }
    }
    return d;
}

} // namespace

FiniteMetricSpace shortest_path_metric(const WeightedGraph& g) {
    g.validate();
    const std::size_t n = g.vertices.size();
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) idx[g.vertices[i]] = i;

    std::vector<std::vector<double>> dist(n, std::vector<double>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) dist[i][i] = 0;

    if (g.integer_weights()) {
        // Exact arithmetic: integer weights sum to integers.
        std::vector<std::vector<std::pair<std::size_t, long long>>> adj(n);
        for (const auto& e : g.edges) {
            auto w = static_cast<long long>(e.w);
            adj[idx[e.u]].push_back({idx[e.v], w});
            adj[idx[e.v]].push_back({idx[e.u], w});
        }
        const long long linf = std::numeric_limits<long long>::max() / 4;
        for (std::size_t s = 0; s < n; ++s) {
            auto d = dijkstra<long long>(n, adj, s, linf);
            for (std::size_t t = 0; t < n; ++t)
                if (d[t] < linf) dist[s][t] = static_cast<double>(d[t]);
        }
    } else {
        std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
        for (const auto& e : g.edges) {
            adj[idx[e.u]].push_back({idx[e.v], e.w});
            adj[idx[e.v]].push_back({idx[e.u], e.w});
        }
        for (std::size_t s = 0; s < n; ++s) {
            auto d = dijkstra<double>(n, adj, s, kInf);
            for (std::size_t t = 0; t < n; ++t) dist[s][t] = d[t];
        }
        // Path sums round differently per direction; symmetrize.
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t t = s + 1; t < n; ++t)
                dist[s][t] = dist[t][s] = std::min(dist[s][t], dist[t][s]);
    }
    return FiniteMetricSpace::create(g.vertices, dist);
}

SubdividedGraph subdivide(const WeightedGraph& g) {
    g.validate();
    for (const auto& e : g.edges)
        if (e.w != std::floor(e.w) || e.w < 1)
            throw Error(Errc::non_integer_weight,
                        "edge {" + e.u + "," + e.v + "} has weight " + std::to_string(e.w));

    SubdividedGraph out;
    out.base = g;
    out.unit.vertices = g.vertices;
    for (const auto& e : g.edges) {
        auto [lo, hi] = std::minmax(e.u, e.v);
        auto w = static_cast<long long>(e.w);
        std::string prev = lo;
        for (long long i = 1; i < w; ++i) {
            std::string mid = lo + "~" + hi + "~" + std::to_string(i);
            out.unit.vertices.push_back(mid);
            out.unit.edges.push_back({prev, mid, 1.0});
            prev = mid;
        }
        out.unit.edges.push_back({prev, hi, 1.0});
    }
    out.unit.validate();
    return out;
}

FiniteMetricSpace sample_circle(std::size_t n, double L) {
    if (n < 1 || !(L > 0)) throw Error(Errc::invalid_input, "need n >= 1 and L > 0");
    int width = 1;
    for (std::size_t v = n > 0 ? n - 1 : 0; v >= 10; v /= 10) ++width;
    std::vector<std::string> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string s = std::to_string(i);
        pts[i] = "p" + std::string(width - s.size(), '0') + s;
    }
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t gap = i > j ? i - j : j - i;
            std::size_t arc = std::min(gap, n - gap);
            dist[i][j] = L * static_cast<double>(arc) / static_cast<double>(n);
        }
    return FiniteMetricSpace::create(pts, dist);
}

InheritanceVerdict metric_inheritance_check(const FiniteMetricSpace& ambient,
                                            const std::vector<std::string>& subset,
                                            const FiniteMetricSpace& intrinsic,
                                            double rel_tol) {
    if (intrinsic.size() != subset.size())
        throw Error(Errc::invalid_input, "intrinsic metric size != subset size");
    std::vector<std::size_t> amb_idx(subset.size()), int_idx(subset.size());
    for (std::size_t i = 0; i < subset.size(); ++i) {
        auto a = ambient.index_of(subset[i]);
        auto b = intrinsic.index_of(subset[i]);
        if (!a) throw Error(Errc::invalid_input, "subset point '" + subset[i] + "' not in ambient");
        if (!b) throw Error(Errc::invalid_input, "subset point '" + subset[i] + "' not in intrinsic");
        amb_idx[i] = *a;
        int_idx[i] = *b;
    }
    InheritanceVerdict v;
    v.inherited = true;
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i + 1; j < subset.size(); ++j) {
            double da = ambient.dist(amb_idx[i], amb_idx[j]);
            double di = intrinsic.dist(int_idx[i], int_idx[j]);
            if (di == da) continue;
            double slack = rel_tol * std::max({1.0, da, di});
            if (di < da - slack)
                throw Error(Errc::metric_contradiction,
                            "intrinsic " + std::to_string(di) + " < ambient " +
                                std::to_string(da) + " on (" + subset[i] + "," + subset[j] + ")");
            if (di > da + slack && v.inherited) {
                v.inherited = false;
                v.witness_a = subset[i];
                v.witness_b = subset[j];
                v.intrinsic = di;
                v.ambient = da;
            }
        }
    return v;
}

WeightedGraph cycle_graph(std::size_t n, double w) {
    WeightedGraph g;
    int width = 1;
    for (std::size_t v = n > 0 ? n - 1 : 0; v >= 10; v /= 10) ++width;
    for (std::size_t i = 0; i < n; ++i) {
        std::string s = std::to_string(i);
        g.vertices.push_back("v" + std::string(width - s.size(), '0') + s);
    }
    for (std::size_t i = 0; i < n; ++i)
        g.edges.push_back({g.vertices[i], g.vertices[(i + 1) % n], w});
    if (n == 2) g.edges.pop_back(); // avoid the duplicate edge of a 2-cycle
    if (n == 1) g.edges.clear();
    g.validate();
    return g;
}

WeightedGraph path_graph(const std::vector<std::string>& vertices,
                         const std::vector<double>& weights) {
    if (vertices.size() != weights.size() + 1)
        throw Error(Errc::invalid_input, "path needs |V| = |W|+1");
    WeightedGraph g;
    g.vertices = vertices;
    for (std::size_t i = 0; i < weights.size(); ++i)
        g.edges.push_back({vertices[i], vertices[i + 1], weights[i]});
    g.validate();
    return g;
}

} // namespace confpersist
