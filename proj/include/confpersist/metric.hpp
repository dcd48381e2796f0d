#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace confpersist {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Finite metric space: point identifiers in canonical (lexicographic) order
// and a symmetric matrix of extended nonnegative reals. +inf marks
// unreachable pairs and is kept explicit so hard-sphere constructions treat
// them as always separated.
class FiniteMetricSpace {
public:
    // Validates symmetry, zero diagonal, positive off-diagonal entries and
    // the triangle inequality on all finite triples. Points are reordered
    // lexicographically; `dist` rows/cols follow `points` as given.
    static FiniteMetricSpace create(std::vector<std::string> points,
                                    std::vector<std::vector<double>> dist);

    std::size_t size() const { return points_.size(); }
    const std::vector<std::string>& points() const { return points_; }
    const std::string& point(std::size_t i) const { return points_[i]; }
    std::optional<std::size_t> index_of(const std::string& id) const;

    double dist(std::size_t i, std::size_t j) const { return d_[i * points_.size() + j]; }

private:
    std::vector<std::string> points_;
    std::vector<double> d_;
};

// Undirected graph with positive edge weights (lengths).
struct WeightedGraph {
    struct Edge {
        std::string u, v;
        double w;
    };

    std::vector<std::string> vertices;
    std::vector<Edge> edges;

    // Validates: no self-loops, positive weights, known endpoints, no
    // duplicate edges.
    void validate() const;
    bool integer_weights() const;
};

// sd(g; w): every base edge of integer weight w contributes w unit edges and
// w-1 fresh vertices; the unit graph's shortest paths restricted to original
// vertices reproduce the weighted metric of the base.
struct SubdividedGraph {
    WeightedGraph base;
    WeightedGraph unit;
};

FiniteMetricSpace shortest_path_metric(const WeightedGraph& g);

SubdividedGraph subdivide(const WeightedGraph& g);

// n equally spaced points on a circle of circumference L, geodesic distance.
FiniteMetricSpace sample_circle(std::size_t n, double L);

struct InheritanceVerdict {
    bool inherited = false;
    // Present when violated: pair with intrinsic > ambient.
    std::string witness_a, witness_b;
    double intrinsic = 0, ambient = 0;
};

// Checks whether the candidate intrinsic metric on `subset` agrees with the
// ambient metric on all pairs. intrinsic < ambient is a MetricContradiction.
// Comparisons use a relative tolerance.
InheritanceVerdict metric_inheritance_check(const FiniteMetricSpace& ambient,
                                            const std::vector<std::string>& subset,
                                            const FiniteMetricSpace& intrinsic,
                                            double rel_tol = 1e-9);

// Convenience fixtures.
WeightedGraph cycle_graph(std::size_t n, double w = 1.0);
WeightedGraph path_graph(const std::vector<std::string>& vertices,
                         const std::vector<double>& weights);

} // namespace confpersist
