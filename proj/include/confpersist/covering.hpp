#pragma once

#include "confpersist/cochain.hpp"
#include "confpersist/complex.hpp"
#include "confpersist/metric.hpp"
#include "confpersist/util.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace confpersist {

// Permutation labels on oriented edges of a base complex encoding sheet
// transport of a k!-sheeted covering. The label on (u -> v) transports the
// canonical (sorted) labeling of u to the matched labeling of v; the reverse
// edge carries the inverse.
struct CoveringCocycle {
    int k = 1;
    std::map<std::pair<int, int>, Perm> forward; // key u < v

    void set(int u, int v, const Perm& g_uv); // g on (u -> v), u != v
    Perm transport(int u, int v) const;
    bool has_edge(int u, int v) const;
};

// Finite model of the unordered k-configuration filtration: vertices are
// configurations, edges join configurations related by the unique
// small-displacement matching at proximity scale delta. Edge existence does
// not depend on r, so the r-filtration is a genuine nested family.
struct ConfigRipsComplex {
    int k = 1;
    double delta = 0;
    double r_lo = 0, r_hi = 0;
    int dim_cap = 2;

    std::vector<VertTuple> configs; // sorted point-index tuples, lex order
    std::vector<double> sep;        // separation per config

    std::vector<std::pair<int, int>> edges;         // u < v, config ids
    std::vector<std::array<int, 3>> excluded_triangles; // failed cocycle condition
    std::vector<std::vector<int>> faces_by_dim;     // dim >= 2 simplices, as config-id tuples

    // Snapshot at radius r: configs with sep > 2r and the induced faces.
    Snapshot snapshot(double r) const;

    // The same data as a filtered complex over config-id vertices, with each
    // face surviving as long as all its configurations do.
    FilteredComplex as_filtered() const;

    std::size_t excluded_count() const { return excluded_triangles.size(); }
};

// Permutation relating canonical orders when every point of `to` lies within
// delta of exactly one point of `from` and the assignment is bijective.
// Requires sep > 2*delta on both sides (GuardViolated otherwise).
std::optional<Perm> matching_bijection(const VertTuple& from, const VertTuple& to, double delta,
                                       const FiniteMetricSpace& space);

struct ConfigRipsBuild {
    ConfigRipsComplex complex;
    CoveringCocycle cocycle;
};

ConfigRipsBuild build_config_rips(const FiniteMetricSpace& space, int k, double delta,
                                  std::vector<double> r_grid, int dim_cap = 3,
                                  std::size_t budget = kDefaultBudget);

struct CoveringReport {
    bool ok = false;
    long long expected_fiber = 1; // k!
    std::size_t base_vertices = 0;
    std::size_t total_vertices = 0;
    std::size_t base_components = 0;
    std::size_t total_components = 0;
    bool fibers_uniform = false;      // every fiber has exactly k! points
    bool deck_action_free = false;    // only the identity fixes a sheet
    bool deck_action_transitive = false;
    bool projection_equivariant = false; // projection o deck = projection
    bool trivial_cover = false;       // total components == k! * base components
};

// Builds the total complex over the 1-skeleton of `base`, lifting edges via
// the cocycle, and verifies the covering facts. Throws CocycleViolation if
// the cocycle fails composability on a retained 2-simplex.
CoveringReport verify_covering(const Snapshot& base, const CoveringCocycle& g);

// Z/2 sign cochain of the cocycle on the snapshot's edges.
Cochain w1_cochain(const Snapshot& base, const CoveringCocycle& g);

// Full-complex view: sign per edge of the ConfigRipsComplex (edge order).
struct W1Cocycle {
    std::vector<std::uint8_t> sign_by_edge;
};

W1Cocycle w1(const ConfigRipsComplex& complex, const CoveringCocycle& g);

} // namespace confpersist
