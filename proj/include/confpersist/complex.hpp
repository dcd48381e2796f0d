#pragma once

#include "confpersist/gf2.hpp"
#include "confpersist/metric.hpp"
#include "confpersist/smith.hpp"
#include "confpersist/util.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace confpersist {

using VertTuple = std::vector<int>; // strictly increasing vertex ids

// Fixed-scale simplicial complex: simplices grouped by dimension, each list
// sorted lexicographically. Vertex ids are global (not reindexed), which
// keeps cochains comparable across nested snapshots.
class Snapshot {
public:
    Snapshot() = default;
    explicit Snapshot(double scale_r) : scale_(scale_r), has_scale_(true) {}

    void add_simplex(VertTuple verts); // verts must be sorted and distinct
    void finalize();                   // sorts lists, builds index, checks closure

    int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
    std::size_t count(int q) const {
        return (q >= 0 && q <= dim()) ? by_dim_[q].size() : 0;
    }
    const std::vector<VertTuple>& simplices(int q) const {
        static const std::vector<VertTuple> empty;
        return (q >= 0 && q <= dim()) ? by_dim_[q] : empty;
    }
    const VertTuple& simplex(int q, std::size_t i) const { return by_dim_[q][i]; }
    long long index_of(int q, const VertTuple& verts) const; // -1 if absent

    bool has_scale() const { return has_scale_; }
    double scale() const { return scale_; }

    // Boundary C_q -> C_{q-1} over Z/2 (column j = faces of simplex j).
    Gf2Mat boundary_z2(int q) const;
    // Coboundary on cochains, delta: C^{q-1} -> C^q over Z/2.
    Gf2Mat coboundary_z2(int q) const;
    // Signed versions for integral (co)homology; orientation = increasing
    // vertex order.
    IntMat boundary_z(int q) const;
    IntMat coboundary_z(int q) const;

    bool same_shape(const Snapshot& o) const;

private:
    std::vector<std::vector<VertTuple>> by_dim_;
    std::vector<std::map<VertTuple, std::size_t>> index_;
    double scale_ = 0;
    bool has_scale_ = false;
    bool finalized_ = false;
};

enum class FiltrationSemantics { hard_sphere_r, config_rips_r };

struct FilteredSimplex {
    VertTuple verts;
    double sep; // survives for r < sep/2
};

// Simplicial complex whose simplices carry hard-sphere separation values.
// A simplex is present at parameter r exactly when sep > 2r.
class FilteredComplex {
public:
    FilteredComplex(int dim_cap, FiltrationSemantics sem)
        : dim_cap_(dim_cap), semantics_(sem) {}

    void add(VertTuple verts, double sep);
    void finalize(); // canonical order + monotonicity check

    int dim_cap() const { return dim_cap_; }
    FiltrationSemantics semantics() const { return semantics_; }
    const std::vector<FilteredSimplex>& simplices() const { return simplices_; }
    std::size_t size() const { return simplices_.size(); }

    // Distinct finite values of sep/2, descending.
    std::vector<double> critical_radii() const;

    Snapshot snapshot(double r) const;

    // Checks sep(face) >= sep(coface) for every codimension-1 face.
    bool monotone() const;

private:
    int dim_cap_;
    FiltrationSemantics semantics_;
    std::vector<FilteredSimplex> simplices_;
    std::map<VertTuple, std::size_t> index_;
    bool finalized_ = false;
};

// Graded Z/2 chain complex of a fixed-scale snapshot: basis per degree plus
// boundary matrices, with boundary-of-boundary equal to zero.
struct ChainComplexZ2 {
    std::vector<std::vector<VertTuple>> basis; // basis[q] = q-simplices
    std::vector<Gf2Mat> boundary;              // boundary[q]: C_q -> C_{q-1}

    static ChainComplexZ2 of(const Snapshot& snap);
    bool boundary_squared_is_zero() const;
};

// sep(c): minimum pairwise distance within the configuration; +inf for
// singletons (Conf_1 = X at every radius).
double separation(std::span<const int> verts, const FiniteMetricSpace& space);

// All subsets of size <= k_max as simplices with filtration value sep/2.
// The (k-1)-simplices present at parameter r are exactly the unordered
// k-configurations at radius r.
FilteredComplex build_independence_filtration(const FiniteMetricSpace& space, int k_max,
                                              std::size_t budget = kDefaultBudget);

// --- ordered configurations -------------------------------------------------

using OrderedConfig = std::vector<int>; // distinct vertex ids, arbitrary order
using Perm = std::vector<int>;          // perm[i] = image of letter i (0-based)

// Deletes the i-th coordinate, i in 1..k.
OrderedConfig face_map(int i, const OrderedConfig& c);

// Coordinate permutation: result[i] = c[perm[i]].
OrderedConfig sigma_action(const Perm& perm, const OrderedConfig& c);

Perm perm_identity(int k);
Perm perm_compose(const Perm& f, const Perm& g); // (f o g)[i] = f[g[i]]
Perm perm_inverse(const Perm& p);
int perm_sign(const Perm& p); // 0 even, 1 odd
std::vector<Perm> all_perms(int k);

// Ordered configurations of size k at radius r, lexicographically sorted.
std::vector<OrderedConfig> enumerate_ordered_configs(const FiniteMetricSpace& space, int k,
                                                     double r,
                                                     std::size_t budget = kDefaultBudget);

// Matrix of the alternating-sum point-deletion map
// C(Conf_k(X,r)) -> C(Conf_{k-1}(X,r)); face i carries sign (-1)^(i-1).
// Rows are indexed by the (k-1)-configurations, columns by k-configurations,
// both in the order produced by enumerate_ordered_configs.
IntMat configuration_boundary(int k, double r, const FiniteMetricSpace& space,
                              std::size_t budget = kDefaultBudget);

// Inclusion-induced matrix C(Conf_k(X,r_from)) -> C(Conf_k(X,r_to)) for
// r_to <= r_from.
IntMat configuration_inclusion(int k, double r_from, double r_to,
                               const FiniteMetricSpace& space,
                               std::size_t budget = kDefaultBudget);

} // namespace confpersist
