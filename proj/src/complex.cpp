#include "confpersist/complex.hpp"

#include "confpersist/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace confpersist {

void Snapshot::add_simplex(VertTuple verts) {
    if (verts.empty()) throw Error(Errc::invalid_input, "empty simplex");
    if (!std::is_sorted(verts.begin(), verts.end()) ||
        std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw Error(Errc::invalid_input, "simplex vertices must be sorted and distinct");
    int q = static_cast<int>(verts.size()) - 1;
    if (q >= static_cast<int>(by_dim_.size())) by_dim_.resize(q + 1);
    by_dim_[q].push_back(std::move(verts));
    finalized_ = false;
}

void Snapshot::finalize() {
    index_.assign(by_dim_.size(), {});
    for (std::size_t q = 0; q < by_dim_.size(); ++q) {
        std::sort(by_dim_[q].begin(), by_dim_[q].end());
        by_dim_[q].erase(std::unique(by_dim_[q].begin(), by_dim_[q].end()), by_dim_[q].end());
        for (std::size_t i = 0; i < by_dim_[q].size(); ++i)
            index_[q][by_dim_[q][i]] = i;
    }
    // Closure under faces.
    for (std::size_t q = 1; q < by_dim_.size(); ++q)
        for (const auto& s : by_dim_[q])
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                VertTuple f;
                f.reserve(s.size() - 1);
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) f.push_back(s[i]);
                if (!index_[q - 1].count(f))
                    throw Error(Errc::invalid_input, "complex not closed under faces");
            }
    finalized_ = true;
}

long long Snapshot::index_of(int q, const VertTuple& verts) const {
    if (q < 0 || q >= static_cast<int>(index_.size())) return -1;
    auto it = index_[q].find(verts);
    return it == index_[q].end() ? -1 : static_cast<long long>(it->second);
}

Gf2Mat Snapshot::boundary_z2(int q) const {
    assert(finalized_);
    Gf2Mat m(count(q - 1), count(q));
    if (q <= 0 || q > dim()) return m;
    for (std::size_t j = 0; j < by_dim_[q].size(); ++j) {
        const auto& s = by_dim_[q][j];
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            VertTuple f;
            f.reserve(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) f.push_back(s[i]);
            m.set(static_cast<std::size_t>(index_of(q - 1, f)), j, true);
        }
    }
    return m;
}

Gf2Mat Snapshot::coboundary_z2(int q) const {
    Gf2Mat b = boundary_z2(q);
    Gf2Mat d(b.cols(), b.rows()); // delta: C^{q-1} -> C^q
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (b.get(i, j)) d.set(j, i, true);
    return d;
}

IntMat Snapshot::boundary_z(int q) const {
    assert(finalized_);
    IntMat m(count(q - 1), count(q));
    if (q <= 0 || q > dim()) return m;
    for (std::size_t j = 0; j < by_dim_[q].size(); ++j) {
        const auto& s = by_dim_[q][j];
        long long sign = 1;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            VertTuple f;
            f.reserve(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) f.push_back(s[i]);
            m.at(static_cast<std::size_t>(index_of(q - 1, f)), j) = sign;
            sign = -sign;
        }
    }
    return m;
}

IntMat Snapshot::coboundary_z(int q) const {
    IntMat b = boundary_z(q);
    IntMat d(b.cols, b.rows);
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j)
            d.at(j, i) = b.at(i, j);
    return d;
}

bool Snapshot::same_shape(const Snapshot& o) const {
    return by_dim_ == o.by_dim_;
}

void FilteredComplex::add(VertTuple verts, double sep) {
    if (static_cast<int>(verts.size()) - 1 > dim_cap_)
        throw Error(Errc::invalid_input, "simplex above dim_cap");
    if (!std::is_sorted(verts.begin(), verts.end()) ||
        std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        throw Error(Errc::invalid_input, "simplex vertices must be sorted and distinct");
    if (index_.count(verts)) throw Error(Errc::invalid_input, "duplicate simplex");
    index_[verts] = simplices_.size();
    simplices_.push_back({std::move(verts), sep});
    finalized_ = false;
}

void FilteredComplex::finalize() {
    std::sort(simplices_.begin(), simplices_.end(),
              [](const FilteredSimplex& a, const FilteredSimplex& b) {
                  if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
                  return a.verts < b.verts;
              });
    index_.clear();
    for (std::size_t i = 0; i < simplices_.size(); ++i) index_[simplices_[i].verts] = i;
    if (!monotone())
        throw Error(Errc::non_monotone_filtration, "face separation below coface separation");
    finalized_ = true;
}

bool FilteredComplex::monotone() const {
    for (const auto& s : simplices_) {
        if (s.verts.size() == 1) continue;
        for (std::size_t drop = 0; drop < s.verts.size(); ++drop) {
            VertTuple f;
            f.reserve(s.verts.size() - 1);
            for (std::size_t i = 0; i < s.verts.size(); ++i)
                if (i != drop) f.push_back(s.verts[i]);
            auto it = index_.find(f);
            if (it == index_.end()) return false;
            if (simplices_[it->second].sep < s.sep) return false;
        }
    }
    return true;
}

std::vector<double> FilteredComplex::critical_radii() const {
    std::vector<double> vals;
    for (const auto& s : simplices_)
        if (std::isfinite(s.sep)) vals.push_back(s.sep / 2);
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    return vals;
}

Snapshot FilteredComplex::snapshot(double r) const {
    Snapshot snap(r);
    for (const auto& s : simplices_)
        if (s.sep > 2 * r) snap.add_simplex(s.verts);
    snap.finalize();
    return snap;
}

ChainComplexZ2 ChainComplexZ2::of(const Snapshot& snap) {
    ChainComplexZ2 cc;
    for (int q = 0; q <= snap.dim(); ++q) {
        cc.basis.push_back(snap.simplices(q));
        cc.boundary.push_back(snap.boundary_z2(q));
    }
    return cc;
}

bool ChainComplexZ2::boundary_squared_is_zero() const {
    for (std::size_t q = 1; q < boundary.size(); ++q) {
        const Gf2Mat& outer = boundary[q - 1];
        const Gf2Mat& inner = boundary[q];
        for (std::size_t j = 0; j < inner.cols(); ++j)
            if (!outer.apply(inner.col(j)).is_zero()) return false;
    }
    return true;
}

double separation(std::span<const int> verts, const FiniteMetricSpace& space) {
    double sep = kInf;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            sep = std::min(sep, space.dist(verts[i], verts[j]));
    return sep;
}

namespace {

// Enumerates strictly increasing m-subsets of {0..n-1}.
template <typename F>
void for_each_subset(int n, int m, F&& fn) {
    if (m > n) return;
    VertTuple cur(m);
    for (int i = 0; i < m; ++i) cur[i] = i;
    while (true) {
        fn(cur);
        int i = m - 1;
        while (i >= 0 && cur[i] == n - m + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < m; ++j) cur[j] = cur[j - 1] + 1;
    }
}

} // namespace

FilteredComplex build_independence_filtration(const FiniteMetricSpace& space, int k_max,
                                              std::size_t budget) {
    if (k_max < 1) throw Error(Errc::invalid_input, "k_max must be >= 1");
    const int n = static_cast<int>(space.size());
    std::size_t total = 0;
    for (int k = 1; k <= k_max; ++k) {
        std::size_t c = binomial(n, k);
        if (c > budget - total)
            throw Error(Errc::budget_exceeded,
                        "independence filtration needs more than " + std::to_string(budget) +
                            " simplices");
        total += c;
    }
    FilteredComplex fc(k_max - 1, FiltrationSemantics::hard_sphere_r);
    for (int k = 1; k <= k_max; ++k)
        for_each_subset(n, k, [&](const VertTuple& verts) {
            double sep = separation(verts, space);
            if (sep > 0) fc.add(verts, sep);
        });
    fc.finalize();
    return fc;
}

OrderedConfig face_map(int i, const OrderedConfig& c) {
    const int k = static_cast<int>(c.size());
    if (i < 1 || i > k)
        throw Error(Errc::index_out_of_range,
                    "face index " + std::to_string(i) + " outside 1.." + std::to_string(k));
    OrderedConfig out;
    out.reserve(k - 1);
    for (int j = 0; j < k; ++j)
        if (j != i - 1) out.push_back(c[j]);
    return out;
}

OrderedConfig sigma_action(const Perm& perm, const OrderedConfig& c) {
    if (perm.size() != c.size()) throw Error(Errc::invalid_input, "permutation size mismatch");
    OrderedConfig out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c[perm[i]];
    return out;
}

Perm perm_identity(int k) {
    Perm p(k);
    for (int i = 0; i < k; ++i) p[i] = i;
    return p;
}

Perm perm_compose(const Perm& f, const Perm& g) {
    assert(f.size() == g.size());
    Perm h(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) h[i] = f[g[i]];
    return h;
}

Perm perm_inverse(const Perm& p) {
    Perm q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
    return q;
}

int perm_sign(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    int transpositions = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(p[j]);
            ++len;
        }
        transpositions += static_cast<int>(len) - 1;
    }
    return transpositions & 1;
}

std::vector<Perm> all_perms(int k) {
    Perm p = perm_identity(k);
    std::vector<Perm> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<OrderedConfig> enumerate_ordered_configs(const FiniteMetricSpace& space, int k,
                                                     double r, std::size_t budget) {
    if (k < 1) throw Error(Errc::invalid_input, "k must be >= 1");
    const int n = static_cast<int>(space.size());
    std::size_t expected = binomial(n, k);
    for (int i = 2; i <= k; ++i) {
        if (expected > budget / i)
            throw Error(Errc::budget_exceeded, "ordered configuration enumeration too large");
        expected *= i;
    }
    std::vector<OrderedConfig> out;
    OrderedConfig cur;
    std::vector<bool> used(n, false);
    // Depth-first over tuples in lexicographic order.
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool ok = true;
            for (int u : cur)
                if (!(space.dist(u, v) > 2 * r)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            used[v] = true;
            cur.push_back(v);
            self(self);
            cur.pop_back();
            used[v] = false;
        }
    };
    rec(rec);
    return out;
}

IntMat configuration_boundary(int k, double r, const FiniteMetricSpace& space,
                              std::size_t budget) {
    auto top = enumerate_ordered_configs(space, k, r, budget);
    if (k == 1) return IntMat(0, top.size()); // chain complexes are truncated at k = 1
    auto low = enumerate_ordered_configs(space, k - 1, r, budget);
    std::map<OrderedConfig, std::size_t> low_index;
    for (std::size_t i = 0; i < low.size(); ++i) low_index[low[i]] = i;

    IntMat m(low.size(), top.size());
    for (std::size_t j = 0; j < top.size(); ++j) {
        long long sign = 1; // face index i=1 carries (+1) = (-1)^(i-1)
        for (int i = 1; i <= k; ++i) {
            OrderedConfig f = face_map(i, top[j]);
            m.at(low_index.at(f), j) += sign;
            sign = -sign;
        }
    }
    return m;
}

IntMat configuration_inclusion(int k, double r_from, double r_to,
                               const FiniteMetricSpace& space, std::size_t budget) {
    if (r_to > r_from)
        throw Error(Errc::invalid_input, "inclusion requires r_to <= r_from");
    auto from = enumerate_ordered_configs(space, k, r_from, budget);
    auto to = enumerate_ordered_configs(space, k, r_to, budget);
    std::map<OrderedConfig, std::size_t> to_index;
    for (std::size_t i = 0; i < to.size(); ++i) to_index[to[i]] = i;
    IntMat m(to.size(), from.size());
    for (std::size_t j = 0; j < from.size(); ++j)
        m.at(to_index.at(from[j]), j) = 1;
    return m;
}

} // namespace confpersist
