#include "confpersist/covering.hpp"

#include "confpersist/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

namespace confpersist {

void CoveringCocycle::set(int u, int v, const Perm& g_uv) {
    if (u == v) throw Error(Errc::invalid_input, "cocycle edge needs distinct endpoints");
    if (u < v)
        forward[{u, v}] = g_uv;
    else
        forward[{v, u}] = perm_inverse(g_uv);
}

bool CoveringCocycle::has_edge(int u, int v) const {
    auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    return forward.count(key) > 0;
}

Perm CoveringCocycle::transport(int u, int v) const {
    auto key = u < v ? std::make_pair(u, v) : std::make_pair(v, u);
    auto it = forward.find(key);
    if (it == forward.end())
        throw Error(Errc::invalid_input, "no cocycle label on requested edge");
    return u < v ? it->second : perm_inverse(it->second);
}

std::optional<Perm> matching_bijection(const VertTuple& from, const VertTuple& to, double delta,
                                       const FiniteMetricSpace& space) {
    if (from.size() != to.size())
        throw Error(Errc::invalid_input, "configurations of different multiplicity");
    const int k = static_cast<int>(from.size());
    if (!(separation(from, space) > 2 * delta) || !(separation(to, space) > 2 * delta))
        throw Error(Errc::guard_violated, "matching needs sep > 2*delta on both configurations");
    // sep > 2*delta makes a within-delta partner unique on both sides.
    Perm p(k, -1);
    std::vector<bool> hit(k, false);
    for (int j = 0; j < k; ++j) {
        int partner = -1;
        for (int i = 0; i < k; ++i) {
            if (space.dist(from[i], to[j]) <= delta) {
                partner = i;
                break;
            }
        }
        if (partner < 0) return std::nullopt;
        p[partner] = j;
        hit[partner] = true;
    }
    for (int i = 0; i < k; ++i)
        if (!hit[i]) return std::nullopt;
    return p;
}

Snapshot ConfigRipsComplex::snapshot(double r) const {
    Snapshot snap(r);
    std::vector<bool> alive(configs.size(), false);
    for (std::size_t i = 0; i < configs.size(); ++i)
        if (sep[i] > 2 * r) {
            alive[i] = true;
            snap.add_simplex({static_cast<int>(i)});
        }
    for (const auto& [u, v] : edges)
        if (alive[u] && alive[v]) snap.add_simplex({u, v});
    for (const auto& f : faces_by_dim) {
        bool all = true;
        for (int c : f)
            if (!alive[c]) {
                all = false;
                break;
            }
        if (all) snap.add_simplex(VertTuple(f.begin(), f.end()));
    }
    snap.finalize();
    return snap;
}

FilteredComplex ConfigRipsComplex::as_filtered() const {
    FilteredComplex fc(dim_cap, FiltrationSemantics::config_rips_r);
    auto face_sep = [&](const std::vector<int>& verts) {
        double s = kInf;
        for (int c : verts) s = std::min(s, sep[static_cast<std::size_t>(c)]);
        return s;
    };
    for (std::size_t i = 0; i < configs.size(); ++i)
        fc.add({static_cast<int>(i)}, sep[i]);
    for (const auto& [u, v] : edges) fc.add({u, v}, face_sep({u, v}));
    for (const auto& f : faces_by_dim) fc.add(VertTuple(f.begin(), f.end()), face_sep(f));
    fc.finalize();
    return fc;
}

ConfigRipsBuild build_config_rips(const FiniteMetricSpace& space, int k, double delta,
                                  std::vector<double> r_grid, int dim_cap,
                                  std::size_t budget) {
    if (k < 1) throw Error(Errc::invalid_input, "k must be >= 1");
    if (r_grid.empty()) throw Error(Errc::invalid_input, "r_grid must be nonempty");
    std::sort(r_grid.begin(), r_grid.end());
    const double r_lo = r_grid.front(), r_hi = r_grid.back();
    if (!(delta > 0) || delta > r_lo)
        throw Error(Errc::guard_violated, "need 0 < delta <= min(r_grid)");

    ConfigRipsBuild out;
    auto& cx = out.complex;
    cx.k = k;
    cx.delta = delta;
    cx.r_lo = r_lo;
    cx.r_hi = r_hi;
    cx.dim_cap = dim_cap;
    out.cocycle.k = k;

    if (binomial(space.size(), static_cast<std::size_t>(k)) > budget)
        throw Error(Errc::budget_exceeded, "configuration enumeration exceeds budget");

    // Vertices: configurations alive somewhere on the grid.
    const int n = static_cast<int>(space.size());
    VertTuple cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
            double s = separation(cur, space);
            if (s > 2 * r_lo) {
                cx.configs.push_back(cur);
                cx.sep.push_back(s);
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

    // Edges: unique small-displacement matchings. sep > 2*r_lo >= 2*delta
    // holds for every vertex, so the matching guard is satisfied. Rows are
    // scanned in parallel and merged in index order.
    const std::size_t nv = cx.configs.size();
    std::vector<std::vector<std::pair<int, Perm>>> row_hits(nv);
    parallel_for(nv, [&](std::size_t u) {
        for (std::size_t v = u + 1; v < nv; ++v) {
            auto m = matching_bijection(cx.configs[u], cx.configs[v], delta, space);
            if (m) row_hits[u].push_back({static_cast<int>(v), std::move(*m)});
        }
    });
    std::vector<std::vector<int>> nbr(nv);
    for (std::size_t u = 0; u < nv; ++u)
        for (auto& [v, m] : row_hits[u]) {
            cx.edges.push_back({static_cast<int>(u), v});
            out.cocycle.set(static_cast<int>(u), v, m);
            nbr[u].push_back(v);
            nbr[static_cast<std::size_t>(v)].push_back(static_cast<int>(u));
        }
    row_hits.clear();
    for (auto& ns : nbr) std::sort(ns.begin(), ns.end());

    // Triangles: all three edges present and the cocycle composes.
    std::vector<std::vector<int>> prev_dim; // simplices of the previous dimension
    if (dim_cap >= 2) {
        for (const auto& [u, v] : cx.edges) {
            std::vector<int> common;
            std::set_intersection(nbr[u].begin(), nbr[u].end(), nbr[v].begin(), nbr[v].end(),
                                  std::back_inserter(common));
            for (int w : common) {
                if (w <= v) continue; // emit each triangle once, u < v < w
                Perm uv = out.cocycle.transport(u, v);
                Perm vw = out.cocycle.transport(v, w);
                Perm uw = out.cocycle.transport(u, w);
                if (perm_compose(vw, uv) == uw)
                    prev_dim.push_back({u, v, w});
                else
                    cx.excluded_triangles.push_back({u, v, w});
            }
        }
        cx.faces_by_dim = prev_dim;
    }

    // Higher faces: a q-simplex is retained when all its (q-1)-faces are.
    std::set<std::vector<int>> have(prev_dim.begin(), prev_dim.end());
    for (int q = 3; q <= dim_cap && !prev_dim.empty(); ++q) {
        std::vector<std::vector<int>> next;
        std::set<std::vector<int>> seen;
        for (const auto& f : prev_dim) {
            std::vector<int> cand_base(f.begin(), f.end());
            // Extend by common neighbors beyond the last vertex.
            std::vector<int> common = nbr[f[0]];
            for (std::size_t i = 1; i < f.size(); ++i) {
                std::vector<int> tmp;
                std::set_intersection(common.begin(), common.end(), nbr[f[i]].begin(),
                                      nbr[f[i]].end(), std::back_inserter(tmp));
                common.swap(tmp);
            }
            for (int w : common) {
                if (w <= f.back()) continue;
                std::vector<int> cand = cand_base;
                cand.push_back(w);
                if (seen.count(cand)) continue;
                bool all_faces = true;
                for (std::size_t drop = 0; drop < cand.size() && all_faces; ++drop) {
                    std::vector<int> face;
                    for (std::size_t i = 0; i < cand.size(); ++i)
                        if (i != drop) face.push_back(cand[i]);
                    if (!have.count(face)) all_faces = false;
                }
                if (all_faces) {
                    next.push_back(cand);
                    seen.insert(cand);
                }
            }
        }
        for (const auto& f : next) cx.faces_by_dim.push_back(f);
        have = std::set<std::vector<int>>(next.begin(), next.end());
        prev_dim.swap(next);
    }
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent, rank_;
    explicit UnionFind(std::size_t n) : parent(n), rank_(n, 0) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (rank_[a] < rank_[b]) std::swap(a, b);
        parent[b] = a;
        if (rank_[a] == rank_[b]) ++rank_[a];
    }
    std::size_t components(std::size_t n) {
        std::set<int> roots;
        for (std::size_t i = 0; i < n; ++i) roots.insert(find(static_cast<int>(i)));
        return roots.size();
    }
};

long long factorial(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

} // namespace

CoveringReport verify_covering(const Snapshot& base, const CoveringCocycle& g) {
    const int k = g.k;
    // Cocycle condition on every retained 2-simplex.
    for (const auto& t : base.simplices(2)) {
        Perm uv = g.transport(t[0], t[1]);
        Perm vw = g.transport(t[1], t[2]);
        Perm uw = g.transport(t[0], t[2]);
        if (!(perm_compose(vw, uv) == uw))
            throw Error(Errc::cocycle_violation,
                        "cocycle fails on triangle (" + std::to_string(t[0]) + "," +
                            std::to_string(t[1]) + "," + std::to_string(t[2]) + ")");
    }
    // Inverse consistency on every edge.
    for (const auto& e : base.simplices(1)) {
        Perm fwd = g.transport(e[0], e[1]);
        Perm bwd = g.transport(e[1], e[0]);
        if (!(perm_compose(bwd, fwd) == perm_identity(k)))
            throw Error(Errc::cocycle_violation, "edge transport is not invertible");
    }

    CoveringReport rep;
    rep.expected_fiber = factorial(k);
    const auto perms = all_perms(k);
    const std::size_t nf = perms.size();
    std::map<Perm, std::size_t> perm_rank;
    for (std::size_t i = 0; i < nf; ++i) perm_rank[perms[i]] = i;

    const auto& verts = base.simplices(0);
    std::map<int, std::size_t> vid; // base vertex id -> dense index
    for (std::size_t i = 0; i < verts.size(); ++i) vid[verts[i][0]] = i;
    rep.base_vertices = verts.size();
    rep.total_vertices = verts.size() * nf;

    // Total complex: vertex (b, a) at index vid[b]*nf + rank(a); base edge
    // {u,v} with transport pi lifts to edges (u, a) -- (v, pi o a).
    UnionFind uf_total(rep.total_vertices);
    UnionFind uf_base(rep.base_vertices);
    std::vector<std::set<std::size_t>> lifted_partners(rep.total_vertices);
    for (const auto& e : base.simplices(1)) {
        std::size_t u = vid.at(e[0]), v = vid.at(e[1]);
        uf_base.unite(static_cast<int>(u), static_cast<int>(v));
        Perm pi = g.transport(e[0], e[1]);
        for (std::size_t a = 0; a < nf; ++a) {
            std::size_t source = u * nf + a;
            std::size_t target = v * nf + perm_rank.at(perm_compose(pi, perms[a]));
            uf_total.unite(static_cast<int>(source), static_cast<int>(target));
            lifted_partners[source].insert(target);
            lifted_partners[target].insert(source);
        }
    }

    // Fiber cardinality and evenness of the local covering: each sheet meets
    // every incident base edge exactly once.
    rep.fibers_uniform = true;
    std::vector<std::size_t> base_degree(rep.base_vertices, 0);
    for (const auto& e : base.simplices(1)) {
        ++base_degree[vid.at(e[0])];
        ++base_degree[vid.at(e[1])];
    }
    for (std::size_t b = 0; b < rep.base_vertices && rep.fibers_uniform; ++b)
        for (std::size_t a = 0; a < nf; ++a)
            if (lifted_partners[b * nf + a].size() != base_degree[b]) {
                rep.fibers_uniform = false;
                break;
            }

    // Deck action: (b, a) -> (b, a o sigma^{-1}). Checks: only the identity
    // fixes a sheet, the orbit of a sheet is the whole fiber, deck moves
    // preserve the projection, and the action maps lifted edges to lifted
    // edges.
    rep.deck_action_free = true;
    rep.projection_equivariant = true;
    bool edges_preserved = true;
    for (const auto& sigma : perms) {
        bool is_id = sigma == perm_identity(k);
        Perm sigma_inv = perm_inverse(sigma);
        std::vector<std::size_t> moved_rank(nf);
        for (std::size_t a = 0; a < nf; ++a) {
            Perm moved = perm_compose(perms[a], sigma_inv);
            moved_rank[a] = perm_rank.at(moved);
            if (!is_id && moved_rank[a] == a) rep.deck_action_free = false;
        }
        for (std::size_t b = 0; b < rep.base_vertices; ++b)
            for (std::size_t a = 0; a < nf; ++a) {
                std::size_t src = b * nf + a;
                std::size_t dst = b * nf + moved_rank[a];
                if (dst / nf != src / nf) rep.projection_equivariant = false;
                for (std::size_t partner : lifted_partners[src]) {
                    std::size_t pb = partner / nf, pa = partner % nf;
                    if (!lifted_partners[dst].count(pb * nf + moved_rank[pa]))
                        edges_preserved = false;
                }
            }
    }
    rep.projection_equivariant = rep.projection_equivariant && edges_preserved;
    // Transitivity on a fiber: the orbit of one arrangement is everything.
    {
        std::set<std::size_t> orbit;
        for (const auto& sigma : perms)
            orbit.insert(perm_rank.at(perm_compose(perms[0], perm_inverse(sigma))));
        rep.deck_action_transitive = orbit.size() == nf;
    }

    rep.base_components = uf_base.components(rep.base_vertices);
    rep.total_components = uf_total.components(rep.total_vertices);
    rep.trivial_cover =
        rep.total_components == static_cast<std::size_t>(rep.expected_fiber) * rep.base_components;
    rep.ok = rep.fibers_uniform && rep.deck_action_free && rep.deck_action_transitive &&
             rep.projection_equivariant;
    return rep;
}

Cochain w1_cochain(const Snapshot& base, const CoveringCocycle& g) {
    Cochain z = Cochain::zero(base, 1, Ring::Z2);
    const auto& edges = base.simplices(1);
    for (std::size_t i = 0; i < edges.size(); ++i)
        z.c[i] = perm_sign(g.transport(edges[i][0], edges[i][1]));
    return z;
}

W1Cocycle w1(const ConfigRipsComplex& complex, const CoveringCocycle& g) {
    W1Cocycle out;
    out.sign_by_edge.reserve(complex.edges.size());
    for (const auto& [u, v] : complex.edges)
        out.sign_by_edge.push_back(static_cast<std::uint8_t>(perm_sign(g.transport(u, v))));
    return out;
}

} // namespace confpersist
