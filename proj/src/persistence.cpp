#include "confpersist/persistence.hpp"

#include "confpersist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace confpersist {

std::size_t Barcode::count_at(double r, int q) const {
    std::size_t n = 0;
    for (const auto& iv : intervals)
        if (iv.dim == q && iv.death_r <= r && r < iv.birth_r) ++n;
    return n;
}

Barcode compute_persistence(const FilteredComplex& k, int max_dim) {
    if (!k.monotone())
        throw Error(Errc::non_monotone_filtration, "filtration is not monotone");

    struct Entry {
        const FilteredSimplex* s;
        double u; // entrance parameter
        int dim;
    };
    std::vector<Entry> order;
    for (const auto& s : k.simplices()) {
        int d = static_cast<int>(s.verts.size()) - 1;
        if (d > max_dim + 1) continue; // cannot create or kill in dims <= max_dim
        order.push_back({&s, -s.sep / 2, d});
    }
    std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
        if (a.u != b.u) return a.u < b.u;
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.s->verts < b.s->verts;
    });

    const std::size_t m = order.size();
    std::map<VertTuple, std::size_t> pos;
    for (std::size_t i = 0; i < m; ++i) pos[order[i].s->verts] = i;

    // Standard column reduction over Z/2.
    std::vector<Gf2Vec> cols(m);
    std::vector<long long> pair_of(m, -1);     // creator index for a killer column
    std::vector<long long> killer_of(m, -1);   // killer column for a pivot row
    for (std::size_t j = 0; j < m; ++j) {
        const auto& verts = order[j].s->verts;
        Gf2Vec col(m);
        if (verts.size() > 1) {
            for (std::size_t drop = 0; drop < verts.size(); ++drop) {
                VertTuple f;
                f.reserve(verts.size() - 1);
                for (std::size_t i = 0; i < verts.size(); ++i)
                    if (i != drop) f.push_back(verts[i]);
                col.flip(pos.at(f));
            }
        }
        long long t;
        while ((t = col.top()) >= 0 && killer_of[t] >= 0)
            col ^= cols[static_cast<std::size_t>(killer_of[t])];
        cols[j] = std::move(col);
        if (t >= 0) {
            killer_of[t] = static_cast<long long>(j);
            pair_of[j] = t;
        }
    }

    Barcode bc;
    for (std::size_t j = 0; j < m; ++j) {
        if (pair_of[j] >= 0) {
            std::size_t creator = static_cast<std::size_t>(pair_of[j]);
            int dim = order[creator].dim;
            if (dim > max_dim) continue;
            double birth_r = order[creator].s->sep / 2;
            double death_r = order[j].s->sep / 2;
            if (birth_r == death_r) continue; // zero-length
            bc.intervals.push_back({dim, birth_r, death_r, false});
        } else if (killer_of[j] < 0) {
            // Unpaired and never used as a pivot target: essential class.
            int dim = order[j].dim;
            if (dim > max_dim) continue;
            bc.intervals.push_back({dim, order[j].s->sep / 2, 0.0, true});
        }
    }
    std::sort(bc.intervals.begin(), bc.intervals.end(), [](const Interval& a, const Interval& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth_r != b.birth_r) return a.birth_r > b.birth_r;
        return a.death_r > b.death_r;
    });
    return bc;
}

BettiSummary betti_of(const Snapshot& snap, int q, Ring ring) {
    BettiSummary out;
    if (q < 0) return out;
    const auto nq = static_cast<long long>(snap.count(q));
    if (nq == 0) return out;
    if (ring == Ring::Z2) {
        long long rank_from = static_cast<long long>(snap.coboundary_z2(q + 1).rank());
        long long rank_into = static_cast<long long>(snap.coboundary_z2(q).rank());
        out.rank = nq - rank_from - rank_into;
    } else {
        SnfSummary from = snf_divisors(snap.coboundary_z(q + 1));
        SnfSummary into = snf_divisors(snap.coboundary_z(q));
        out.rank = nq - static_cast<long long>(from.rank) - static_cast<long long>(into.rank);
        for (long long d : into.divisors) {
            if (d < 0) d = -d;
            if (d > 1) out.torsion.push_back(d);
        }
    }
    return out;
}

BettiSummary betti_at(const FilteredComplex& k, double r, int q, Ring ring) {
    return betti_of(k.snapshot(r), q, ring);
}

} // namespace confpersist
