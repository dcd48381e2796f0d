#include "confpersist/cochain.hpp"

#include "confpersist/errors.hpp"

#include <cmath>

namespace confpersist {

namespace {

void check_scale(const Cochain& a, const Cochain& b) {
    if (a.has_scale && b.has_scale && a.scale != b.scale)
        throw Error(Errc::scale_mismatch, "cochains live at different scales");
}

void check_fits(const Cochain& z, const Snapshot& k) {
    if (z.c.size() != k.count(z.degree))
        throw Error(Errc::scale_mismatch, "cochain length does not match complex");
    if (z.has_scale && k.has_scale() && z.scale != k.scale())
        throw Error(Errc::scale_mismatch, "cochain scale does not match complex scale");
}

} // namespace

Cochain Cochain::zero(const Snapshot& k, int degree, Ring ring) {
    Cochain z;
    z.degree = degree;
    z.ring = ring;
    z.c.assign(k.count(degree), 0);
    if (k.has_scale()) {
        z.scale = k.scale();
        z.has_scale = true;
    }
    return z;
}

Cochain coboundary(const Cochain& x, const Snapshot& k) {
    check_fits(x, k);
    Cochain out = Cochain::zero(k, x.degree + 1, x.ring);
    const int q = x.degree + 1;
    if (q > k.dim()) return out;
    IntMat d = k.coboundary_z(q); // rows: q-simplices, cols: (q-1)-simplices
    for (std::size_t i = 0; i < d.rows; ++i) {
        long long acc = 0;
        for (std::size_t j = 0; j < d.cols; ++j) acc += d.at(i, j) * x.c[j];
        out.c[i] = acc;
    }
    if (x.ring == Ring::Z2) out.normalize_mod2();
    return out;
}

bool is_cocycle(const Cochain& z, const Snapshot& k) {
    return coboundary(z, k).is_zero();
}

Cochain cup_product(const Cochain& a, const Cochain& b, const Snapshot& k) {
    check_scale(a, b);
    check_fits(a, k);
    check_fits(b, k);
    if (a.ring != b.ring) throw Error(Errc::invalid_input, "cup product needs one ring");
    const int p = a.degree, q = b.degree;
    Cochain out = Cochain::zero(k, p + q, a.ring);
    if (p + q > k.dim()) return out;
    const auto& tops = k.simplices(p + q);
    for (std::size_t s = 0; s < tops.size(); ++s) {
        const VertTuple& v = tops[s];
        VertTuple front(v.begin(), v.begin() + p + 1);
        VertTuple back(v.begin() + p, v.end());
        long long ai = k.index_of(p, front);
        long long bi = k.index_of(q, back);
        out.c[s] = a.c[static_cast<std::size_t>(ai)] * b.c[static_cast<std::size_t>(bi)];
    }
    if (a.ring == Ring::Z2) out.normalize_mod2();
    return out;
}

CoboundaryCertificate is_coboundary(const Cochain& z, const Snapshot& k) {
    check_fits(z, k);
    if (!is_cocycle(z, k)) throw Error(Errc::not_a_cocycle, "is_coboundary needs a cocycle");
    CoboundaryCertificate cert;
    const int q = z.degree;
    if (q == 0) {
        // Only the zero 0-cochain is a coboundary (no degree -1).
        cert.coboundary = z.is_zero();
        if (cert.coboundary) cert.primitive = std::nullopt;
        return cert;
    }
    if (z.ring == Ring::Z2) {
        Gf2Mat d = k.coboundary_z2(q); // C^{q-1} -> C^q
        Gf2Vec b(d.rows());
        for (std::size_t i = 0; i < z.c.size(); ++i)
            if (z.c[i] & 1) b.set(i, true);
        auto x = gf2_solve(d, b);
        cert.coboundary = x.has_value();
        if (x) {
            Cochain prim = Cochain::zero(k, q - 1, Ring::Z2);
            for (std::size_t i = 0; i < prim.c.size(); ++i) prim.c[i] = x->get(i) ? 1 : 0;
            cert.primitive = std::move(prim);
        }
    } else {
        IntMat d = k.coboundary_z(q);
        auto x = solve_integer(d, z.c);
        cert.coboundary = x.has_value();
        if (x) {
            Cochain prim = Cochain::zero(k, q - 1, Ring::Z);
            prim.c = std::move(*x);
            cert.primitive = std::move(prim);
        }
    }
    return cert;
}

Cochain restrict_cochain(const Cochain& z, const Snapshot& k, const Snapshot& sub) {
    check_fits(z, k);
    Cochain out = Cochain::zero(sub, z.degree, z.ring);
    const auto& simp = sub.simplices(z.degree);
    for (std::size_t i = 0; i < simp.size(); ++i) {
        long long j = k.index_of(z.degree, simp[i]);
        if (j < 0)
            throw Error(Errc::invalid_input, "restriction target is not a subcomplex");
        out.c[i] = z.c[static_cast<std::size_t>(j)];
    }
    return out;
}

} // namespace confpersist
