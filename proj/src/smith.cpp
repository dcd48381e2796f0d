#include "confpersist/smith.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

namespace confpersist {

IntMat mat_mul(const IntMat& x, const IntMat& y) {
    assert(x.cols == y.rows);
    IntMat z(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            long long xv = x.at(i, k);
            if (!xv) continue;
            for (std::size_t j = 0; j < y.cols; ++j)
                z.at(i, j) += xv * y.at(k, j);
        }
    return z;
}

std::vector<long long> mat_apply(const IntMat& m, const std::vector<long long>& v) {
    assert(v.size() == m.cols);
    std::vector<long long> out(m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            out[i] += m.at(i, j) * v[j];
    return out;
}

namespace {

// Diagonalization core; hooks observe the elementary operations so callers
// can track exactly as much of U and V as they need.
template <typename Hooks>
std::size_t snf_core(IntMat& m, Hooks& h) {
    const std::size_t rows = m.rows, cols = m.cols;
    std::size_t t = 0;
    const std::size_t nmin = rows < cols ? rows : cols;
    while (t < nmin) {
        // Entry of minimum nonzero magnitude in the trailing block; a unit
        // entry is already optimal.
        std::size_t pi = t, pj = t;
        long long best = 0;
        for (std::size_t i = t; i < rows && best != 1; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                long long av = std::llabs(m.at(i, j));
                if (av != 0 && (best == 0 || av < best)) {
                    best = av;
                    pi = i;
                    pj = j;
                    if (best == 1) break;
                }
            }
        if (best == 0) break;

        if (pi != t) {
            for (std::size_t c = 0; c < cols; ++c) std::swap(m.at(t, c), m.at(pi, c));
            h.row_swap(t, pi);
        }
        if (pj != t) {
            for (std::size_t r = 0; r < rows; ++r) std::swap(m.at(r, t), m.at(r, pj));
            h.col_swap(t, pj);
        }
        if (m.at(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c) m.at(t, c) = -m.at(t, c);
            h.row_neg(t);
        }

        bool clean = true;
        for (std::size_t i = t + 1; i < rows; ++i) {
            long long q = m.at(i, t) / m.at(t, t);
            if (q) {
                for (std::size_t c = t; c < cols; ++c) m.at(i, c) -= q * m.at(t, c);
                h.row_sub(i, t, q);
            }
            if (m.at(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            long long q = m.at(t, j) / m.at(t, t);
            if (q) {
                for (std::size_t r = t; r < rows; ++r) m.at(r, j) -= q * m.at(r, t);
                h.col_sub(j, t, q);
            }
            if (m.at(t, j) != 0) clean = false;
        }
        if (!clean) continue; // remainders became new, smaller pivot candidates

        // A unit pivot divides everything; otherwise enforce divisibility of
        // the trailing block.
        if (m.at(t, t) != 1) {
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols && divides; ++j)
                    if (m.at(i, j) % m.at(t, t) != 0) {
                        // Fold row i into the pivot row and restart.
                        for (std::size_t c = t; c < cols; ++c) m.at(t, c) += m.at(i, c);
                        h.row_sub(t, i, -1);
                        divides = false;
                    }
            if (!divides) continue;
        }
        ++t;
    }
    return t;
}

struct FullHooks {
    IntMat& u; // rows x rows
    IntMat& v; // cols x cols

    void row_swap(std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
    }
    void row_neg(std::size_t i) {
        for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
    }
    void row_sub(std::size_t i, std::size_t j, long long q) {
        for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) -= q * u.at(j, c);
    }
    void col_swap(std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
    }
    void col_sub(std::size_t i, std::size_t j, long long q) {
        for (std::size_t r = 0; r < v.rows; ++r) v.at(r, i) -= q * v.at(r, j);
    }
};

struct NullHooks {
    void row_swap(std::size_t, std::size_t) {}
    void row_neg(std::size_t) {}
    void row_sub(std::size_t, std::size_t, long long) {}
    void col_swap(std::size_t, std::size_t) {}
    void col_sub(std::size_t, std::size_t, long long) {}
};

// Tracks U b as a vector and logs column operations for later replay.
struct SolveHooks {
    std::vector<long long>& b;
    struct ColOp {
        std::size_t i, j; // swap when q == 0, else col_i -= q * col_j
        long long q;
    };
    std::vector<ColOp> col_ops;

    void row_swap(std::size_t i, std::size_t j) { std::swap(b[i], b[j]); }
    void row_neg(std::size_t i) { b[i] = -b[i]; }
    void row_sub(std::size_t i, std::size_t j, long long q) { b[i] -= q * b[j]; }
    void col_swap(std::size_t i, std::size_t j) { col_ops.push_back({i, j, 0}); }
    void col_sub(std::size_t i, std::size_t j, long long q) { col_ops.push_back({i, j, q}); }
};

} // namespace

SmithDecomposition smith_normal_form(IntMat m) {
    SmithDecomposition out;
    out.u = IntMat::identity(m.rows);
    out.v = IntMat::identity(m.cols);
    FullHooks hooks{out.u, out.v};
    out.rank = snf_core(m, hooks);
    out.s = std::move(m);
    return out;
}

SnfSummary snf_divisors(IntMat m) {
    NullHooks hooks;
    SnfSummary out;
    out.rank = snf_core(m, hooks);
    for (std::size_t i = 0; i < out.rank; ++i) out.divisors.push_back(m.at(i, i));
    return out;
}

std::optional<std::vector<long long>> solve_integer(const IntMat& a,
                                                    const std::vector<long long>& b) {
    if (b.size() != a.rows) throw std::invalid_argument("solve_integer: size mismatch");
    IntMat m = a;
    std::vector<long long> ub = b;
    SolveHooks hooks{ub, {}};
    std::size_t rank = snf_core(m, hooks);

    // a x = b  <=>  s (v^-1 x) = u b ; set y = v^-1 x, then x = v y.
    std::vector<long long> y(a.cols, 0);
    for (std::size_t i = 0; i < ub.size(); ++i) {
        long long si = (i < rank) ? m.at(i, i) : 0;
        if (si == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % si != 0) return std::nullopt;
            y[i] = ub[i] / si;
        }
    }
    // x = V y: replay the column operations in reverse. col_i -= q * col_j
    // acts on solution vectors as y_j -= q * y_i.
    for (auto it = hooks.col_ops.rbegin(); it != hooks.col_ops.rend(); ++it) {
        if (it->q == 0)
            std::swap(y[it->i], y[it->j]);
        else
            y[it->j] -= it->q * y[it->i];
    }
    return y;
}

} // namespace confpersist
