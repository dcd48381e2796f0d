#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace confpersist {

// Bit-packed vector over Z/2.
class Gf2Vec {
public:
    Gf2Vec() = default;
    explicit Gf2Vec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        std::uint64_t m = std::uint64_t(1) << (i & 63);
        if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    Gf2Vec& operator^=(const Gf2Vec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    bool is_zero() const {
        for (auto w : w_) if (w) return false;
        return true;
    }

    // Index of the highest set bit, or -1.
    long long top() const {
        for (std::size_t i = w_.size(); i-- > 0;) {
            if (w_[i]) {
                unsigned long long w = w_[i];
                return static_cast<long long>(i * 64 + (63 - __builtin_clzll(w)));
            }
        }
        return -1;
    }

    bool operator==(const Gf2Vec& o) const { return n_ == o.n_ && w_ == o.w_; }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

// Column-major matrix over Z/2.
class Gf2Mat {
public:
    Gf2Mat() = default;
    Gf2Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols, Gf2Vec(rows)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_.size(); }

    Gf2Vec& col(std::size_t j) { return cols_[j]; }
    const Gf2Vec& col(std::size_t j) const { return cols_[j]; }

    bool get(std::size_t i, std::size_t j) const { return cols_[j].get(i); }
    void set(std::size_t i, std::size_t j, bool v) { cols_[j].set(i, v); }

    // Matrix-vector product.
    Gf2Vec apply(const Gf2Vec& x) const {
        Gf2Vec y(rows_);
        for (std::size_t j = 0; j < cols_.size(); ++j)
            if (x.get(j)) y ^= cols_[j];
        return y;
    }

    std::size_t rank() const;

private:
    std::size_t rows_ = 0;
    std::vector<Gf2Vec> cols_;
};

inline std::size_t Gf2Mat::rank() const {
    std::vector<Gf2Vec> work(cols_.begin(), cols_.end());
    std::vector<long long> pivot_owner; // pivot row of each accepted column
    std::vector<Gf2Vec> basis;
    std::size_t r = 0;
    for (auto& c : work) {
        Gf2Vec v = c;
        bool reduced = true;
        while (reduced) {
            reduced = false;
            long long t = v.top();
            if (t < 0) break;
            for (std::size_t b = 0; b < basis.size(); ++b) {
                if (pivot_owner[b] == t) {
                    v ^= basis[b];
                    reduced = true;
                    break;
                }
            }
        }
        if (v.top() >= 0) {
            pivot_owner.push_back(v.top());
            basis.push_back(v);
            ++r;
        }
    }
    return r;
}

// Solves A x = b over Z/2. Returns a solution if one exists.
inline std::optional<Gf2Vec> gf2_solve(const Gf2Mat& a, const Gf2Vec& b) {
    const std::size_t m = a.rows(), n = a.cols();
    // Column reduction remembering combinations: each reduced column is a
    // combination of original columns, tracked in comb.
    std::vector<Gf2Vec> cols(n), comb(n);
    for (std::size_t j = 0; j < n; ++j) {
        cols[j] = a.col(j);
        comb[j] = Gf2Vec(n);
        comb[j].set(j, true);
    }
    std::vector<long long> pivot_of_col(n, -1);
    std::vector<long long> col_of_pivot(m, -1);
    for (std::size_t j = 0; j < n; ++j) {
        long long t;
        while ((t = cols[j].top()) >= 0 && col_of_pivot[t] >= 0) {
            std::size_t o = static_cast<std::size_t>(col_of_pivot[t]);
            cols[j] ^= cols[o];
            comb[j] ^= comb[o];
        }
        if (t >= 0) {
            pivot_of_col[j] = t;
            col_of_pivot[t] = static_cast<long long>(j);
        }
    }
    Gf2Vec res = b, x(n);
    long long t;
    while ((t = res.top()) >= 0) {
        if (col_of_pivot[t] < 0) return std::nullopt;
        std::size_t o = static_cast<std::size_t>(col_of_pivot[t]);
        res ^= cols[o];
        x ^= comb[o];
    }
    return x;
}

} // namespace confpersist
