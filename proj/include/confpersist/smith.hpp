#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace confpersist {

// Dense row-major integer matrix, desk scale.
struct IntMat {
    std::size_t rows = 0, cols = 0;
    std::vector<long long> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

    long long& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    long long at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

IntMat mat_mul(const IntMat& x, const IntMat& y);
std::vector<long long> mat_apply(const IntMat& m, const std::vector<long long>& v);

// u * original * v = s, with u and v unimodular and the diagonal of s a
// divisibility chain d1 | d2 | ... .
struct SmithDecomposition {
    IntMat u, s, v;
    std::size_t rank = 0;
};

SmithDecomposition smith_normal_form(IntMat m);

// Rank and elementary divisors only, skipping the transform bookkeeping.
struct SnfSummary {
    std::size_t rank = 0;
    std::vector<long long> divisors;
};

SnfSummary snf_divisors(IntMat m);

// Solves a x = b over the integers, via the Smith decomposition of a.
std::optional<std::vector<long long>> solve_integer(const IntMat& a,
                                                    const std::vector<long long>& b);

} // namespace confpersist
