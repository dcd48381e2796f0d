#include "confpersist/regular.hpp"

#include "confpersist/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace confpersist {

void SampledMap::validate() const {
    if (n_dims < 1) throw Error(Errc::invalid_input, "map needs N >= 1");
    if (values.size() != domain.size() * row_width())
        throw Error(Errc::invalid_input, "value matrix does not match domain size");
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n) {
    // Cyclic Jacobi rotations; plenty for the k x k Gram matrices used here.
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (apq == 0) continue;
                double app = a[p * n + p], aqq = a[q * n + q];
                double theta = 0.5 * std::atan2(2 * apq, aqq - app);
                double c = std::cos(theta), s = std::sin(theta);
                for (std::size_t i = 0; i < n; ++i) {
                    double aip = a[i * n + p], aiq = a[i * n + q];
                    a[i * n + p] = c * aip - s * aiq;
                    a[i * n + q] = s * aip + c * aiq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    double api = a[p * n + i], aqi = a[q * n + i];
                    a[p * n + i] = c * api - s * aqi;
                    a[q * n + i] = s * api + c * aqi;
                }
            }
    }
    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a[i * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

namespace {

// Numerical rank of an m x w real matrix (rows are vectors) via the
// eigenvalues of its Gram matrix: singular values are their square roots.
struct RankInfo {
    std::size_t rank = 0;
    double sigma_ratio = 0; // sigma_min / sigma_max (0 when sigma_max == 0)
    bool full = false;
};

RankInfo numerical_rank(const std::vector<double>& rows, std::size_t m, std::size_t w,
                        double tol) {
    std::vector<double> gram(m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            double acc = 0;
            for (std::size_t t = 0; t < w; ++t) acc += rows[i * w + t] * rows[j * w + t];
            gram[i * m + j] = gram[j * m + i] = acc;
        }
    auto eig = symmetric_eigenvalues(std::move(gram), m);
    double emax = eig.empty() ? 0 : std::max(0.0, eig.back());
    RankInfo info;
    if (emax <= 0) return info;
    double thresh = tol * tol * emax; // eigenvalues are squared singular values
    for (double e : eig)
        if (e > thresh) ++info.rank;
    double emin = std::max(0.0, eig.front());
    info.sigma_ratio = std::sqrt(emin / emax);
    info.full = info.rank == m;
    return info;
}

// Rows of the k x N value matrix for a subset, as real vectors. For complex
// maps each F-row is a 2N real vector and the conjugate-aware rank comes from
// doubling: the real span of {v, iv} per vector. rank_C(A) = rank_R(B)/2
// where B stacks v and iv for every row v.
std::vector<double> subset_rows(const SampledMap& f, const VertTuple& subset, std::size_t& m,
                                std::size_t& w) {
    const std::size_t k = subset.size();
    if (f.field == FieldTag::real) {
        m = k;
        w = f.n_dims;
        std::vector<double> rows(m * w);
        for (std::size_t i = 0; i < k; ++i)
            std::copy(f.row(subset[i]), f.row(subset[i]) + w, rows.begin() + i * w);
        return rows;
    }
    // Complex: interleaved (re, im); append i*v below v.
    m = 2 * k;
    w = 2 * f.n_dims;
    std::vector<double> rows(m * w);
    for (std::size_t i = 0; i < k; ++i) {
        const double* src = f.row(subset[i]);
        double* v = rows.data() + (2 * i) * w;
        double* iv = rows.data() + (2 * i + 1) * w;
        for (std::size_t t = 0; t < f.n_dims; ++t) {
            double re = src[2 * t], im = src[2 * t + 1];
            v[2 * t] = re;
            v[2 * t + 1] = im;
            iv[2 * t] = -im; // i * (re + i im) = -im + i re
            iv[2 * t + 1] = re;
        }
    }
    return rows;
}

template <typename CheckSubset>
RegularityVerdict scan_subsets(const SampledMap& f, int k, double r, double tol,
                               std::size_t budget, CheckSubset&& check) {
    f.validate();
    if (!(tol > 0)) throw Error(Errc::tolerance_invalid, "tolerance must be positive");
    if (k < 1) throw Error(Errc::invalid_input, "k must be >= 1");
    const int n = static_cast<int>(f.domain.size());
    if (binomial(n, k) > budget)
        throw Error(Errc::budget_exceeded, "subset enumeration exceeds budget");

    RegularityVerdict verdict;
    verdict.tol = tol;
    verdict.passed = true;
    VertTuple cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (!verdict.passed) return;
        if (static_cast<int>(cur.size()) == k) {
            double sep = separation(cur, f.domain);
            if (!(sep > 2 * r)) return; // not an admissible configuration
            ++verdict.subsets_checked;
            auto [ok, rank] = check(cur);
            if (!ok) {
                verdict.passed = false;
                RegularityWitness w;
                for (int v : cur) w.subset.push_back(f.domain.point(v));
                w.separation = sep;
                w.numerical_rank = rank;
                verdict.witness = std::move(w);
            }
            return;
        }
        for (int v = start; v < n && verdict.passed; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return verdict;
}

} // namespace

RegularityVerdict is_kr_regular(const SampledMap& f, int k, double r, double tol,
                                std::size_t budget) {
    return scan_subsets(f, k, r, tol, budget,
                        [&](const VertTuple& subset) -> std::pair<bool, std::size_t> {
                            std::size_t m = 0, w = 0;
                            auto rows = subset_rows(f, subset, m, w);
                            RankInfo info = numerical_rank(rows, m, w, tol);
                            if (f.field == FieldTag::real)
                                return {info.full, info.rank};
                            return {info.full, info.rank / 2};
                        });
}

RegularityVerdict is_affine_kr_regular(const SampledMap& f, int k, double r, double tol,
                                       std::size_t budget) {
    if (f.field != FieldTag::real)
        throw Error(Errc::invalid_input, "affine regularity is defined for real maps");
    return scan_subsets(f, k, r, tol, budget,
                        [&](const VertTuple& subset) -> std::pair<bool, std::size_t> {
                            const std::size_t k_sz = subset.size(), w = f.n_dims;
                            if (k_sz == 1) return {true, 0};
                            std::vector<double> diffs((k_sz - 1) * w);
                            const double* base = f.row(subset[0]);
                            for (std::size_t i = 1; i < k_sz; ++i) {
                                const double* ri = f.row(subset[i]);
                                for (std::size_t t = 0; t < w; ++t)
                                    diffs[(i - 1) * w + t] = ri[t] - base[t];
                            }
                            RankInfo info = numerical_rank(diffs, k_sz - 1, w, tol);
                            return {info.full, info.rank};
                        });
}

ProbeResult probe_kr_regular(const SampledMap& f, int k, double r, double tol,
                             std::size_t samples, std::uint64_t seed) {
    f.validate();
    if (!(tol > 0)) throw Error(Errc::tolerance_invalid, "tolerance must be positive");
    const int n = static_cast<int>(f.domain.size());
    if (k < 1 || k > n) throw Error(Errc::invalid_input, "need 1 <= k <= |X|");
    std::mt19937_64 rng(seed);
    ProbeResult out;
    VertTuple subset(k);
    for (std::size_t s = 0; s < samples; ++s) {
        // Uniform k-subset by partial shuffle over indices.
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        for (int i = 0; i < k; ++i) {
            std::uniform_int_distribution<int> pick(i, n - 1);
            std::swap(idx[i], idx[pick(rng)]);
        }
        std::copy(idx.begin(), idx.begin() + k, subset.begin());
        std::sort(subset.begin(), subset.end());
        ++out.samples_tried;
        if (!(separation(subset, f.domain) > 2 * r)) continue;
        std::size_t m = 0, w = 0;
        auto rows = subset_rows(f, subset, m, w);
        RankInfo info = numerical_rank(rows, m, w, tol);
        if (!info.full) {
            out.witness_found = true;
            RegularityWitness wit;
            for (int v : subset) wit.subset.push_back(f.domain.point(v));
            wit.separation = separation(subset, f.domain);
            wit.numerical_rank =
                f.field == FieldTag::real ? info.rank : info.rank / 2;
            out.witness = std::move(wit);
            break;
        }
    }
    return out;
}

RealizationCheck realization_check(const SampledMap& f, int k, double r, double tol,
                                   std::size_t budget) {
    if (f.field != FieldTag::real)
        throw Error(Errc::invalid_input, "realization check is defined for real maps");
    RealizationCheck out;
    out.passed = true;
    for (int l = 2; l <= k; ++l) {
        auto verdict = is_affine_kr_regular(f, l, r, tol, budget);
        if (!verdict.passed) {
            out.passed = false;
            out.failed_level = l;
            break;
        }
    }
    // Per-simplex certificates for the independence complex at radius r.
    FilteredComplex ind = build_independence_filtration(f.domain, k, budget);
    Snapshot snap = ind.snapshot(r);
    for (int q = 1; q <= snap.dim(); ++q)
        for (const auto& s : snap.simplices(q)) {
            SimplexCertificate cert;
            for (int v : s) cert.verts.push_back(f.domain.point(v));
            const std::size_t k_sz = s.size(), w = f.n_dims;
            std::vector<double> diffs((k_sz - 1) * w);
            const double* base = f.row(s[0]);
            for (std::size_t i = 1; i < k_sz; ++i) {
                const double* ri = f.row(s[i]);
                for (std::size_t t = 0; t < w; ++t) diffs[(i - 1) * w + t] = ri[t] - base[t];
            }
            RankInfo info = numerical_rank(diffs, k_sz - 1, w, tol);
            cert.affinely_independent = info.full;
            cert.min_singular_ratio = info.sigma_ratio;
            out.certificates.push_back(std::move(cert));
        }
    return out;
}

SampledMap restrict_map(const SampledMap& f, const std::vector<std::string>& subset,
                        const FiniteMetricSpace& intrinsic) {
    f.validate();
    auto verdict = metric_inheritance_check(f.domain, subset, intrinsic);
    if (!verdict.inherited)
        throw Error(Errc::not_inherited, "intrinsic metric differs on (" + verdict.witness_a +
                                             "," + verdict.witness_b + ")");
    SampledMap out;
    out.domain = intrinsic;
    out.field = f.field;
    out.n_dims = f.n_dims;
    out.values.resize(intrinsic.size() * f.row_width());
    for (std::size_t i = 0; i < intrinsic.size(); ++i) {
        auto src = f.domain.index_of(intrinsic.point(i));
        if (!src) throw Error(Errc::invalid_input, "subset point missing from the domain");
        std::copy(f.row(*src), f.row(*src) + f.row_width(),
                  out.values.begin() + i * f.row_width());
    }
    out.validate();
    return out;
}

SampledMap moment_curve_map(const std::vector<double>& params, std::size_t n_dims) {
    std::vector<std::string> ids;
    std::vector<std::vector<double>> dist(params.size(), std::vector<double>(params.size()));
    int width = 1;
    for (std::size_t v = params.size() > 0 ? params.size() - 1 : 0; v >= 10; v /= 10) ++width;
    for (std::size_t i = 0; i < params.size(); ++i) {
        std::string s = std::to_string(i);
        ids.push_back("t" + std::string(width - s.size(), '0') + s);
        for (std::size_t j = 0; j < params.size(); ++j)
            dist[i][j] = std::fabs(params[i] - params[j]);
    }
    SampledMap f;
    f.domain = FiniteMetricSpace::create(ids, dist);
    f.field = FieldTag::real;
    f.n_dims = n_dims;
    f.values.resize(params.size() * n_dims);
    for (std::size_t i = 0; i < params.size(); ++i) {
        auto idx = f.domain.index_of(ids[i]);
        double t = params[i], p = 1;
        for (std::size_t d = 0; d < n_dims; ++d) {
            f.values[*idx * n_dims + d] = p;
            p *= t;
        }
    }
    f.validate();
    return f;
}

} // namespace confpersist
