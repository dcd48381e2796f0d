#pragma once

#include "confpersist/complex.hpp"
#include "confpersist/metric.hpp"
#include "confpersist/util.hpp"

#include <optional>
#include <string>
#include <vector>

namespace confpersist {

enum class FieldTag { real, complex_ };

// Sampled map X -> F^N: one row of coordinates per point of the domain.
// Complex values are stored interleaved (re, im), so a row has 2N entries.
struct SampledMap {
    FiniteMetricSpace domain;
    FieldTag field = FieldTag::real;
    std::size_t n_dims = 0;         // N over F
    std::vector<double> values;      // row-major, |domain| rows

    std::size_t row_width() const { return field == FieldTag::real ? n_dims : 2 * n_dims; }
    const double* row(std::size_t i) const { return values.data() + i * row_width(); }

    void validate() const;
};

struct RegularityWitness {
    std::vector<std::string> subset;
    double separation = 0;
    std::size_t numerical_rank = 0;
};

struct RegularityVerdict {
    bool passed = false;
    std::optional<RegularityWitness> witness;
    double tol = 0;
    std::size_t subsets_checked = 0;
};

// Exhaustive check: every k-subset with pairwise distances > 2r must have
// numerical rank k (smallest singular value > tol * largest).
RegularityVerdict is_kr_regular(const SampledMap& f, int k, double r, double tol,
                                std::size_t budget = kDefaultBudget);

// Affine variant (real maps): the k-1 difference vectors must have rank k-1.
RegularityVerdict is_affine_kr_regular(const SampledMap& f, int k, double r, double tol,
                                       std::size_t budget = kDefaultBudget);

struct ProbeResult {
    bool certifying = false;  // always false: sampling cannot certify a pass
    bool witness_found = false;
    std::optional<RegularityWitness> witness;
    std::size_t samples_tried = 0;
};

// Randomized subset sampling. Finding a witness disproves (k,r)-regularity;
// finding none proves nothing. The verdict path never uses this.
ProbeResult probe_kr_regular(const SampledMap& f, int k, double r, double tol,
                             std::size_t samples, std::uint64_t seed);

struct SimplexCertificate {
    std::vector<std::string> verts;
    bool affinely_independent = false;
    double min_singular_ratio = 0; // sigma_min / sigma_max of the difference matrix
};

struct RealizationCheck {
    bool passed = false;
    int failed_level = 0; // smallest l with a failing affine (l, r) check, 0 if passed
    std::vector<SimplexCertificate> certificates;
};

// Affine (l, r)-regularity for every l <= k certifies that f realizes the
// (k-1)-skeleton of the independence complex at radius r (and all larger
// radii); emits per-simplex certificates for the simplices at radius r.
RealizationCheck realization_check(const SampledMap& f, int k, double r, double tol,
                                   std::size_t budget = kDefaultBudget);

// Restriction to a subset carrying an inherited metric (NotInherited
// otherwise). `intrinsic` supplies the candidate metric on the subset.
SampledMap restrict_map(const SampledMap& f, const std::vector<std::string>& subset,
                        const FiniteMetricSpace& intrinsic);

// Moment-curve sample t -> (1, t, t^2, ..., t^{N-1}) over the given
// parameter values, with the real-line metric on the domain.
SampledMap moment_curve_map(const std::vector<double>& params, std::size_t n_dims);

// Eigenvalues of a dense symmetric matrix (cyclic Jacobi), ascending.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, std::size_t n);

} // namespace confpersist
