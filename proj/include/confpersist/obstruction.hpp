#pragma once

#include "confpersist/cochain.hpp"
#include "confpersist/covering.hpp"

#include <optional>
#include <vector>

namespace confpersist {

struct SwPowerResult {
    int t = 0;          // largest t <= t_max with w1^t not a coboundary
    bool truncated = false; // complex dimension < t_max
};

// Cup powers of the sign class; returns the largest exponent whose power is
// not a coboundary, 0 when w1 itself is one.
SwPowerResult sw_power_max_t(const Snapshot& k, const Cochain& w1, int t_max);

struct BocksteinResult {
    Cochain c1;        // integral 2-cocycle, (delta of the 0/1 lift)/2
    bool nonzero = false; // not an integral coboundary
};

// Integral Bockstein representative of a Z/2 1-cocycle; only meaningful for
// k = 2 sheets (NotK2 otherwise). 2*c1 is the coboundary of the lift.
BocksteinResult bockstein_c1(const Snapshot& k_complex, const Cochain& w1, int sheets_k);

struct ScaleRecord {
    double r_prime = 0; // grid offset
    double r_abs = 0;   // r_prime + r
    int t_real = 0;
    bool t_real_truncated = false;
    std::optional<int> t_complex; // k = 2 only
    std::size_t vertices = 0;
    std::size_t edges = 0;
};

struct ObstructionReport {
    int k = 1;
    double r = 0;
    double delta = 0;
    int t_max = 0;
    std::vector<ScaleRecord> scales;
    int n_lb_real = 1;                 // max t_real + k (real dimensions)
    std::optional<int> n_lb_complex;   // max t_complex + k (complex dimensions)
    bool dual_class_available = true;  // false for k >= 3 (w1-only report)
    bool empty_grid_warning = false;
    std::size_t excluded_triangles = 0;
    // On the vertex set alone the configuration spaces are discrete, so all
    // positive-degree classes vanish; reported alongside the model's answer.
    int discrete_model_t = 0;
};

ObstructionReport obstruction_report(const FiniteMetricSpace& space, int k, double r,
                                     double delta, const std::vector<double>& r_grid, int t_max,
                                     int dim_cap = -1, std::size_t budget = kDefaultBudget);

} // namespace confpersist
