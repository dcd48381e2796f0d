#include "confpersist/obstruction.hpp"

#include "confpersist/errors.hpp"

#include <algorithm>
#include <cmath>

namespace confpersist {

SwPowerResult sw_power_max_t(const Snapshot& k, const Cochain& w1, int t_max) {
    if (w1.degree != 1 || w1.ring != Ring::Z2)
        throw Error(Errc::invalid_input, "sw_power_max_t expects a Z/2 1-cochain");
    if (!is_cocycle(w1, k)) throw Error(Errc::not_a_cocycle, "w1 is not closed");

    SwPowerResult out;
    out.truncated = k.dim() < t_max;
    Cochain power = w1;
    int best = 0;
    for (int t = 1; t <= t_max; ++t) {
        if (t > 1) power = cup_product(power, w1, k);
        if (t > k.dim()) break; // no t-simplices: the power is the zero cochain
        if (!is_coboundary(power, k).coboundary) best = t;
    }
    out.t = best;
    return out;
}

BocksteinResult bockstein_c1(const Snapshot& k_complex, const Cochain& w1, int sheets_k) {
    if (sheets_k != 2) throw Error(Errc::not_k2, "Bockstein route needs k = 2");
    if (w1.degree != 1 || w1.ring != Ring::Z2)
        throw Error(Errc::invalid_input, "bockstein_c1 expects a Z/2 1-cochain");
    if (!is_cocycle(w1, k_complex)) throw Error(Errc::not_a_cocycle, "w1 is not closed");

    // Lift to a 0/1 integer cochain and halve its coboundary.
    Cochain lift = Cochain::zero(k_complex, 1, Ring::Z);
    for (std::size_t i = 0; i < w1.c.size(); ++i) lift.c[i] = w1.c[i] & 1;
    Cochain d_lift = coboundary(lift, k_complex);
    BocksteinResult out;
    out.c1 = Cochain::zero(k_complex, 2, Ring::Z);
    for (std::size_t i = 0; i < d_lift.c.size(); ++i) {
        if (d_lift.c[i] % 2 != 0)
            throw Error(Errc::odd_coboundary, "lift coboundary has an odd entry");
        out.c1.c[i] = d_lift.c[i] / 2;
    }
    out.nonzero = !is_coboundary(out.c1, k_complex).coboundary;
    return out;
}

ObstructionReport obstruction_report(const FiniteMetricSpace& space, int k, double r,
                                     double delta, const std::vector<double>& r_grid, int t_max,
                                     int dim_cap, std::size_t budget) {
    ObstructionReport rep;
    rep.k = k;
    rep.r = r;
    rep.delta = delta;
    rep.t_max = t_max;
    rep.dual_class_available = k <= 2;
    if (r_grid.empty()) {
        rep.empty_grid_warning = true;
        rep.n_lb_real = k;
        if (k == 2) rep.n_lb_complex = k;
        return rep;
    }

    std::vector<double> abs_grid;
    abs_grid.reserve(r_grid.size());
    for (double rp : r_grid) {
        if (rp < 0) throw Error(Errc::invalid_input, "grid offsets must be nonnegative");
        abs_grid.push_back(rp + r);
    }
    if (dim_cap < 0) dim_cap = rep.dual_class_available ? 2 * t_max + 1 : t_max + 1;

    auto build = build_config_rips(space, k, delta, abs_grid, dim_cap, budget);
    rep.excluded_triangles = build.complex.excluded_count();

    int best_real = 0;
    int best_complex = 0;
    std::vector<double> sorted_grid = r_grid;
    std::sort(sorted_grid.begin(), sorted_grid.end());
    for (double rp : sorted_grid) {
        ScaleRecord rec;
        rec.r_prime = rp;
        rec.r_abs = rp + r;
        Snapshot snap = build.complex.snapshot(rec.r_abs);
        rec.vertices = snap.count(0);
        rec.edges = snap.count(1);
        if (rec.vertices > 0) {
            Cochain w1c = w1_cochain(snap, build.cocycle);
            SwPowerResult sw = sw_power_max_t(snap, w1c, t_max);
            rec.t_real = sw.t;
            rec.t_real_truncated = sw.truncated;
            best_real = std::max(best_real, sw.t);
            if (k == 2) {
                BocksteinResult bk = bockstein_c1(snap, w1c, 2);
                int tc = 0;
                if (bk.nonzero) {
                    tc = 1;
                    Cochain power = bk.c1;
                    for (int t = 2; t <= t_max; ++t) {
                        power = cup_product(power, bk.c1, snap);
                        if (2 * t > snap.dim()) break;
                        if (!is_coboundary(power, snap).coboundary) tc = t;
                    }
                }
                rec.t_complex = tc;
                best_complex = std::max(best_complex, tc);
            }
        }
        rep.scales.push_back(rec);
    }
    rep.n_lb_real = best_real + k;
    if (k == 2) rep.n_lb_complex = best_complex + k;
    return rep;
}

} // namespace confpersist
