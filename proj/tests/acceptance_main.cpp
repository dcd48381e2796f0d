// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include "confpersist/cli.hpp"
#include "confpersist/cochain.hpp"
#include "confpersist/complex.hpp"
#include "confpersist/covering.hpp"
#include "confpersist/obstruction.hpp"
#include "confpersist/packing.hpp"
#include "confpersist/persistence.hpp"
#include "confpersist/regular.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace confpersist;

namespace {

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;
    std::function<bool(std::string&)> body;
};

bool run_criterion(const Criterion& c) {
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = c.body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
        ok = false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = secs < c.time_limit_s;
    std::printf("[%s] %d. %s (%.2fs, limit %.0fs)%s%s\n", ok && in_time ? "PASS" : "FAIL", c.id,
                c.name.c_str(), secs, c.time_limit_s, detail.empty() ? "" : " - ",
                detail.c_str());
    return ok && in_time;
}

bool mat_is_zero(const IntMat& m) {
    for (long long v : m.a)
        if (v) return false;
    return true;
}

// Criterion 1: boundary-squared and inclusion commutation audits on random
// weighted graphs and the cycle fixtures.
bool chain_complex_audit(std::string& detail) {
    std::vector<FiniteMetricSpace> spaces;
    std::mt19937_64 rng(101);
    for (int t = 0; t < 20; ++t) {
        int n = 5 + static_cast<int>(rng() % 8); // up to 12 vertices
        spaces.push_back(shortest_path_metric(fixtures::random_weighted_graph(rng, n, 4, true)));
    }
    spaces.push_back(shortest_path_metric(cycle_graph(6)));
    spaces.push_back(shortest_path_metric(cycle_graph(12)));

    long long failures = 0, checks = 0;
    for (const auto& space : spaces) {
        auto fc = build_independence_filtration(space, 3);
        std::vector<double> radii = fc.critical_radii();
        radii.push_back(0.0);
        for (int k = 2; k <= 3; ++k) {
            for (double r : radii) {
                IntMat dk = configuration_boundary(k, r, space);
                if (k >= 3) {
                    IntMat dk1 = configuration_boundary(k - 1, r, space);
                    if (!mat_is_zero(mat_mul(dk1, dk))) ++failures;
                }
                ++checks;
            }
            for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
                double r1 = radii[i], r2 = radii[i + 1];
                IntMat lhs =
                    mat_mul(configuration_boundary(k, r2, space),
                            configuration_inclusion(k, r1, r2, space));
                IntMat rhs = mat_mul(configuration_inclusion(k - 1, r1, r2, space),
                                     configuration_boundary(k, r1, space));
                if (!(lhs.a == rhs.a)) ++failures;
                ++checks;
            }
        }
    }
    detail = std::to_string(checks) + " checks, " + std::to_string(failures) + " failures";
    return failures == 0;
}

// Criterion 2: interval counts vs dense Gaussian elimination on every
// fixture complex below 500 simplices.
bool persistence_oracle_equivalence(std::string& detail) {
    std::vector<FilteredComplex> fixtures_list;
    fixtures_list.push_back(
        build_independence_filtration(shortest_path_metric(cycle_graph(6)), 3));
    fixtures_list.push_back(
        build_independence_filtration(shortest_path_metric(cycle_graph(12)), 3));
    fixtures_list.push_back(build_independence_filtration(sample_circle(12, 12.0), 3));
    fixtures_list.push_back(build_independence_filtration(sample_circle(24, 1.0), 2));
    {
        std::vector<std::string> ids{"a", "b", "c"};
        fixtures_list.push_back(build_independence_filtration(
            FiniteMetricSpace::create(ids, {{0, 2, 2}, {2, 0, 2}, {2, 2, 0}}), 3));
    }
    std::mt19937_64 rng(202);
    for (int t = 0; t < 4; ++t)
        fixtures_list.push_back(build_independence_filtration(
            shortest_path_metric(fixtures::random_weighted_graph(rng, 8, 4, true)), 3));

    long long mismatches = 0, points = 0;
    for (const auto& fc : fixtures_list) {
        if (fc.size() > 500) continue;
        int max_dim = fc.dim_cap();
        Barcode bc = compute_persistence(fc, max_dim);
        std::vector<double> radii = fc.critical_radii();
        radii.push_back(0.0);
        for (double r : radii) {
            Snapshot snap = fc.snapshot(r);
            for (int q = 0; q <= max_dim; ++q) {
                if (static_cast<long long>(bc.count_at(r, q)) != oracles::dense_betti(snap, q))
                    ++mismatches;
                ++points;
            }
        }
    }
    detail = std::to_string(points) + " comparison points";
    return mismatches == 0;
}

// Criterion 3: k!-sheeted coverings with free transitive deck action and a
// clean cocycle on the evenly sampled circle at delta = one step.
bool covering_soundness(std::string& detail) {
    long long fails = 0;
    // k = 1, 2, 3 on circles; 2 also on the two-pairs fixture.
    for (int k = 1; k <= 3; ++k) {
        auto circle = sample_circle(12, 12.0);
        auto build = build_config_rips(circle, k, 1.0, {1.0});
        if (build.complex.excluded_count() != 0) ++fails;
        auto rep = verify_covering(build.complex.snapshot(1.0), build.cocycle);
        long long want = 1;
        for (int i = 2; i <= k; ++i) want *= i;
        if (!rep.ok || rep.expected_fiber != want || !rep.fibers_uniform) ++fails;
        if (!rep.deck_action_free || !rep.deck_action_transitive) ++fails;
        if (rep.total_vertices != rep.base_vertices * static_cast<std::size_t>(want)) ++fails;
    }
    {
        auto build = build_config_rips(fixtures::two_far_pairs(), 2, 1.0, {1.0});
        auto rep = verify_covering(build.complex.snapshot(1.0), build.cocycle);
        if (!rep.ok || rep.expected_fiber != 2 || !rep.trivial_cover) ++fails;
    }
    {
        auto [rp2, cover] = fixtures::projective_plane6_cover();
        auto rep = verify_covering(rp2, cover);
        if (!rep.ok || rep.expected_fiber != 2) ++fails;
        if (rep.trivial_cover) ++fails; // the orientation cover is connected
    }
    detail = std::to_string(fails) + " failures";
    return fails == 0;
}

// Criterion 4: the 6-vertex projective plane, production pipeline vs the
// exhaustive 2^15 search.
bool characteristic_class_fixture(std::string& detail) {
    Snapshot rp2 = fixtures::projective_plane6();
    auto [snap, cover] = fixtures::projective_plane6_cover();
    (void)snap;
    Cochain a = w1_cochain(rp2, cover);

    bool ok = true;
    ok = ok && betti_of(rp2, 1, Ring::Z2).rank == 1; // H^1(;Z/2) = Z/2
    ok = ok && is_cocycle(a, rp2) && !is_coboundary(a, rp2).coboundary;

    Cochain aa = cup_product(a, a, rp2);
    ok = ok && !is_coboundary(aa, rp2).coboundary; // a cup a != 0

    auto bk = bockstein_c1(rp2, a, 2);
    ok = ok && bk.nonzero; // Bockstein(a) != 0 in H^2(;Z)
    Cochain twice = bk.c1;
    for (auto& v : twice.c) v *= 2;
    ok = ok && is_coboundary(twice, rp2).coboundary; // order two

    // Exhaustive oracle over all 2^15 1-cochains: cocycles, coboundaries,
    // and the nonvanishing of z cup z for every nontrivial class.
    auto classes = oracles::classify_1_cochains(rp2);
    std::uint64_t a_mask = 0;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (a.c[i]) a_mask |= std::uint64_t(1) << i;
    ok = ok && classes.cocycles.count(a_mask) == 1 && classes.coboundaries.count(a_mask) == 0;

    long long checked = 0;
    for (std::uint64_t mask : classes.cocycles) {
        bool trivial = classes.coboundaries.count(mask) > 0;
        Cochain z = Cochain::zero(rp2, 1, Ring::Z2);
        for (std::size_t i = 0; i < z.c.size(); ++i) z.c[i] = (mask >> i) & 1;
        bool lib_trivial = is_coboundary(z, rp2).coboundary;
        if (lib_trivial != trivial) ok = false;
        if (!trivial) {
            Cochain zz = cup_product(z, z, rp2);
            if (is_coboundary(zz, rp2).coboundary) ok = false; // a^2 generates H^2
        }
        ++checked;
    }
    detail = std::to_string(checked) + " cocycles classified";
    return ok;
}

// Criterion 5: end-to-end circle obstruction plus the regularity
// cross-check.
bool circle_obstruction_end_to_end(std::string& detail) {
    auto circle = sample_circle(24, 1.0);
    const double step = 1.0 / 24;
    std::vector<double> grid{step, 1.5 * step, 2 * step, 2.5 * step, 3 * step, 3.5 * step};
    auto rep = obstruction_report(circle, 2, 0.0, step, grid, 2);

    bool ok = rep.n_lb_real == 3 && rep.excluded_triangles == 0;
    if (rep.scales.size() != 6) ok = false;
    for (const auto& s : rep.scales) {
        if (s.t_real != 1) ok = false; // w1 != 0 and w1^2 = 0 at every scale
    }

    // w1^2 really is a cocycle that bounds, at every scale.
    auto build = build_config_rips(circle, 2, step, grid, 3);
    for (double r : grid) {
        Snapshot snap = build.complex.snapshot(r);
        Cochain w = w1_cochain(snap, build.cocycle);
        if (!is_cocycle(w, snap)) ok = false;
        if (is_coboundary(w, snap).coboundary) ok = false;
        Cochain ww = cup_product(w, w, snap);
        if (!is_cocycle(ww, snap)) ok = false;
        if (!is_coboundary(ww, snap).coboundary) ok = false;
    }

    // Soundness: the planar identity map (N = 2) must fail 2-regularity,
    // and a moment-curve map into R^3 passes, consistent with N >= 3.
    SampledMap planar;
    planar.domain = circle;
    planar.field = FieldTag::real;
    planar.n_dims = 2;
    planar.values.resize(24 * 2);
    const double radius = 1.0 / (2 * 3.14159265358979323846);
    for (std::size_t i = 0; i < 24; ++i) {
        double angle = 2 * 3.14159265358979323846 * static_cast<double>(i) / 24;
        planar.values[i * 2] = radius * std::cos(angle);
        planar.values[i * 2 + 1] = radius * std::sin(angle);
    }
    auto flat = is_kr_regular(planar, 2, 0.0, 1e-8);
    ok = ok && !flat.passed && flat.witness.has_value(); // N = 2 < bound must fail

    std::vector<double> params;
    for (int i = 0; i < 24; ++i) params.push_back(0.05 * i + 0.003 * i * i);
    auto f3 = moment_curve_map(params, 3);
    auto lifted = is_kr_regular(f3, 2, 0.0, 1e-8);
    ok = ok && lifted.passed;
    ok = ok && 3 >= rep.n_lb_real; // the passing dimension respects the bound

    detail = "N_lb_real = " + std::to_string(rep.n_lb_real);
    return ok;
}

// Criterion 6: packing laws.
bool packing_laws(std::string& detail) {
    bool ok = true;
    struct Case {
        std::size_t n;
        int k;
    };
    for (auto [n, k] : {Case{12, 2}, Case{12, 3}, Case{24, 4}}) {
        auto circle = sample_circle(n, 1.0);
        auto res = max_packing_radius(circle, k, PackingMode::exact);
        if (res.r_star != 1.0 / (2 * k)) ok = false; // exact to machine precision
    }
    auto c12 = shortest_path_metric(cycle_graph(12));
    auto res = max_packing_radius(c12, 3, PackingMode::exact);
    ok = ok && res.r_star == 2 &&
         res.witness == std::vector<std::string>{"v00", "v04", "v08"};
    detail = "r_star(C12, k=3) = " + format_sig12(res.r_star);
    return ok;
}

// Criterion 7: monotonicity and restriction on the moment-curve fixture.
bool regularity_monotonicity(std::string& detail) {
    auto f = moment_curve_map({1, 2, 3, 5, 8}, 3);
    bool ok = is_kr_regular(f, 3, 0.0, 1e-8).passed;
    ok = ok && is_kr_regular(f, 2, 0.0, 1e-8).passed; // k' <= k
    for (double r : {0.25, 0.5, 1.0, 2.0, 4.0})
        ok = ok && is_kr_regular(f, 3, r, 1e-8).passed; // r' >= r

    // Restriction preserves the verdict on inherited subsets.
    std::vector<std::string> sub{"t0", "t2", "t4"};
    std::vector<std::vector<double>> d(3, std::vector<double>(3, 0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            d[i][j] = f.domain.dist(*f.domain.index_of(sub[i]), *f.domain.index_of(sub[j]));
    auto intrinsic = FiniteMetricSpace::create(sub, d);
    auto g = restrict_map(f, sub, intrinsic);
    ok = ok && is_kr_regular(g, 3, 0.0, 1e-8).passed;
    ok = ok && is_kr_regular(g, 2, 0.0, 1e-8).passed;
    detail = "linear+affine+restriction";
    return ok;
}

// Criterion 8: cochain-level restriction of w1 across every grid pair.
bool persistence_functoriality(std::string& detail) {
    auto circle = sample_circle(24, 1.0);
    const double step = 1.0 / 24;
    std::vector<double> grid{step, 1.5 * step, 2 * step, 2.5 * step, 3 * step, 3.5 * step};
    auto build = build_config_rips(circle, 2, step, grid, 2);
    bool ok = true;
    long long pairs = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        Snapshot big = build.complex.snapshot(grid[i]);
        Cochain w_big = w1_cochain(big, build.cocycle);
        for (std::size_t j = i; j < grid.size(); ++j) {
            Snapshot small_snap = build.complex.snapshot(grid[j]); // r1 >= r2 subcomplex
            Cochain restricted = restrict_cochain(w_big, big, small_snap);
            Cochain direct = w1_cochain(small_snap, build.cocycle);
            if (!(restricted.c == direct.c)) ok = false;
            ++pairs;
        }
    }
    detail = std::to_string(pairs) + " grid pairs, exact equality";
    return ok;
}

// Criterion 9: subdivision isometry on random integer-weighted graphs.
bool subdivision_isometry(std::string& detail) {
    std::mt19937_64 rng(303);
    bool ok = true;
    for (int t = 0; t < 10; ++t) {
        auto g = fixtures::random_weighted_graph(rng, 7, 5, true);
        auto weighted = shortest_path_metric(g);
        auto unit = shortest_path_metric(subdivide(g).unit);
        for (const auto& u : g.vertices)
            for (const auto& v : g.vertices) {
                double a = weighted.dist(*weighted.index_of(u), *weighted.index_of(v));
                double b = unit.dist(*unit.index_of(u), *unit.index_of(v));
                if (a != b) ok = false; // exact, integer arithmetic
            }
    }
    detail = "10 graphs, exact";
    return ok;
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "chain-complex audit (dd = 0 and inclusion squares)", 10.0, chain_complex_audit},
        {2, "persistence/oracle equivalence", 30.0, persistence_oracle_equivalence},
        {3, "covering soundness (k! sheets, free deck action)", 30.0, covering_soundness},
        {4, "characteristic classes on the projective plane", 5.0,
         characteristic_class_fixture},
        {5, "circle obstruction end-to-end", 60.0, circle_obstruction_end_to_end},
        {6, "packing laws", 5.0, packing_laws},
        {7, "regularity monotonicity and restriction", 5.0, regularity_monotonicity},
        {8, "persistence functoriality of w1", 5.0, persistence_functoriality},
        {9, "subdivision isometry", 5.0, subdivision_isometry},
    };
    int failed = 0;
    for (const auto& c : criteria)
        if (!run_criterion(c)) ++failed;
    if (failed) {
        std::printf("%d criterion(s) failed\n", failed);
        return 1;
    }
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return 0;
}
