#include "confpersist/errors.hpp"
#include "confpersist/obstruction.hpp"
#include "confpersist/regular.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <cmath>

using namespace confpersist;

namespace {

constexpr double kTol = 1e-8;

SampledMap planar_circle_map(std::size_t n, double L) {
    SampledMap f;
    f.domain = sample_circle(n, L);
    f.field = FieldTag::real;
    f.n_dims = 2;
    f.values.resize(n * 2);
    const double radius = L / (2 * 3.14159265358979323846);
    for (std::size_t i = 0; i < n; ++i) {
        // Point ids are sorted numerically; recover the sample index.
        std::size_t sample = i;
        double angle = 2 * 3.14159265358979323846 * static_cast<double>(sample) / n;
        auto idx = f.domain.index_of(f.domain.point(i));
        (void)idx;
        f.values[i * 2] = radius * std::cos(angle);
        f.values[i * 2 + 1] = radius * std::sin(angle);
    }
    f.validate();
    return f;
}

} // namespace

TEST_CASE("moment curve is 3-regular on three points") {
    auto f = moment_curve_map({1, 2, 3}, 3);
    auto v = is_kr_regular(f, 3, 0.0, kTol);
    CHECK(v.passed); // Vandermonde determinant (2-1)(3-1)(3-2) = 2
    CHECK(v.subsets_checked == 1);
}

TEST_CASE("antipodal planar points are linearly dependent") {
    std::vector<std::string> ids{"p", "q"};
    auto dom = FiniteMetricSpace::create(ids, {{0, 2}, {2, 0}});
    SampledMap f;
    f.domain = dom;
    f.field = FieldTag::real;
    f.n_dims = 2;
    f.values = {1, 0.5, -1, -0.5}; // q = -p
    auto v = is_kr_regular(f, 2, 0.1, kTol);
    CHECK_FALSE(v.passed);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->subset == std::vector<std::string>{"p", "q"});
    CHECK(v.witness->numerical_rank == 1);
}

TEST_CASE("three vectors in the plane cannot be 3-regular") {
    auto f = moment_curve_map({1, 2, 3}, 2); // t -> (1, t)
    auto v = is_kr_regular(f, 3, 0.0, kTol);
    CHECK_FALSE(v.passed);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->numerical_rank <= 2);
}

TEST_CASE("affine regularity") {
    // Three non-collinear planar points.
    std::vector<std::string> ids{"a", "b", "c"};
    auto dom = FiniteMetricSpace::create(ids, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    SampledMap tri;
    tri.domain = dom;
    tri.field = FieldTag::real;
    tri.n_dims = 2;
    tri.values = {0, 0, 1, 0, 0, 1};
    CHECK(is_affine_kr_regular(tri, 3, 0.0, kTol).passed);

    SampledMap collinear = tri;
    collinear.values = {0, 0, 1, 0, 2, 0};
    CHECK_FALSE(is_affine_kr_regular(collinear, 3, 0.0, kTol).passed);

    // Linear regularity implies affine regularity on the moment fixture.
    auto f = moment_curve_map({1, 2, 3, 5, 8}, 3);
    for (int k : {2, 3}) {
        auto lin = is_kr_regular(f, k, 0.0, kTol);
        auto aff = is_affine_kr_regular(f, k, 0.0, kTol);
        REQUIRE(lin.passed);
        CHECK(aff.passed);
    }
}

TEST_CASE("affine check rejects complex maps") {
    SampledMap f;
    std::vector<std::string> ids{"a", "b"};
    f.domain = FiniteMetricSpace::create(ids, {{0, 1}, {1, 0}});
    f.field = FieldTag::complex_;
    f.n_dims = 1;
    f.values = {1, 0, 0, 1};
    CHECK_THROWS_AS(is_affine_kr_regular(f, 2, 0.0, kTol), Error);
}

TEST_CASE("complex rank is conjugate-aware") {
    // Rows (1, i) and (i, -1) = i*(1, i): complex rank 1, real rank 2.
    std::vector<std::string> ids{"a", "b"};
    SampledMap f;
    f.domain = FiniteMetricSpace::create(ids, {{0, 3}, {3, 0}});
    f.field = FieldTag::complex_;
    f.n_dims = 2;
    f.values = {1, 0, 0, 1,   // (1, i)
                0, 1, -1, 0}; // (i, -1)
    auto v = is_kr_regular(f, 2, 0.1, kTol);
    CHECK_FALSE(v.passed);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->numerical_rank == 1);

    // Complex-independent rows pass.
    SampledMap g = f;
    g.values = {1, 0, 0, 0,  // (1, 0)
                0, 0, 1, 0}; // (0, 1)
    CHECK(is_kr_regular(g, 2, 0.1, kTol).passed);
}

TEST_CASE("realization_check on the moment curve") {
    auto f = moment_curve_map({1, 2, 3, 5, 8}, 3);
    auto rc = realization_check(f, 3, 0.0, kTol);
    CHECK(rc.passed); // all C(5,3) Vandermonde minors nonzero
    CHECK(rc.failed_level == 0);
    // Certificates cover the 1- and 2-simplices of Ind at r=0.
    CHECK(rc.certificates.size() == 10 + 10);
    for (const auto& c : rc.certificates) CHECK(c.affinely_independent);

    SampledMap constant = f;
    std::fill(constant.values.begin(), constant.values.end(), 1.0);
    auto bad = realization_check(constant, 3, 0.0, kTol);
    CHECK_FALSE(bad.passed);
    CHECK(bad.failed_level == 2);
}

TEST_CASE("affine pass with linear failure still realizes") {
    // N = k-1 = 2 with generic values: 3 points affinely independent in the
    // plane, but 3 vectors in R^2 are linearly dependent.
    std::vector<std::string> ids{"a", "b", "c"};
    auto dom = FiniteMetricSpace::create(ids, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    SampledMap f;
    f.domain = dom;
    f.field = FieldTag::real;
    f.n_dims = 2;
    f.values = {0.13, 0.71, 1.02, 0.24, 0.55, 1.61};
    CHECK_FALSE(is_kr_regular(f, 3, 0.0, kTol).passed);
    auto rc = realization_check(f, 3, 0.0, kTol);
    CHECK(rc.passed);
}

TEST_CASE("monotonicity in k and r on the moment fixture") {
    auto f = moment_curve_map({1, 2, 3, 5, 8}, 3);
    REQUIRE(is_kr_regular(f, 3, 0.0, kTol).passed);
    // Passing (3, 0) implies (2, 0) and (3, r) for r > 0.
    CHECK(is_kr_regular(f, 2, 0.0, kTol).passed);
    for (double r : {0.25, 0.5, 1.0, 2.0}) CHECK(is_kr_regular(f, 3, r, kTol).passed);
}

TEST_CASE("restrict_map") {
    auto f = moment_curve_map({1, 2, 3, 5, 8}, 3);

    // Whole space: identity restriction.
    auto whole = restrict_map(f, f.domain.points(), f.domain);
    CHECK(whole.values == f.values);

    // Three of five points with the inherited line metric stay 3-regular.
    std::vector<std::string> sub{"t0", "t1", "t2"};
    std::vector<std::vector<double>> d(3, std::vector<double>(3, 0));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            d[i][j] = f.domain.dist(*f.domain.index_of(sub[i]), *f.domain.index_of(sub[j]));
    auto intrinsic = FiniteMetricSpace::create(sub, d);
    auto g = restrict_map(f, sub, intrinsic);
    CHECK(g.domain.size() == 3);
    CHECK(is_kr_regular(g, 3, 0.0, kTol).passed);

    // A subset violating inheritance is rejected.
    auto c4 = shortest_path_metric(cycle_graph(4));
    SampledMap h;
    h.domain = c4;
    h.field = FieldTag::real;
    h.n_dims = 1;
    h.values = {1, 2, 3, 4};
    auto path4 = shortest_path_metric(path_graph({"v0", "v1", "v2", "v3"}, {1, 1, 1}));
    CHECK_THROWS_AS(restrict_map(h, {"v0", "v1", "v2", "v3"}, path4), Error);
    try {
        restrict_map(h, {"v0", "v1", "v2", "v3"}, path4);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_inherited);
    }
}

TEST_CASE("probe mode finds witnesses but never certifies") {
    // Antipodal pairs on the planar circle are easy to hit by sampling.
    auto planar = planar_circle_map(24, 1.0);
    auto probe = probe_kr_regular(planar, 2, 0.01, kTol, 500, 9);
    CHECK_FALSE(probe.certifying);
    CHECK(probe.witness_found);
    REQUIRE(probe.witness.has_value());

    // On a passing fixture the probe finds nothing, and still certifies
    // nothing.
    auto f = moment_curve_map({1, 2, 3, 5, 8}, 3);
    auto clean = probe_kr_regular(f, 3, 0.0, kTol, 200, 9);
    CHECK_FALSE(clean.certifying);
    CHECK_FALSE(clean.witness_found);
}

TEST_CASE("tolerance must be positive") {
    auto f = moment_curve_map({1, 2, 3}, 3);
    CHECK_THROWS_AS(is_kr_regular(f, 3, 0.0, 0.0), Error);
    CHECK_THROWS_AS(is_kr_regular(f, 3, 0.0, -1.0), Error);
}

TEST_CASE("soundness cross-check against the obstruction bound") {
    // The planar identity map on the 24-sample circle fails 2-regularity,
    // while the obstruction bound for k=2 is 3 > 2; a moment-curve map to
    // R^3 passes, consistent with N = 3 >= 3.
    auto planar = planar_circle_map(24, 1.0);
    CHECK_FALSE(is_kr_regular(planar, 2, 0.01, kTol).passed);

    double step = 1.0 / 24;
    auto rep = obstruction_report(planar.domain, 2, 0.01, step, {2 * step, 3 * step}, 2);
    CHECK(rep.n_lb_real == 3);

    std::vector<double> params;
    for (int i = 0; i < 24; ++i) params.push_back(0.1 * i + 0.01 * i * i);
    auto f3 = moment_curve_map(params, 3);
    CHECK(is_kr_regular(f3, 2, 0.0, kTol).passed);
}
