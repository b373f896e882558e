#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fock/lower_norm.hpp"
#include "fock/spectra.hpp"
#include "fock/symbol.hpp"

#include <cmath>
#include <limits>

using namespace fock;

TEST_CASE("cluster points: merging, means, separation") {
    std::vector<Complex> raw{{1.0, 0.0}, {1.0005, 0.0}, {2.0, 0.0}, {0.9995, 0.0}};
    PointSet set = cluster_points(raw, 1e-2);
    REQUIRE(set.points.size() == 2);
    int big = std::abs(set.points[0] - Complex(1.0)) < 0.5 ? 0 : 1;
    CHECK(set.multiplicities[big] == 3);
    CHECK(std::abs(set.points[big] - Complex(1.0)) <= 1e-3);
    for (size_t a = 0; a < set.points.size(); ++a)
        for (size_t b = a + 1; b < set.points.size(); ++b)
            CHECK(std::abs(set.points[a] - set.points[b]) > set.cluster_tol);
}

TEST_CASE("hausdorff distance") {
    std::vector<Complex> a{{0.0, 0.0}, {1.0, 0.0}};
    std::vector<Complex> b{{0.0, 0.1}};
    CHECK(hausdorff_distance(a, a) == 0.0);
    CHECK(hausdorff_distance(a, b) == doctest::Approx(std::abs(Complex(1.0, -0.1))));
    std::vector<Complex> empty;
    CHECK(hausdorff_distance(empty, empty) == 0.0);
    CHECK(hausdorff_distance(a, empty) == std::numeric_limits<double>::infinity());
}

TEST_CASE("escape schedules validate") {
    CHECK_THROWS_AS(EscapeSchedule({5.0}), std::invalid_argument);
    CHECK_THROWS_AS(EscapeSchedule({5.0, 4.0}), std::invalid_argument);
    CHECK_THROWS_AS(EscapeSchedule({-1.0, 2.0}), std::invalid_argument);
    EscapeSchedule s = radial_schedule(2.0, 32.0, 5);
    REQUIRE(s.radii.size() == 5);
    CHECK(s.radii.front() == doctest::Approx(2.0));
    CHECK(s.radii.back() == doctest::Approx(32.0));
    CHECK(s.radii[2] == doctest::Approx(8.0));  // geometric spacing
}

TEST_CASE("sphere directions are deterministic unit vectors") {
    for (int n : {1, 3}) {
        std::vector<Point> d1 = sphere_directions(n, 32);
        std::vector<Point> d2 = sphere_directions(n, 32);
        REQUIRE(d1.size() == 32);
        for (size_t i = 0; i < d1.size(); ++i) {
            CHECK(std::abs(d1[i].norm() - 1.0) <= 1e-12);
            CHECK((d1[i] - d2[i]).norm() == 0.0);
        }
    }
}

TEST_CASE("boundary values of vo symbols") {
    SymbolFunction f = sum_symbol(constant_symbol(1.0), bump_symbol(Complex(0.0), 1.0, 0.5));
    BoundaryReport rep = essential_spectrum_vo(f, radial_schedule(6.0, 40.0, 5), 1);
    REQUIRE(rep.set.points.size() == 1);
    CHECK(std::abs(rep.set.points[0] - Complex(1.0)) <= 1e-3);
    CHECK(rep.vo_checked);
    CHECK_FALSE(rep.caveat);
    CHECK(rep.stabilized);

    // winding symbol: boundary set fills the unit circle
    BoundaryReport circ =
        essential_spectrum_vo(angular_symbol(1), radial_schedule(10.0, 200.0, 5), 1);
    CHECK_FALSE(circ.caveat);
    double worst = 0.0;
    for (Complex p : circ.set.points) worst = std::max(worst, std::abs(std::abs(p) - 1.0));
    CHECK(worst <= 1e-2);
    CHECK(circ.set.points.size() >= 32);
}

TEST_CASE("oscillating symbols get flagged") {
    SymbolFunction osc =
        radial_symbol([](double s) { return Complex(std::sin(s), 0.0); }, 1.0);
    BoundaryReport rep = essential_spectrum_vo(osc, radial_schedule(6.0, 60.0, 5), 1);
    CHECK(rep.caveat);
    CHECK_THROWS_AS(
        essential_norm_bounds(osc, FockParams(1, 2.0, 1.0), radial_schedule(6.0, 60.0, 5)),
        std::runtime_error);
}

TEST_CASE("essential norm intervals") {
    FockParams p2(1, 2.0, 1.0);
    SymbolFunction f = sum_symbol(constant_symbol(0.8), bump_symbol(Complex(0.0), 1.0, 0.5));
    EscapeSchedule sched = radial_schedule(6.0, 40.0, 5);
    NormInterval iv = essential_norm_bounds(f, p2, sched);
    CHECK(iv.p2_exact);
    CHECK(std::abs(iv.lower - 0.8) <= 1e-3);
    CHECK(iv.upper == iv.lower);

    // p != 2 with a supplied projection-norm bound widens the interval
    FockParams p4(1, 4.0, 1.0);
    NormInterval wide = essential_norm_bounds(f, p4, sched, 1.7);
    CHECK(wide.p2_exact);
    CHECK(wide.upper == doctest::Approx(1.7 * wide.lower));

    // p != 2 without a bound: p = 2 value with the disclaimer flag cleared
    NormInterval fallback = essential_norm_bounds(f, p4, sched);
    CHECK_FALSE(fallback.p2_exact);
    CHECK(fallback.upper == fallback.lower);
}

TEST_CASE("fredholm verdicts against the boundary set") {
    SymbolFunction f = angular_symbol(1);
    EscapeSchedule sched = radial_schedule(10.0, 200.0, 5);
    FredholmReport inside = fredholm_test_vo(f, Complex(0.0, 0.0), sched, 1);
    CHECK(inside.verdict == FredholmVerdict::Fredholm);
    CHECK(inside.distance == doctest::Approx(1.0).epsilon(1e-2));
    FredholmReport on = fredholm_test_vo(f, Complex(1.0, 0.0), sched, 1);
    CHECK(on.verdict == FredholmVerdict::NotFredholm);
    CHECK_FALSE(inside.caveat);
}

TEST_CASE("lower norms: svd value, minimizer, inverse law") {
    Eigen::MatrixXcd A(3, 3);
    A << Complex(2, 0), Complex(0, 0), Complex(0, 0),
         Complex(0, 0), Complex(1, 0), Complex(0, 0),
         Complex(0, 0), Complex(0, 0), Complex(0.5, 0);
    LowerNormReport full = lower_norm(A, full_mask(3));
    CHECK(full.value == doctest::Approx(0.5));
    CHECK(std::abs(full.minimizer(2)) == doctest::Approx(1.0));
    CHECK((A * full.minimizer).norm() == doctest::Approx(full.value));

    LowerNormReport sub = lower_norm(A, {0, 1});
    CHECK(sub.value == doctest::Approx(1.0));  // shrinking the support raises nu
    CHECK_THROWS_AS(lower_norm(A, {}), std::invalid_argument);
    CHECK_THROWS_AS(lower_norm(A, {7}), std::invalid_argument);
}

TEST_CASE("localized lower norm needs a dense enough center lattice") {
    FockParams params(1, 2.0, 1.0);
    GridOptions opts;
    opts.extent = 5.0;
    QuadratureGrid g = build_grid_nu(1, 1.0, GridScheme::Uniform, 10, opts);
    GridOperator A{Eigen::MatrixXcd::Identity(g.size(), g.size()), g, params};
    std::vector<int> F = full_mask(g.size());

    // r_t = 8 sqrt(2) / t; a single origin-centered ball covers extent 5 at t = 1
    LowerNormReport rep = localized_lower_norm(A, F, 1.0, {point1(Complex(0.0))});
    CHECK(rep.value == doctest::Approx(1.0));
    CHECK(rep.method == "svd/localized");
    CHECK(localized_radius(1.0, 1) == doctest::Approx(8.0 * std::sqrt(2.0)));

    // at t large the covering condition fails
    CHECK_THROWS_AS(localized_lower_norm(A, F, 4.0, {point1(Complex(0.0))}),
                    std::invalid_argument);
}
