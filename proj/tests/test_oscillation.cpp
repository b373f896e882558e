#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fock/oscillation.hpp"
#include "fock/symbol.hpp"

#include <cmath>

using namespace fock;

TEST_CASE("oscillation of a constant is zero") {
    SymbolFunction f = constant_symbol(Complex(3.0, -1.0));
    for (double m : {0.0, 2.0, 10.0})
        CHECK(oscillation(f, point1(Complex(m, 0.0)), 1.0, 128) == 0.0);
}

TEST_CASE("oscillation of a monotone radial symbol hits the ball rim") {
    // f = 1/(1 + |z|^2): on B(z, r) the extreme value sits at |w| = |z| - r,
    // so Osc = f(|z|-r) - f(|z|) exactly; the sampler contains that point.
    SymbolFunction f = radial_symbol([](double s) { return Complex(1.0 / (1.0 + s)); }, 1.0);
    double z = 10.0, r = 1.0;
    double oracle = 1.0 / (1.0 + 81.0) - 1.0 / (1.0 + 100.0);
    double got = oscillation(f, point1(Complex(z, 0.0)), r, 256);
    CHECK(got == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(got <= oracle + 1e-15);  // sampled sup never exceeds the true sup

    // dense independent sampling agrees
    double dense = 0.0;
    for (int k = 0; k <= 2000; ++k) {
        double th = 2.0 * M_PI * k / 2000.0;
        for (double rho : {0.25, 0.5, 0.75, 1.0}) {
            Point w = point1(Complex(z + rho * std::cos(th), rho * std::sin(th)));
            dense = std::max(dense,
                             std::abs(f(w) - f(point1(Complex(z, 0.0)))));
        }
    }
    CHECK(got >= dense - 1e-12);
}

TEST_CASE("oscillation validates its inputs") {
    SymbolFunction f = constant_symbol(1.0);
    CHECK_THROWS_AS(oscillation(f, point1(Complex(0.0)), 0.0, 128), std::invalid_argument);
    CHECK_THROWS_AS(oscillation(f, point1(Complex(0.0)), 1.0, 8), std::invalid_argument);
}

TEST_CASE("vo verdicts") {
    std::vector<double> near{5.0, 10.0, 20.0, 40.0};
    std::vector<double> far{25.0, 50.0, 100.0, 200.0};

    CHECK(vo_verdict(constant_symbol(2.0), near, 1.0, 1e-2, 1).verdict == VoVerdict::Vo);
    CHECK(vo_verdict(angular_symbol(1), far, 1.0, 1e-2, 1).verdict == VoVerdict::Vo);

    SymbolFunction osc =
        radial_symbol([](double s) { return Complex(std::sin(s), 0.0); }, 1.0);
    CHECK(vo_verdict(osc, near, 1.0, 1e-2, 1).verdict == VoVerdict::NotVo);

    // compactly supported bump: oscillation vanishes beyond the support
    SymbolFunction b = bump_symbol(Complex(0.0), 2.0, 1.0);
    VoReport rep = vo_verdict(b, near, 1.0, 1e-2, 1);
    CHECK(rep.verdict == VoVerdict::Vo);
    CHECK(rep.curve.values.back() == 0.0);

    CHECK_THROWS_AS(vo_verdict(constant_symbol(1.0), {5.0, 4.0, 3.0}, 1.0, 1e-2, 1),
                    std::invalid_argument);
}

TEST_CASE("berezin route: vmo report for a vanishing symbol") {
    FockParams params(1, 2.0, 1.0);
    QuadratureGrid grid = build_grid_nu(1, 1.0, GridScheme::HermiteTensor, 15);
    std::vector<double> radii{2.0, 4.0, 6.0, 8.0};
    EscapeSchedule sched = radial_schedule(6.0, 14.0, 4);

    SymbolFunction f = sum_symbol(constant_symbol(1.0), bump_symbol(Complex(0.0), 1.0, 0.5));
    VmoReport rep = vmo_via_berezin(f, radii, params, grid, sched);
    REQUIRE(rep.radii.size() == 4);
    REQUIRE(rep.berezin_values.size() == 4);
    REQUIRE(rep.mean_oscillation.size() == 4);
    // f~ -> 1 along the shells, mean oscillation -> 0
    CHECK(std::abs(rep.berezin_values.back() - Complex(1.0)) <= 1e-6);
    CHECK(rep.mean_oscillation.back() < 1e-3);
    CHECK(rep.mean_oscillation.back() <= rep.mean_oscillation.front());
    REQUIRE(rep.proxy.set.points.size() == 1);
    CHECK(std::abs(rep.proxy.set.points[0] - Complex(1.0)) <= 1e-3);
}
