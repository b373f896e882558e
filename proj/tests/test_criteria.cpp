#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fock/criteria.hpp"

#include <cmath>

using namespace fock;

TEST_CASE("boundedness criterion matches the discriminant sign") {
    // exponent a<z,w> - b|z|^2 - c|w|^2 bounded iff 4bc - a^2 >= 0
    CHECK(boundedness_criterion(1.0, 1.0, 1.0).bounded);
    CHECK(boundedness_criterion(2.0, 1.0, 1.0).bounded);  // equality case
    CHECK_FALSE(boundedness_criterion(3.0, 1.0, 1.0).bounded);
    CHECK_FALSE(boundedness_criterion(2.0 + 1e-9, 1.0, 1.0).bounded);

    BoundednessVerdict v = boundedness_criterion(3.0, 1.0, 1.0);
    CHECK(v.witness_slope == doctest::Approx(1.0));  // sqrt(b/c)

    // along w = slope * z the exponent grows without bound when unbounded
    double a = 3.0, b = 1.0, c = 1.0, slope = v.witness_slope;
    auto exponent = [&](double r) { return a * slope * r * r - b * r * r - c * slope * slope * r * r; };
    CHECK(exponent(10.0) > exponent(1.0));
    CHECK(exponent(10.0) > 50.0);
}

TEST_CASE("grid sup agrees with the bounded verdict") {
    CHECK(exponent_grid_sup(1.0, 1.0, 1.0, 5.0, 200) <= 1.0 + 1e-12);
    CHECK(exponent_grid_sup(2.0, 1.0, 1.0, 5.0, 200) <= 1.0 + 1e-12);
    CHECK(exponent_grid_sup(3.0, 1.0, 1.0, 5.0, 200) > 1e6);
}

TEST_CASE("duality constant") {
    CHECK(duality_constant(FockParams(1, 2.0, 1.0)) == 1.0);  // exact at p = 2
    CHECK(duality_constant(FockParams(3, 2.0, 0.7)) == 1.0);

    // frozen high-precision oracle for n = 1, p = 4: 2 / (4^{1/4} (4/3)^{3/4})
    double oracle = 1.1397535284773888;
    CHECK(std::abs(duality_constant(FockParams(1, 4.0, 1.0)) - oracle) <= 1e-14);

    // p <-> q symmetry
    for (double p : {1.5, 2.5, 3.0, 7.0}) {
        FockParams a(2, p, 1.0), b(2, a.q(), 1.0);
        CHECK(std::abs(duality_constant(a) - duality_constant(b)) <= 1e-14);
    }

    // n multiplies the exponentials: c_n = c_1^n
    double c1 = duality_constant(FockParams(1, 3.0, 1.0));
    double c3 = duality_constant(FockParams(3, 3.0, 1.0));
    CHECK(std::abs(c3 - std::pow(c1, 3)) <= 1e-13);
}

TEST_CASE("hille-tamarkin integral is finite, monotone, and refinement-stable") {
    FockParams params(1, 2.0, 1.0);
    QuadratureGrid grid = build_grid(params, GridScheme::HermiteTensor, 40);
    double v0 = hille_tamarkin_integral(0.0, params, grid);
    double v1 = hille_tamarkin_integral(1.0, params, grid);
    double v2 = hille_tamarkin_integral(2.0, params, grid);
    CHECK(v0 == 0.0);
    CHECK(v1 > 0.0);
    CHECK(std::isfinite(v1));
    CHECK(v2 >= v1);
}

TEST_CASE("power sum bound") {
    CHECK(power_sum_bound_holds({1.0, 2.0, 3.0}, 2.0));
    CHECK(power_sum_bound_holds({0.0, 0.0}, 1.5));
    CHECK(power_sum_bound_holds({0.3, 0.3, 0.3, 0.3}, 5.0));
}
