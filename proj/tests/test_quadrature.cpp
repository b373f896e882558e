#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fock/quadrature.hpp"

#include <cmath>

using namespace fock;

namespace {

// E[|z|^{2k}] under the probability Gaussian on C^n with weight nu is
// Gamma(n + k) / (Gamma(n) nu^k).
double radial_moment(int n, int k, double nu) {
    double v = 1.0;
    for (int j = 0; j < k; ++j) v *= (n + j) / nu;
    return v;
}

double grid_radial_moment(const QuadratureGrid& g, int k) {
    Eigen::VectorXcd samples(g.size());
    for (int i = 0; i < g.size(); ++i) samples(i) = std::pow(g.nodes[i].squaredNorm(), k);
    return g.integrate(samples).real();
}

}  // namespace

TEST_CASE("gauss-hermite rule reproduces Gaussian moments") {
    // int x^{2k} e^{-x^2} dx = sqrt(pi) (2k-1)!! / 2^k
    for (int m : {5, 16, 48, 96}) {
        Eigen::VectorXd x, w;
        gauss_hermite(m, x, w);
        REQUIRE(x.size() == m);
        double oracle = std::sqrt(M_PI);
        for (int k = 0; 2 * k + 1 < 2 * m; ++k) {
            if (k > 0) oracle *= (2.0 * k - 1.0) / 2.0;
            if (k > 40) break;  // stay well inside double range
            double q = 0.0;
            for (int i = 0; i < m; ++i) q += w(i) * std::pow(x(i), 2 * k);
            CHECK(std::abs(q - oracle) <= 1e-13 * oracle);
        }
    }
}

TEST_CASE("gauss-hermite weights keep relative accuracy at extreme nodes") {
    // The extreme weights sit ~60-75 orders of magnitude below 1; a weight
    // computation with merely absolute accuracy returns noise here, which
    // high-degree integrands then amplify. Frozen multiprecision oracles.
    Eigen::VectorXd x, w;
    gauss_hermite(96, x, w);
    CHECK(std::abs(x(0) + 13.116130021662876) <= 1e-11);
    CHECK(std::abs(w(0) - 1.315337147702193e-75) <= 1e-11 * 1.315337147702193e-75);
    gauss_hermite(32, x, w);
    CHECK(std::abs(x(0) + 7.125813909830726) <= 1e-12);
    CHECK(std::abs(w(0) - 7.310676427383561e-23) <= 1e-11 * 7.310676427383561e-23);
}

TEST_CASE("gauss-laguerre rule reproduces factorial moments") {
    for (int m : {8, 40, 82}) {
        Eigen::VectorXd x, w;
        gauss_laguerre(m, x, w);
        double oracle = 1.0;
        for (int k = 0; 2 * k + 1 < 2 * m && k <= 30; ++k) {
            if (k > 0) oracle *= k;
            double q = 0.0;
            for (int i = 0; i < m; ++i) q += w(i) * std::pow(x(i), k);
            CHECK(std::abs(q - oracle) <= 1e-12 * oracle);
        }
    }
}

TEST_CASE("gauss-legendre rule reproduces monomial integrals") {
    Eigen::VectorXd x, w;
    gauss_legendre(20, x, w);
    for (int k = 0; k < 39; ++k) {
        double q = 0.0;
        for (int i = 0; i < 20; ++i) q += w(i) * std::pow(x(i), k);
        double oracle = (k % 2 == 0) ? 2.0 / (k + 1) : 0.0;
        CHECK(std::abs(q - oracle) <= 1e-14);
    }
}

TEST_CASE("hermite-tensor grid integrates radial moments") {
    for (int n : {1, 2}) {
        for (double nu : {1.0, 2.5}) {
            QuadratureGrid g = build_grid_nu(n, nu, GridScheme::HermiteTensor, 24);
            CHECK(g.measure_weight == nu);
            CHECK(g.n == n);
            CHECK(std::abs(g.weights.sum() - 1.0) <= 1e-13);
            for (int k = 1; k <= 8; ++k) {
                double oracle = radial_moment(n, k, nu);
                CHECK(std::abs(grid_radial_moment(g, k) - oracle) <= 1e-11 * oracle);
            }
        }
    }
}

TEST_CASE("polar grid integrates radial moments, split or not") {
    GridOptions plain;
    plain.angular = 32;
    QuadratureGrid g = build_grid_nu(1, 1.5, GridScheme::Polar, 24, plain);
    GridOptions split = plain;
    split.split_s = 2.0;
    QuadratureGrid gs = build_grid_nu(1, 1.5, GridScheme::Polar, 24, split);
    for (int k = 1; k <= 10; ++k) {
        double oracle = radial_moment(1, k, 1.5);
        CHECK(std::abs(grid_radial_moment(g, k) - oracle) <= 1e-11 * oracle);
        CHECK(std::abs(grid_radial_moment(gs, k) - oracle) <= 1e-11 * oracle);
    }
    // angular exactness: int z^a zbar^b dmu = 0 for a != b
    Eigen::VectorXcd odd(g.size());
    for (int i = 0; i < g.size(); ++i)
        odd(i) = g.nodes[i](0) * g.nodes[i](0) * std::conj(g.nodes[i](0));
    CHECK(std::abs(g.integrate(odd)) <= 1e-12);
}

TEST_CASE("polar split integrates a radial jump sharply") {
    // int chi_{s <= 1} dmu with nu = 1: = 1 - e^{-1}
    GridOptions opts;
    opts.angular = 16;
    opts.split_s = 1.0;
    QuadratureGrid g = build_grid_nu(1, 1.0, GridScheme::Polar, 30, opts);
    Eigen::VectorXcd samples(g.size());
    for (int i = 0; i < g.size(); ++i)
        samples(i) = g.nodes[i].squaredNorm() <= 1.0 ? 1.0 : 0.0;
    double oracle = 1.0 - std::exp(-1.0);
    CHECK(std::abs(g.integrate(samples).real() - oracle) <= 1e-12);
}

TEST_CASE("uniform grid is normalized and roughly exact") {
    GridOptions opts;
    opts.extent = 8.0;
    QuadratureGrid g = build_grid_nu(1, 1.0, GridScheme::Uniform, 40, opts);
    CHECK(std::abs(g.weights.sum() - 1.0) <= 1e-12);
    CHECK(g.extent <= 8.0 + 1e-12);
    double m1 = grid_radial_moment(g, 1);
    CHECK(std::abs(m1 - 1.0) <= 2e-2);  // midpoint rule, modest accuracy
}

TEST_CASE("lp norm of a constant is the constant") {
    FockParams params(1, 3.0, 1.0);
    QuadratureGrid g = build_grid(params, GridScheme::HermiteTensor, 20);
    Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(g.size());
    CHECK(std::abs(lp_norm(ones, g, params) - 1.0) <= 1e-13);
}

TEST_CASE("grid construction validates its inputs") {
    CHECK_THROWS_AS(build_grid_nu(1, -1.0, GridScheme::HermiteTensor, 10), std::invalid_argument);
    CHECK_THROWS_AS(build_grid_nu(1, 1.0, GridScheme::HermiteTensor, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_grid_nu(1, 1.0, GridScheme::Uniform, 10), std::invalid_argument);
    CHECK_THROWS_AS(scheme_from_name("hexagonal"), std::invalid_argument);
    CHECK(scheme_from_name(scheme_name(GridScheme::Polar)) == GridScheme::Polar);
}
