#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fock/band.hpp"
#include "fock/lattice.hpp"
#include "fock/operators.hpp"
#include "fock/symbol.hpp"

#include <cmath>

using namespace fock;

namespace {

GridOperator small_projection() {
    FockParams params(1, 2.0, 1.0);
    GridOptions opts;
    opts.extent = 24.0;
    QuadratureGrid g = build_grid_nu(1, 1.0, GridScheme::Uniform, 24, opts);
    return projection_operator(g, params);
}

}  // namespace

TEST_CASE("trapezoid profiles") {
    CHECK(trapezoid_phi(0.0) == 1.0);
    CHECK(trapezoid_phi(2.0) == 1.0);
    CHECK(trapezoid_phi(3.0) == 0.5);
    CHECK(trapezoid_phi(4.0) == 0.0);
    CHECK(trapezoid_phi(-4.0) == 0.0);
    CHECK(trapezoid_psi(5.0) == 1.0);
    CHECK(trapezoid_psi(6.0) == 0.0);
    CHECK(trapezoid_psi(0.0) == 1.0);
}

TEST_CASE("cube lattice geometry") {
    for (int n : {1, 2}) {
        CubeLattice lat(n, 20.0);
        CHECK(lat.cube_diameter() == 6.0 * std::sqrt(2.0 * n));
        CHECK(lat.sigma(0).isZero());

        // every point lies in exactly one cube; omega counts bounded as stated
        for (int trial = 0; trial < 500; ++trial) {
            Eigen::VectorXd x(2 * n);
            for (int i = 0; i < 2 * n; ++i)
                x(i) = -15.0 + 30.0 * ((trial * 37 + i * 11) % 1000) / 1000.0;
            int owner = lat.cube_index_of(x);
            REQUIRE(owner >= 0);
            int hits = 0, om1 = 0, om3 = 0;
            for (int j = 0; j < lat.cube_count(); ++j) {
                if (lat.cube_index_of(x) == j) ++hits;
                if (lat.in_omega(j, 1, x)) ++om1;
                if (lat.in_omega(j, 3, x)) ++om3;
            }
            CHECK(hits == 1);
            CHECK(om1 <= (1 << (2 * n)));
            CHECK(om3 <= (1 << (4 * n)));
        }
    }
}

TEST_CASE("partition of unity sums to one; cutoffs are lipschitz") {
    CubeLattice lat(1, 30.0);
    for (double t : {1.0, 0.5, 0.25}) {
        PartitionFamily fam = partition_functions(lat, t);
        double worst = 0.0;
        for (int trial = 0; trial < 400; ++trial) {
            Point z = point1(Complex(-20.0 + 0.1 * trial, 13.0 - 0.07 * trial));
            worst = std::max(worst, std::abs(fam.phi_sum(z) - 1.0));
        }
        CHECK(worst <= 1e-14);
    }

    // |phi(z) - phi(w)| <= n |z - w| after the t-scaling at t = 1
    PartitionFamily fam = partition_functions(lat, 1.0);
    double lip = 0.0;
    for (int trial = 0; trial < 300; ++trial) {
        Point z = point1(Complex(-9.0 + 0.06 * trial, 4.0 - 0.03 * trial));
        Point w = z + point1(Complex(0.13, -0.08));
        double d = (z - w).norm();
        for (int j = 0; j < lat.cube_count(); ++j)
            lip = std::max(lip, std::abs(fam.phi(j, z) - fam.phi(j, w)) / d);
    }
    CHECK(lip <= 1.0 + 1e-9);
}

TEST_CASE("multiplication operators have band width zero and flat profile") {
    FockParams params(1, 2.0, 1.0);
    GridOptions opts;
    opts.extent = 12.0;
    QuadratureGrid g = build_grid_nu(1, 1.0, GridScheme::Uniform, 20, opts);
    SymbolFunction f = sum_symbol(constant_symbol(0.5), bump_symbol(Complex(0.0), 2.0, 1.0));
    GridOperator M = multiplication_operator(f, g, params);
    CHECK(band_width(M, 1e-10) == 0.0);
    DecayProfile prof = band_decay_profile(M, {1.0, 0.5});
    for (double v : prof.values) CHECK(v <= 1e-14);
}

TEST_CASE("projection band profile decays") {
    GridOperator P = small_projection();
    DecayProfile prof = band_decay_profile(P, {1.0, 0.5, 0.25});
    REQUIRE(prof.values.size() == 3);
    CHECK(prof.strictly_decreasing);
    CHECK(prof.values[2] < prof.values[0]);
    REQUIRE(prof.sup_terms.size() == 3);
    // the individual cutoff terms decay along with the summed norm
    for (double s : prof.sup_terms) CHECK(s >= 0.0);
    CHECK(prof.sup_terms[2] < prof.sup_terms[0]);
}

TEST_CASE("band truncations are band operators approximating the original") {
    GridOperator P = small_projection();
    GridOperator A2 = band_truncation(P, 2);
    GridOperator A4 = band_truncation(P, 4);
    double w2 = band_width(A2, 1e-14), w4 = band_width(A4, 1e-14);
    CHECK(w2 > 0.0);
    CHECK(w2 < std::numeric_limits<double>::infinity());
    // coarser t = 1/m widens the band but improves the approximation
    CHECK(op_norm2(P.matrix - A4.matrix) <= op_norm2(P.matrix - A2.matrix) + 1e-12);
    CHECK(w4 >= w2);
}

TEST_CASE("band profile validates scales against the grid extent") {
    GridOperator P = small_projection();
    CHECK_THROWS_AS(band_decay_profile(P, {0.1}), std::invalid_argument);
    CHECK_THROWS_AS(band_decay_profile(P, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(band_decay_profile(P, {}), std::invalid_argument);
}
