#pragma once

#include "fock/params.hpp"
#include "fock/quadrature.hpp"

#include <vector>

namespace fock {

/// C^n point as coordinates in R^{2n}: (Re z_1, Im z_1, ..., Re z_n, Im z_n).
Eigen::VectorXd to_real(const Point& z);

/// The lattice of half-open cubes B_j = [-3,3)^{2n} + sigma_j, sigma_j in
/// 6 Z^{2n}, enumerated with sigma_1 = 0, then by |sigma| and lexicographic
/// order. Only cubes meeting [-extent-3, extent+3]^{2n} are materialized;
/// the rest carry identically-zero cutoffs on any grid inside the extent.
class CubeLattice {
public:
    CubeLattice(int n, double extent);

    int n() const { return n_; }
    double extent() const { return extent_; }
    int cube_count() const { return static_cast<int>(sigmas_.size()); }
    const Eigen::VectorXd& sigma(int j) const { return sigmas_.at(j); }

    /// Euclidean diameter of every cube: 6 sqrt(2n).
    double cube_diameter() const;

    /// Index of the unique cube containing x (coordinates in R^{2n});
    /// -1 if it falls outside the enumerated range.
    int cube_index_of(const Eigen::VectorXd& x) const;

    /// dist_inf(x, B_j) <= k, i.e. x in Omega_k(B_j), for k = 1, 2, 3.
    bool in_omega(int j, int k, const Eigen::VectorXd& x) const;

private:
    int n_;
    double extent_;
    std::vector<Eigen::VectorXd> sigmas_;
};

/// Trapezoid cutoff profile: 0 outside [-4,4], 1 on [-2,2],
/// linear ramps between.
double trapezoid_phi(double u);
/// Companion profile: 1 on [-5,5], 0 outside [-6,6], ramps of width 1.
double trapezoid_psi(double u);

/// The scaled families phi_{j,t}(z) = phi_j(t z), psi_{j,t}(z) = psi_j(t z).
class PartitionFamily {
public:
    PartitionFamily(CubeLattice lattice, double t);

    const CubeLattice& lattice() const { return lattice_; }
    double t() const { return t_; }

    double phi(int j, const Point& z) const;
    double psi(int j, const Point& z) const;
    double phi(int j, const Eigen::VectorXd& x) const;  // x already scaled-free real coords
    double psi(int j, const Eigen::VectorXd& x) const;

    /// sum_j phi_{j,t}(z); identically 1 when the lattice covers t*z.
    double phi_sum(const Point& z) const;

private:
    CubeLattice lattice_;
    double t_;
};

PartitionFamily partition_functions(const CubeLattice& lattice, double t);

}  // namespace fock
