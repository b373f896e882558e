#pragma once

#include "fock/params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fock {

enum class GridScheme { HermiteTensor, Polar, Uniform };

std::string scheme_name(GridScheme s);
GridScheme scheme_from_name(const std::string& name);

struct GridOptions {
    /// Polar scheme: number of angular points (default 4*size, at least 8).
    int angular = 0;
    /// Polar scheme: split the radial rule at s = measure_weight * r^2 = split_s.
    /// Used to keep spectral accuracy for symbols with a radial jump.
    std::optional<double> split_s;
    /// Uniform scheme: nodes fill the disk |z| <= extent with spacing h = extent/size... see build_grid.
    double extent = 0.0;
};

/// Nodes and weights for integrating against the Gaussian probability
/// measure dmu_nu(z) = (nu/pi)^n e^{-nu |z|^2} dz on C^n.
struct QuadratureGrid {
    std::vector<Point> nodes;
    Eigen::VectorXd weights;
    double measure_weight = 1.0;   // nu
    int exactness_degree = 0;      // |z|^{2m} exact for 2m <= exactness_degree
    GridScheme scheme = GridScheme::HermiteTensor;
    int n = 1;
    double extent = 0.0;           // max |node|

    int size() const { return static_cast<int>(nodes.size()); }

    /// Quadrature of a sampled integrand.
    Complex integrate(const Eigen::VectorXcd& samples) const;
};

/// Build a grid for dmu_{p*alpha/2}. `size` is the per-axis (hermite-tensor,
/// uniform) resp. radial (polar) node count.
QuadratureGrid build_grid(const FockParams& params, GridScheme scheme, int size,
                          const GridOptions& opts = {});

/// Same, but for an arbitrary Gaussian weight nu (the projection and the
/// Berezin transform integrate against dmu_alpha rather than dmu_{p a/2}).
QuadratureGrid build_grid_nu(int n, double nu, GridScheme scheme, int size,
                             const GridOptions& opts = {});

/// (sum_i w_i |f_i|^p)^{1/p}.
double lp_norm(const Eigen::VectorXcd& samples, const QuadratureGrid& grid,
               const FockParams& params);

/// Gauss rules on the real line (exposed for oracles and the polar builder).
/// gauss_hermite: weight e^{-x^2} on R; gauss_laguerre: e^{-x} on [0,inf);
/// gauss_legendre: 1 on [-1,1]. All return nodes/weights of an m-point rule.
void gauss_hermite(int m, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);
void gauss_laguerre(int m, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);
void gauss_legendre(int m, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

}  // namespace fock
