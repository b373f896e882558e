#pragma once

#include "fock/basis.hpp"
#include "fock/params.hpp"
#include "fock/quadrature.hpp"
#include "fock/symbol.hpp"

namespace fock {

/// Discretized operator on node-value sequences. The stored matrix acts in
/// the *weighted geometry*: B = W^{1/2} A W^{-1/2}, where A is the action on
/// raw samples and W = diag(quadrature weights). Multiplication operators are
/// unaffected (they commute with W); kernel operators stay bounded this way.
struct GridOperator {
    Eigen::MatrixXcd matrix;
    QuadratureGrid grid;
    FockParams params;
};

GridOperator multiplication_operator(const SymbolFunction& f, const QuadratureGrid& grid,
                                     const FockParams& params);

/// Discretized P_alpha (kernel e^{alpha <z,w>} against dmu_alpha).
/// The grid must carry measure weight alpha.
GridOperator projection_operator(const QuadratureGrid& grid, const FockParams& params);

/// Operator 2-norm (largest singular value) via power iteration on B^H B.
double op_norm2(const Eigen::MatrixXcd& B, int max_iter = 120, double tol = 1e-12);

/// (P_alpha f)(target) by quadrature, for samples aligned with grid nodes.
/// The grid must carry measure weight alpha.
Eigen::VectorXcd apply_projection(const Eigen::VectorXcd& samples, const QuadratureGrid& grid,
                                  const FockParams& params, const std::vector<Point>& targets);

/// Truncated Toeplitz matrix, entry (j,k) = int f e_k conj(e_j) dmu_alpha.
/// Requires grid.measure_weight == alpha and exactness >= 2N+2.
BasisMatrix assemble_toeplitz(const SymbolFunction& f, int N, const FockParams& params,
                              const QuadratureGrid& grid);

/// Samples of C_z f at the grid nodes, where
/// (C_z f)(w) = f(w - z) e^{alpha <w,z> - alpha |z|^2 / 2}.
Eigen::VectorXcd shift_samples(const std::function<Complex(const Point&)>& f, const Point& z,
                               const QuadratureGrid& grid, const FockParams& params);

/// The Gaussian cocycle e^{alpha <w,z> - alpha |z|^2 / 2}.
Complex shift_cocycle(const Point& w, const Point& z, const FockParams& params);

struct ShiftMatrix {
    BasisMatrix op;
    /// max over trusted columns of the l^2 mass pushed above degree N
    double truncation_leakage = 0.0;
};

/// C_z restricted to F_alpha^2, compressed to degree <= N. Exact coefficient
/// sums; the discarded tail mass is reported as truncation leakage, measured
/// over the columns of degree <= trusted_degree (default: all columns; pass
/// a smaller value when the upper degrees serve only as a buffer). Throws if
/// the leakage exceeds `leakage_threshold`.
ShiftMatrix shift_matrix(const Point& z, int N, const FockParams& params,
                         double leakage_threshold = 1e-6, int trusted_degree = -1);

/// Berezin transform f~(z) = int f(w) (alpha/pi)^n e^{-alpha |w-z|^2} dw by
/// quadrature on a mu_alpha grid recentered at z.
Complex berezin_transform(const SymbolFunction& f, const Point& z, const FockParams& params,
                          const QuadratureGrid& grid);

}  // namespace fock
