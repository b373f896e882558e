#pragma once

#include "fock/params.hpp"
#include "fock/quadrature.hpp"

#include <vector>

namespace fock {

/// Multi-index of the orthonormal monomial e_k(z) = sqrt(a^|k|/k!) z^k.
struct BasisIndex {
    std::vector<int> multi_index;
    int degree() const {
        int d = 0;
        for (int k : multi_index) d += k;
        return d;
    }
};

/// All multi-indices of length n with total degree <= N, ordered by total
/// degree, then lexicographically.
std::vector<BasisIndex> enumerate_basis(int n, int N);

/// dim = C(n + N, n)
long basis_count(int n, int N);

Complex basis_eval(const BasisIndex& k, const Point& z, const FockParams& params);

/// Evaluation matrix E(i, j) = e_{k_j}(node_i).
Eigen::MatrixXcd basis_evaluation_matrix(const std::vector<BasisIndex>& basis,
                                         const QuadratureGrid& grid,
                                         const FockParams& params);

/// Truncated operator in the monomial basis of F_alpha^2.
struct BasisMatrix {
    Eigen::MatrixXcd entries;
    FockParams params;
    int truncation_degree = 0;
    std::vector<BasisIndex> basis;
};

}  // namespace fock
