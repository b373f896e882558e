#pragma once

#include "fock/basis.hpp"
#include "fock/operators.hpp"

#include <string>
#include <vector>

namespace fock {

/// nu(A|_F) = inf { ||A f||; ||f|| = 1, supp f in F }, with the achieving
/// minimizer. Computed as the smallest singular value of the column
/// restriction of A to F (p = 2 geometry).
struct LowerNormReport {
    double value = 0.0;
    std::vector<int> support;    // the mask F, as coordinate indices
    Eigen::VectorXcd minimizer;  // unit norm, supported in F
    std::string method = "svd";
};

LowerNormReport lower_norm(const Eigen::MatrixXcd& A, const std::vector<int>& F);
LowerNormReport lower_norm(const GridOperator& A, const std::vector<int>& F);
LowerNormReport lower_norm(const BasisMatrix& A, const std::vector<int>& F);

/// Full-support mask {0, ..., dim-1}.
std::vector<int> full_mask(int dim);

/// r_t = 8 sqrt(2n) / t, the diameter of the scaled cutoff supports.
double localized_radius(double t, int n);

/// nu_t(A|_F) = min over centers w of nu(A|_{F intersect B(w, r_t)}).
/// The centers must cover the masked nodes with spacing <= r_t / 2.
LowerNormReport localized_lower_norm(const GridOperator& A, const std::vector<int>& F,
                                     double t, const std::vector<Point>& centers);

}  // namespace fock
