#include "fock/lower_norm.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fock {

LowerNormReport lower_norm(const Eigen::MatrixXcd& A, const std::vector<int>& F) {
    if (F.empty()) throw std::invalid_argument("lower_norm: empty support mask");
    const long dim = A.cols();
    Eigen::MatrixXcd sub(A.rows(), static_cast<long>(F.size()));
    for (size_t c = 0; c < F.size(); ++c) {
        if (F[c] < 0 || F[c] >= dim)
            throw std::invalid_argument("lower_norm: mask index out of range");
        sub.col(static_cast<long>(c)) = A.col(F[c]);
    }
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(sub, Eigen::ComputeThinV);
    const long last = svd.singularValues().size() - 1;

    LowerNormReport rep;
    rep.value = svd.singularValues()(last);
    rep.support = F;
    rep.minimizer = Eigen::VectorXcd::Zero(dim);
    for (size_t c = 0; c < F.size(); ++c)
        rep.minimizer(F[c]) = svd.matrixV()(static_cast<long>(c), last);
    return rep;
}

LowerNormReport lower_norm(const GridOperator& A, const std::vector<int>& F) {
    return lower_norm(A.matrix, F);
}

LowerNormReport lower_norm(const BasisMatrix& A, const std::vector<int>& F) {
    return lower_norm(A.entries, F);
}

std::vector<int> full_mask(int dim) {
    std::vector<int> F(dim);
    for (int i = 0; i < dim; ++i) F[i] = i;
    return F;
}

double localized_radius(double t, int n) {
    if (!(t > 0.0)) throw std::invalid_argument("localized_radius: t must be > 0");
    return 8.0 * std::sqrt(2.0 * n) / t;
}

LowerNormReport localized_lower_norm(const GridOperator& A, const std::vector<int>& F,
                                     double t, const std::vector<Point>& centers) {
    if (F.empty()) throw std::invalid_argument("localized_lower_norm: empty support mask");
    if (centers.empty()) throw std::invalid_argument("localized_lower_norm: no centers");
    const double rt = localized_radius(t, A.params.n);

    // every masked node must be within r_t / 2 of some center
    for (int i : F) {
        double best = std::numeric_limits<double>::infinity();
        for (const Point& w : centers) best = std::min(best, (A.grid.nodes[i] - w).norm());
        if (best > rt / 2.0)
            throw std::invalid_argument("localized_lower_norm: center lattice too sparse");
    }

    LowerNormReport best;
    best.value = std::numeric_limits<double>::infinity();
    for (const Point& w : centers) {
        std::vector<int> local;
        for (int i : F)
            if ((A.grid.nodes[i] - w).norm() <= rt) local.push_back(i);
        if (local.empty()) continue;
        LowerNormReport rep = lower_norm(A.matrix, local);
        if (rep.value < best.value) best = rep;
    }
    if (!std::isfinite(best.value))
        throw std::invalid_argument("localized_lower_norm: no center meets the mask");
    best.method = "svd/localized";
    return best;
}

}  // namespace fock
