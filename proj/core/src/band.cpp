#include "fock/band.hpp"

#include <cmath>

namespace fock {

namespace {

struct CutoffData {
    std::vector<int> cubes;                    // cubes whose scaled phi meets the grid
    std::vector<Eigen::VectorXd> phi;          // phi_{j,t} at the nodes
    std::vector<Eigen::VectorXd> psi;          // psi_{j,t} at the nodes
    std::vector<std::vector<int>> phi_supp;    // node indices with phi > 0
    std::vector<std::vector<int>> psi_supp;
};

CutoffData cutoffs_at(const QuadratureGrid& grid, const CubeLattice& lattice, double t) {
    PartitionFamily fam(lattice, t);
    const int M = grid.size();
    std::vector<Eigen::VectorXd> real_nodes(M);
    for (int i = 0; i < M; ++i) real_nodes[i] = to_real(grid.nodes[i]);

    CutoffData out;
    for (int j = 0; j < lattice.cube_count(); ++j) {
        Eigen::VectorXd pv(M), qv(M);
        std::vector<int> ps, qs;
        for (int i = 0; i < M; ++i) {
            pv(i) = fam.phi(j, real_nodes[i]);
            qv(i) = fam.psi(j, real_nodes[i]);
            if (pv(i) > 0.0) ps.push_back(i);
            if (qv(i) > 0.0) qs.push_back(i);
        }
        if (ps.empty() && qs.empty()) continue;
        out.cubes.push_back(j);
        out.phi.push_back(std::move(pv));
        out.psi.push_back(std::move(qv));
        out.phi_supp.push_back(std::move(ps));
        out.psi_supp.push_back(std::move(qs));
    }
    return out;
}

}  // namespace

double band_width(const GridOperator& A, double threshold) {
    if (!(threshold > 0.0)) throw std::invalid_argument("band_width: threshold must be > 0");
    const double scale = op_norm2(A.matrix);
    if (scale == 0.0) return 0.0;
    const double cut = threshold * scale;
    const int M = A.grid.size();
    double width = 0.0;
    for (int l = 0; l < M; ++l)
        for (int i = 0; i < M; ++i)
            if (i != l && std::abs(A.matrix(i, l)) > cut)
                width = std::max(width, (A.grid.nodes[i] - A.grid.nodes[l]).norm());
    return width;
}

DecayProfile band_decay_profile(const GridOperator& A, const std::vector<double>& t_values,
                                double p) {
    if (t_values.empty()) throw std::invalid_argument("band_decay_profile: no t values");
    for (size_t i = 0; i < t_values.size(); ++i) {
        if (!(t_values[i] > 0.0) || t_values[i] > 1.0)
            throw std::invalid_argument("band_decay_profile: t must lie in (0, 1]");
        if (i > 0 && t_values[i] >= t_values[i - 1])
            throw std::invalid_argument("band_decay_profile: t values must be descending");
    }
    const double t_min = t_values.back();
    if (A.grid.extent * t_min < 5.0)
        throw std::invalid_argument(
            "band_decay_profile: grid extent too small for the scaled supports at t = " +
            std::to_string(t_min));

    CubeLattice lattice(A.params.n, A.grid.extent + 6.0);
    const Eigen::MatrixXcd& B = A.matrix;
    Eigen::MatrixXcd Bh = B.adjoint();

    DecayProfile prof;
    prof.points = t_values;
    prof.p2_disclaimer = std::abs(p - 2.0) > 1e-14;
    Eigen::MatrixXcd C;
    for (double t : t_values) {
        CutoffData cd = cutoffs_at(A.grid, lattice, t);

        // Since the phi_j sum to 1 on the grid,
        //   sum_j diag(phi_j) B diag(1 - psi_j) = B . (1 - sum_j phi_j psi_j^T)
        // entrywise, so D(t) is the 2-norm of a masked copy of B.
        C = B;
        for (size_t a = 0; a < cd.cubes.size(); ++a)
            for (int l : cd.psi_supp[a]) {
                const double ps = cd.psi[a](l);
                for (int i : cd.phi_supp[a]) C(i, l) -= cd.phi[a](i) * ps * B(i, l);
            }
        prof.values.push_back(op_norm2(C, 60, 1e-9));

        // sup over j of the individual terms ||M_phi_j B M_{1-psi_j}||
        double sup = 0.0;
        for (size_t a = 0; a < cd.cubes.size(); ++a) {
            if (cd.phi_supp[a].empty()) continue;
            Eigen::MatrixXcd Bsub(B.rows(), cd.phi_supp[a].size());
            for (size_t c = 0; c < cd.phi_supp[a].size(); ++c)
                Bsub.col(c) = Bh.col(cd.phi_supp[a][c]) * cd.phi[a](cd.phi_supp[a][c]);
            // term v = phi . (B ((1-psi) v)) restricted to rows supp(phi):
            // rows of B gathered as columns of Bh
            Eigen::VectorXcd x = Eigen::VectorXcd::Ones(B.cols()).normalized();
            double sj = 0.0;
            for (int it = 0; it < 10; ++it) {
                Eigen::VectorXcd xm = x.array() * (1.0 - cd.psi[a].array());
                Eigen::VectorXcd y = Bsub.adjoint() * xm;  // length |supp phi|
                sj = y.norm();
                if (sj == 0.0) break;
                Eigen::VectorXcd back = Bsub * y;
                Eigen::VectorXcd xn = back.array() * (1.0 - cd.psi[a].array());
                double nn = xn.norm();
                if (nn == 0.0) break;
                x = xn / nn;
            }
            sup = std::max(sup, sj);
        }
        prof.sup_terms.push_back(sup);
    }
    prof.strictly_decreasing = true;
    for (size_t i = 1; i < prof.values.size(); ++i)
        if (!(prof.values[i] < prof.values[i - 1])) prof.strictly_decreasing = false;
    return prof;
}

GridOperator band_truncation(const GridOperator& A, int m) {
    if (m < 1) throw std::invalid_argument("band_truncation: m must be >= 1");
    const double t = 1.0 / m;
    if (A.grid.extent * t < 5.0 && m > 1)
        throw std::invalid_argument("band_truncation: grid extent too small for scale 1/m");
    CubeLattice lattice(A.params.n, A.grid.extent + 6.0);
    CutoffData cd = cutoffs_at(A.grid, lattice, t);

    const int M = A.grid.size();
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(M, M);
    for (size_t a = 0; a < cd.cubes.size(); ++a)
        for (int i : cd.phi_supp[a])
            S.row(i) += cd.phi[a](i) * cd.psi[a].transpose();

    GridOperator out{A.matrix.cwiseProduct(S.cast<Complex>()), A.grid, A.params};
    return out;
}

}  // namespace fock
