#include "fock/lattice.hpp"

#include <algorithm>
#include <cmath>

namespace fock {

Eigen::VectorXd to_real(const Point& z) {
    Eigen::VectorXd x(2 * z.size());
    for (long i = 0; i < z.size(); ++i) {
        x(2 * i) = z(i).real();
        x(2 * i + 1) = z(i).imag();
    }
    return x;
}

CubeLattice::CubeLattice(int n, double extent) : n_(n), extent_(extent) {
    if (n < 1) throw std::invalid_argument("CubeLattice: n must be >= 1");
    if (!(extent > 0.0)) throw std::invalid_argument("CubeLattice: extent must be positive");
    const int d = 2 * n;
    const int kmax = static_cast<int>(std::floor((extent + 3.0) / 6.0 + 1.0));

    std::vector<Eigen::VectorXd> all;
    std::vector<int> idx(d, -kmax);
    while (true) {
        Eigen::VectorXd s(d);
        for (int i = 0; i < d; ++i) s(i) = 6.0 * idx[i];
        all.push_back(s);
        int i = d - 1;
        for (; i >= 0; --i) {
            if (++idx[i] <= kmax) break;
            idx[i] = -kmax;
        }
        if (i < 0) break;
    }
    std::sort(all.begin(), all.end(), [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
        double na = a.norm(), nb = b.norm();
        if (na != nb) return na < nb;
        return std::lexicographical_compare(a.data(), a.data() + a.size(),
                                            b.data(), b.data() + b.size());
    });
    sigmas_ = std::move(all);
}

double CubeLattice::cube_diameter() const { return 6.0 * std::sqrt(2.0 * n_); }

int CubeLattice::cube_index_of(const Eigen::VectorXd& x) const {
    for (int j = 0; j < cube_count(); ++j) {
        bool in = true;
        for (long i = 0; i < x.size() && in; ++i) {
            double u = x(i) - sigmas_[j](i);
            in = u >= -3.0 && u < 3.0;
        }
        if (in) return j;
    }
    return -1;
}

bool CubeLattice::in_omega(int j, int k, const Eigen::VectorXd& x) const {
    if (k < 1 || k > 3) throw std::invalid_argument("in_omega: k must be 1, 2 or 3");
    const Eigen::VectorXd& s = sigmas_.at(j);
    for (long i = 0; i < x.size(); ++i) {
        double u = x(i) - s(i);
        if (u < -3.0 - k || u > 3.0 + k) return false;
    }
    return true;
}

double trapezoid_phi(double u) {
    return std::clamp((4.0 - std::abs(u)) / 2.0, 0.0, 1.0);
}

double trapezoid_psi(double u) {
    return std::clamp(6.0 - std::abs(u), 0.0, 1.0);
}

PartitionFamily::PartitionFamily(CubeLattice lattice, double t)
    : lattice_(std::move(lattice)), t_(t) {
    if (!(t > 0.0) || t > 1.0)
        throw std::invalid_argument("PartitionFamily: t must lie in (0, 1]");
}

double PartitionFamily::phi(int j, const Eigen::VectorXd& x) const {
    const Eigen::VectorXd& s = lattice_.sigma(j);
    double v = 1.0;
    for (long i = 0; i < x.size(); ++i) {
        v *= trapezoid_phi(t_ * x(i) - s(i));
        if (v == 0.0) return 0.0;
    }
    return v;
}

double PartitionFamily::psi(int j, const Eigen::VectorXd& x) const {
    const Eigen::VectorXd& s = lattice_.sigma(j);
    double v = 1.0;
    for (long i = 0; i < x.size(); ++i) {
        v *= trapezoid_psi(t_ * x(i) - s(i));
        if (v == 0.0) return 0.0;
    }
    return v;
}

double PartitionFamily::phi(int j, const Point& z) const { return phi(j, to_real(z)); }
double PartitionFamily::psi(int j, const Point& z) const { return psi(j, to_real(z)); }

double PartitionFamily::phi_sum(const Point& z) const {
    Eigen::VectorXd x = to_real(z);
    double acc = 0.0;
    for (int j = 0; j < lattice_.cube_count(); ++j) acc += phi(j, x);
    return acc;
}

PartitionFamily partition_functions(const CubeLattice& lattice, double t) {
    return PartitionFamily(lattice, t);
}

}  // namespace fock
