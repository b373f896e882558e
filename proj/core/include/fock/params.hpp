#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

namespace fock {

using Complex = std::complex<double>;

/// A point in C^n.
using Point = Eigen::VectorXcd;

/// The parameter triple (n, p, alpha) of the space L_alpha^p on C^n,
/// together with the derived dual exponent q with 1/p + 1/q = 1.
struct FockParams {
    int n = 1;
    double p = 2.0;
    double alpha = 1.0;

    FockParams() = default;
    FockParams(int n_, double p_, double alpha_) : n(n_), p(p_), alpha(alpha_) {
        if (n < 1) throw std::invalid_argument("FockParams: n must be >= 1");
        if (!(p > 1.0) || !std::isfinite(p))
            throw std::invalid_argument("FockParams: p must lie in (1, inf)");
        if (!(alpha > 0.0)) throw std::invalid_argument("FockParams: alpha must be > 0");
    }

    double q() const { return p / (p - 1.0); }

    /// The Gaussian weight the L_alpha^p norm integrates against.
    double measure_weight() const { return p * alpha / 2.0; }
};

inline Point point1(Complex z) {
    Point w(1);
    w(0) = z;
    return w;
}

inline Complex inner(const Point& z, const Point& w) { return (w.conjugate().array() * z.array()).sum(); }

inline double abs2(const Point& z) { return z.squaredNorm(); }

}  // namespace fock
