#include "fock/criteria.hpp"

#include <cmath>
#include <numbers>

namespace fock {

double duality_constant(const FockParams& params) {
    double n = params.n, p = params.p, q = params.q();
    if (p == 2.0) return 1.0;  // 2^n / (2^{n/2} 2^{n/2}), exact
    return std::pow(2.0, n) / (std::pow(p, n / p) * std::pow(q, n / q));
}

BoundednessVerdict boundedness_criterion(double a, double b, double c) {
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        throw std::invalid_argument("boundedness_criterion: a, b, c must be > 0");
    BoundednessVerdict v;
    v.bounded = 4.0 * b * c - a * a >= 0.0;
    if (!v.bounded) v.witness_slope = std::sqrt(b / c);
    return v;
}

double exponent_grid_sup(double a, double b, double c, double extent, int steps) {
    // n = 1 scan; by rotation invariance only |z|, |w| and the angle between
    // them matter, and the sup is attained at aligned phases.
    double sup = 0.0;
    for (int i = 0; i <= steps; ++i) {
        double x = extent * i / steps;
        for (int j = 0; j <= steps; ++j) {
            double y = extent * j / steps;
            sup = std::max(sup, std::exp(a * x * y - b * x * x - c * y * y));
        }
    }
    return sup;
}

namespace {

double inner_exponential(const QuadratureGrid& grid, double c, double r) {
    // int e^{c * Re<z, w>} dmu_nu(z) with w = (r, 0, ..., 0)
    double acc = 0.0;
    for (long i = 0; i < grid.weights.size(); ++i)
        acc += grid.weights(i) * std::exp(c * grid.nodes[i](0).real() * r);
    return acc;
}

double ht_value(double radius, const FockParams& params, const QuadratureGrid& grid,
                int outer_m) {
    const double p = params.p, q = params.q(), a = params.alpha;
    const double s = params.measure_weight();
    const int n = params.n;

    Eigen::VectorXd t, w;
    gauss_legendre(outer_m, t, w);

    // radial density of mu_s on C^n: (2 s^n / Gamma(n)) r^{2n-1} e^{-s r^2}
    const double dens_c = 2.0 * std::pow(s, n) / std::tgamma(n);
    double acc = 0.0;
    for (int i = 0; i < outer_m; ++i) {
        double r = 0.5 * radius * (t(i) + 1.0);
        double inner = std::exp(-q * (2.0 * a - p * a) / 2.0 * r * r) *
                       inner_exponential(grid, q * a, r);
        acc += 0.5 * radius * w(i) * std::pow(inner, p / q) * dens_c *
               std::pow(r, 2 * n - 1) * std::exp(-s * r * r);
    }
    return acc;
}

}  // namespace

double hille_tamarkin_integral(double radius, const FockParams& params,
                               const QuadratureGrid& grid) {
    if (radius < 0.0) throw std::invalid_argument("hille_tamarkin_integral: radius must be >= 0");
    if (radius == 0.0) return 0.0;
    if (std::abs(grid.measure_weight - params.measure_weight()) > 1e-12)
        throw std::invalid_argument("hille_tamarkin_integral: grid measure weight mismatch");

    double v = ht_value(radius, params, grid, 48);

    QuadratureGrid fine = build_grid(params, GridScheme::HermiteTensor,
                                     params.n == 1 ? 72 : 24);
    double vref = ht_value(radius, params, fine, 96);
    if (std::abs(v - vref) > 0.01 * std::max(std::abs(vref), 1e-30))
        throw std::runtime_error("hille_tamarkin_integral: grid too coarse (refinement moved the value by >1%)");
    return v;
}

bool power_sum_bound_holds(const std::vector<double>& xs, double p) {
    double sum = 0.0, psum = 0.0;
    for (double x : xs) {
        if (x < 0.0) throw std::invalid_argument("power_sum_bound_holds: entries must be >= 0");
        sum += x;
        psum += std::pow(x, p);
    }
    double k = static_cast<double>(xs.size());
    return std::pow(sum, p) <= std::pow(k, p) * psum * (1.0 + 1e-12) + 1e-300;
}

}  // namespace fock
