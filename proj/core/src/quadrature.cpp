#include "fock/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>

namespace fock {

namespace {

// Golub-Welsch nodes (eigenvalues of the Jacobi matrix), Newton-refined on
// the orthonormal polynomial p_m. Weights come from the Christoffel function,
//   w_i = mu0 / sum_{k<m} p_k(x_i)^2,
// which keeps full *relative* accuracy even where the weight is below the
// absolute eigenvector resolution (the extreme Hermite/Laguerre nodes); the
// eigenvector-squared formula returns noise there, which high-degree
// integrands then amplify catastrophically.
void golub_welsch(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double mu0,
                  Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
    const int m = static_cast<int>(a.size());
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) {
        J(i, i) = a(i);
        if (i + 1 < m) J(i, i + 1) = J(i + 1, i) = b(i + 1);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J, Eigen::EigenvaluesOnly);
    nodes = es.eigenvalues();
    weights.resize(m);

    // p_{k+1} = ((x - a_k) p_k - b_k p_{k-1}) / b_{k+1}, p_0 = 1 / sqrt(mu0);
    // the recurrence is run together with its x-derivative for the Newton step.
    for (int i = 0; i < m; ++i) {
        double x = nodes(i);
        for (int step = 0; step < 3; ++step) {
            double pk = 1.0 / std::sqrt(mu0), pkm1 = 0.0;
            double dk = 0.0, dkm1 = 0.0;
            double christoffel = pk * pk;
            for (int k = 0; k < m; ++k) {
                double bk1 = (k + 1 < m) ? b(k + 1) : 1.0;
                double pk1 = ((x - a(k)) * pk - (k > 0 ? b(k) * pkm1 : 0.0)) / bk1;
                double dk1 = (pk + (x - a(k)) * dk - (k > 0 ? b(k) * dkm1 : 0.0)) / bk1;
                pkm1 = pk;
                pk = pk1;
                dkm1 = dk;
                dk = dk1;
                if (k + 1 < m) christoffel += pk * pk;
            }
            if (step == 2) {
                weights(i) = 1.0 / christoffel;
                break;
            }
            if (dk != 0.0 && std::isfinite(pk / dk)) x -= pk / dk;
        }
        nodes(i) = x;
    }
}

}  // namespace

void gauss_hermite(int m, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(m), b(m);
    b(0) = 0.0;
    for (int k = 1; k < m; ++k) b(k) = std::sqrt(k / 2.0);
    golub_welsch(a, b, std::sqrt(std::numbers::pi), nodes, weights);
}

void gauss_laguerre(int m, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
    Eigen::VectorXd a(m), b(m);
    b(0) = 0.0;
    for (int k = 0; k < m; ++k) a(k) = 2.0 * k + 1.0;
    for (int k = 1; k < m; ++k) b(k) = static_cast<double>(k);
    golub_welsch(a, b, 1.0, nodes, weights);
}

void gauss_legendre(int m, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(m), b(m);
    b(0) = 0.0;
    for (int k = 1; k < m; ++k) b(k) = k / std::sqrt(4.0 * k * k - 1.0);
    golub_welsch(a, b, 2.0, nodes, weights);
}

std::string scheme_name(GridScheme s) {
    switch (s) {
        case GridScheme::HermiteTensor: return "hermite-tensor";
        case GridScheme::Polar: return "polar";
        case GridScheme::Uniform: return "uniform";
    }
    return "?";
}

GridScheme scheme_from_name(const std::string& name) {
    if (name == "hermite-tensor") return GridScheme::HermiteTensor;
    if (name == "polar") return GridScheme::Polar;
    if (name == "uniform") return GridScheme::Uniform;
    throw std::invalid_argument("unknown grid scheme: " + name);
}

Complex QuadratureGrid::integrate(const Eigen::VectorXcd& samples) const {
    if (samples.size() != weights.size())
        throw std::invalid_argument("integrate: samples do not match grid nodes");
    return (weights.cast<Complex>().array() * samples.array()).sum();
}

namespace {

QuadratureGrid build_hermite_tensor(int n, double nu, int m) {
    Eigen::VectorXd t, w;
    gauss_hermite(m, t, w);
    // per real axis: x = t/sqrt(nu), weight w/sqrt(pi) (probability normalization)
    Eigen::VectorXd x = t / std::sqrt(nu);
    Eigen::VectorXd wx = w / std::sqrt(std::numbers::pi);

    const int d = 2 * n;
    QuadratureGrid g;
    g.scheme = GridScheme::HermiteTensor;
    g.measure_weight = nu;
    g.n = n;
    g.exactness_degree = 2 * m - 1;

    long total = 1;
    for (int i = 0; i < d; ++i) total *= m;
    g.nodes.reserve(total);
    g.weights.resize(total);

    std::vector<int> idx(d, 0);
    for (long c = 0; c < total; ++c) {
        Point z(n);
        double weight = 1.0;
        for (int i = 0; i < n; ++i) {
            z(i) = Complex(x(idx[2 * i]), x(idx[2 * i + 1]));
            weight *= wx(idx[2 * i]) * wx(idx[2 * i + 1]);
        }
        g.nodes.push_back(std::move(z));
        g.weights(c) = weight;
        for (int i = d - 1; i >= 0; --i) {
            if (++idx[i] < m) break;
            idx[i] = 0;
        }
    }
    for (const auto& z : g.nodes) g.extent = std::max(g.extent, z.norm());
    return g;
}

QuadratureGrid build_polar(int n, double nu, int m, const GridOptions& opts) {
    if (n != 1)
        throw std::invalid_argument("polar scheme is only supported for n = 1");
    int K = opts.angular > 0 ? opts.angular : std::max(4 * m, 8);

    // dmu_nu in s = nu r^2, theta: (1/(2 pi)) e^{-s} ds dtheta.
    std::vector<double> s_nodes, s_weights;  // weights include e^{-s}
    if (opts.split_s) {
        double s0 = *opts.split_s;
        if (!(s0 > 0.0)) throw std::invalid_argument("polar split must be positive");
        Eigen::VectorXd tl, wl;
        gauss_legendre(m, tl, wl);
        for (int i = 0; i < m; ++i) {
            double s = 0.5 * s0 * (tl(i) + 1.0);
            s_nodes.push_back(s);
            s_weights.push_back(0.5 * s0 * wl(i) * std::exp(-s));
        }
        Eigen::VectorXd tg, wg;
        gauss_laguerre(m, tg, wg);
        for (int i = 0; i < m; ++i) {
            s_nodes.push_back(s0 + tg(i));
            s_weights.push_back(std::exp(-s0) * wg(i));
        }
    } else {
        Eigen::VectorXd tg, wg;
        gauss_laguerre(m, tg, wg);
        for (int i = 0; i < m; ++i) {
            s_nodes.push_back(tg(i));
            s_weights.push_back(wg(i));
        }
    }

    QuadratureGrid g;
    g.scheme = GridScheme::Polar;
    g.measure_weight = nu;
    g.n = 1;
    g.exactness_degree = std::min(4 * m - 2, K - 1);

    const int R = static_cast<int>(s_nodes.size());
    g.nodes.reserve(static_cast<size_t>(R) * K);
    g.weights.resize(static_cast<long>(R) * K);
    long c = 0;
    for (int i = 0; i < R; ++i) {
        double r = std::sqrt(s_nodes[i] / nu);
        double wr = s_weights[i] / K;
        for (int k = 0; k < K; ++k) {
            double th = 2.0 * std::numbers::pi * k / K;
            g.nodes.push_back(point1(Complex(r * std::cos(th), r * std::sin(th))));
            g.weights(c++) = wr;
        }
    }
    for (const auto& z : g.nodes) g.extent = std::max(g.extent, z.norm());
    return g;
}

QuadratureGrid build_uniform(int n, double nu, int m, const GridOptions& opts) {
    if (!(opts.extent > 0.0))
        throw std::invalid_argument("uniform scheme requires a positive extent");
    const double L = opts.extent;
    const double h = 2.0 * L / m;
    const int d = 2 * n;

    QuadratureGrid g;
    g.scheme = GridScheme::Uniform;
    g.measure_weight = nu;
    g.n = n;
    g.extent = L;

    // midpoint lattice restricted to the Euclidean disk |z| <= L
    std::vector<double> axis(m);
    for (int i = 0; i < m; ++i) axis[i] = -L + h * (i + 0.5);

    std::vector<int> idx(d, 0);
    long total = 1;
    for (int i = 0; i < d; ++i) total *= m;
    const double dens = std::pow(nu / std::numbers::pi, n) * std::pow(h, d);
    std::vector<double> wts;
    for (long c = 0; c < total; ++c) {
        Point z(n);
        double norm2 = 0.0;
        for (int i = 0; i < n; ++i) {
            z(i) = Complex(axis[idx[2 * i]], axis[idx[2 * i + 1]]);
            norm2 += std::norm(z(i));
        }
        if (norm2 <= L * L) {
            g.nodes.push_back(std::move(z));
            wts.push_back(dens * std::exp(-nu * norm2));
        }
        for (int i = d - 1; i >= 0; --i) {
            if (++idx[i] < m) break;
            idx[i] = 0;
        }
    }
    g.weights = Eigen::Map<Eigen::VectorXd>(wts.data(), wts.size());
    g.weights /= g.weights.sum();  // mu_nu is a probability measure

    // certify moments E|z|^{2k} = Gamma(n+k)/(Gamma(n) nu^k) empirically
    int good = 0;
    for (int k = 1; k <= 40; ++k) {
        double got = 0.0;
        for (long i = 0; i < g.weights.size(); ++i)
            got += g.weights(i) * std::pow(g.nodes[i].squaredNorm(), k);
        double want = std::exp(std::lgamma(n + k) - std::lgamma(n)) / std::pow(nu, k);
        if (std::abs(got - want) / std::max(1.0, want) > 1e-10) break;
        good = k;
    }
    g.exactness_degree = 2 * good;
    return g;
}

}  // namespace

QuadratureGrid build_grid_nu(int n, double nu, GridScheme scheme, int size,
                             const GridOptions& opts) {
    if (n < 1) throw std::invalid_argument("build_grid: n must be >= 1");
    if (size < 2) throw std::invalid_argument("build_grid: size must be >= 2");
    if (!(nu > 0.0)) throw std::invalid_argument("build_grid: measure weight must be > 0");
    switch (scheme) {
        case GridScheme::HermiteTensor: return build_hermite_tensor(n, nu, size);
        case GridScheme::Polar: return build_polar(n, nu, size, opts);
        case GridScheme::Uniform: return build_uniform(n, nu, size, opts);
    }
    throw std::invalid_argument("build_grid: unknown scheme");
}

QuadratureGrid build_grid(const FockParams& params, GridScheme scheme, int size,
                          const GridOptions& opts) {
    return build_grid_nu(params.n, params.measure_weight(), scheme, size, opts);
}

double lp_norm(const Eigen::VectorXcd& samples, const QuadratureGrid& grid,
               const FockParams& params) {
    if (samples.size() != grid.weights.size())
        throw std::invalid_argument("lp_norm: samples do not match grid nodes");
    double acc = 0.0;
    for (long i = 0; i < samples.size(); ++i)
        acc += grid.weights(i) * std::pow(std::abs(samples(i)), params.p);
    return std::pow(acc, 1.0 / params.p);
}

}  // namespace fock
