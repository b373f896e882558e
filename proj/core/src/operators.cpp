#include "fock/operators.hpp"

#include <cmath>
#include <numbers>

namespace fock {

namespace {

void require_measure(const QuadratureGrid& grid, double nu, const char* who) {
    if (std::abs(grid.measure_weight - nu) > 1e-12 * std::max(1.0, nu))
        throw std::invalid_argument(std::string(who) + ": grid measure weight inconsistent with params");
}

}  // namespace

GridOperator multiplication_operator(const SymbolFunction& f, const QuadratureGrid& grid,
                                     const FockParams& params) {
    GridOperator op{Eigen::MatrixXcd::Zero(grid.size(), grid.size()), grid, params};
    for (int i = 0; i < grid.size(); ++i) op.matrix(i, i) = f(grid.nodes[i]);
    return op;
}

GridOperator projection_operator(const QuadratureGrid& grid, const FockParams& params) {
    require_measure(grid, params.alpha, "projection_operator");
    const double a = params.alpha;
    const int M = grid.size();
    GridOperator op{Eigen::MatrixXcd(M, M), grid, params};
    Eigen::VectorXd sw = grid.weights.array().sqrt();
    Eigen::VectorXd n2(M);
    for (int i = 0; i < M; ++i) n2(i) = grid.nodes[i].squaredNorm();
    for (int l = 0; l < M; ++l) {
        const Point& w = grid.nodes[l];
        for (int i = 0; i < M; ++i) {
            // weighted kernel: e^{a<z,w> - a(|z|^2+|w|^2)/2} sqrt(w_i w_l)
            Complex ip = inner(grid.nodes[i], w);
            double re = a * (ip.real() - 0.5 * (n2(i) + n2(l)));
            double im = a * ip.imag();
            op.matrix(i, l) = std::exp(re) * Complex(std::cos(im), std::sin(im)) * sw(i) * sw(l);
        }
    }
    return op;
}

double op_norm2(const Eigen::MatrixXcd& B, int max_iter, double tol) {
    if (B.size() == 0) return 0.0;
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(B.cols());
    for (long i = 0; i < v.size(); ++i) v(i) += Complex(0.0, 1e-3 * ((i * 2654435761u) % 97));
    v.normalize();
    double sigma = 0.0;
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXcd w = B * v;
        double s = w.norm();
        if (s == 0.0) return 0.0;
        Eigen::VectorXcd u = B.adjoint() * w;
        double un = u.norm();
        if (un == 0.0) return s;
        v = u / un;
        if (std::abs(s - sigma) <= tol * std::max(s, 1e-300)) return s;
        sigma = s;
    }
    return sigma;
}

Eigen::VectorXcd apply_projection(const Eigen::VectorXcd& samples, const QuadratureGrid& grid,
                                  const FockParams& params, const std::vector<Point>& targets) {
    if (samples.size() != grid.weights.size())
        throw std::invalid_argument("apply_projection: samples do not match grid nodes");
    require_measure(grid, params.alpha, "apply_projection");
    const double a = params.alpha;
    Eigen::VectorXcd out(targets.size());
    for (size_t t = 0; t < targets.size(); ++t) {
        Complex acc = 0.0;
        for (int j = 0; j < grid.size(); ++j) {
            Complex e = a * inner(targets[t], grid.nodes[j]);
            acc += std::exp(e) * samples(j) * grid.weights(j);
        }
        out(t) = acc;
    }
    return out;
}

BasisMatrix assemble_toeplitz(const SymbolFunction& f, int N, const FockParams& params,
                              const QuadratureGrid& grid) {
    require_measure(grid, params.alpha, "assemble_toeplitz");
    if (grid.exactness_degree < 2 * N + 2)
        throw std::runtime_error("assemble_toeplitz: grid exactness shortfall (need degree " +
                                 std::to_string(2 * N + 2) + ", certified " +
                                 std::to_string(grid.exactness_degree) + ")");
    auto basis = enumerate_basis(params.n, N);
    Eigen::MatrixXcd E = basis_evaluation_matrix(basis, grid, params);
    Eigen::VectorXcd wf(grid.size());
    for (int i = 0; i < grid.size(); ++i) wf(i) = grid.weights(i) * f(grid.nodes[i]);
    BasisMatrix T{E.adjoint() * (wf.asDiagonal() * E), params, N, std::move(basis)};
    return T;
}

Complex shift_cocycle(const Point& w, const Point& z, const FockParams& params) {
    Complex e = params.alpha * inner(w, z) - 0.5 * params.alpha * z.squaredNorm();
    return std::exp(e);
}

Eigen::VectorXcd shift_samples(const std::function<Complex(const Point&)>& f, const Point& z,
                               const QuadratureGrid& grid, const FockParams& params) {
    Eigen::VectorXcd out(grid.size());
    for (int i = 0; i < grid.size(); ++i) {
        const Point& w = grid.nodes[i];
        out(i) = f(w - z) * shift_cocycle(w, z, params);
    }
    return out;
}

namespace {

// 1D coefficients c_{mk} = <C_z e_k, e_m> on C, exact finite sums.
Eigen::MatrixXcd shift_coeffs_1d(Complex z, int N, double a) {
    std::vector<double> fact(2 * N + 2);
    fact[0] = 1.0;
    for (size_t i = 1; i < fact.size(); ++i) fact[i] = fact[i - 1] * i;

    Eigen::MatrixXcd c(N + 1, N + 1);
    const double pref = std::exp(-0.5 * a * std::norm(z));
    for (int k = 0; k <= N; ++k) {
        for (int m = 0; m <= N; ++m) {
            Complex acc = 0.0;
            int top = std::min(k, m);
            for (int aa = 0; aa <= top; ++aa) {
                double binom = fact[k] / (fact[aa] * fact[k - aa]);
                acc += binom * std::pow(-z, k - aa) * std::pow(a * std::conj(z), m - aa) /
                       fact[m - aa];
            }
            c(m, k) = pref * acc * std::sqrt(std::pow(a, k) / fact[k]) *
                      std::sqrt(fact[m] / std::pow(a, m));
        }
    }
    return c;
}

}  // namespace

ShiftMatrix shift_matrix(const Point& z, int N, const FockParams& params,
                         double leakage_threshold, int trusted_degree) {
    if (N < 0 || N > 150)
        throw std::invalid_argument("shift_matrix: truncation degree out of range");
    if (trusted_degree < 0) trusted_degree = N;
    const int n = params.n;
    std::vector<Eigen::MatrixXcd> c1(n);
    for (int i = 0; i < n; ++i) c1[i] = shift_coeffs_1d(z(i), N, params.alpha);

    auto basis = enumerate_basis(n, N);
    const long D = static_cast<long>(basis.size());
    Eigen::MatrixXcd C(D, D);
    for (long col = 0; col < D; ++col) {
        for (long row = 0; row < D; ++row) {
            Complex v = 1.0;
            for (int i = 0; i < n; ++i)
                v *= c1[i](basis[row].multi_index[i], basis[col].multi_index[i]);
            C(row, col) = v;
        }
    }
    double leak = 0.0;
    for (long col = 0; col < D; ++col) {
        if (basis[col].degree() > trusted_degree) continue;
        leak = std::max(leak, 1.0 - C.col(col).squaredNorm());
    }
    if (leak > leakage_threshold)
        throw std::runtime_error("shift_matrix: truncation leakage " + std::to_string(leak) +
                                 " above threshold; increase N or reduce |z|");
    return ShiftMatrix{BasisMatrix{std::move(C), params, N, std::move(basis)}, leak};
}

Complex berezin_transform(const SymbolFunction& f, const Point& z, const FockParams& params,
                          const QuadratureGrid& grid) {
    require_measure(grid, params.alpha, "berezin_transform");
    Complex acc = 0.0;
    for (int j = 0; j < grid.size(); ++j) acc += grid.weights(j) * f(z + grid.nodes[j]);
    if (std::abs(acc) > f.sup_bound() * (1.0 + 1e-9) + 1e-12)
        throw std::runtime_error("berezin_transform: value exceeds symbol bound (grid coverage?)");
    return acc;
}

}  // namespace fock
