#include "fock/basis.hpp"

#include <algorithm>
#include <cmath>

namespace fock {

namespace {

void gen_degree(int n, int deg, std::vector<int>& cur, std::vector<BasisIndex>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(deg);
        out.push_back(BasisIndex{cur});
        cur.pop_back();
        return;
    }
    // lexicographic: largest first component first
    for (int k = deg; k >= 0; --k) {
        cur.push_back(k);
        gen_degree(n, deg - k, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<BasisIndex> enumerate_basis(int n, int N) {
    if (n < 1 || N < 0) throw std::invalid_argument("enumerate_basis: bad arguments");
    std::vector<BasisIndex> out;
    std::vector<int> cur;
    for (int d = 0; d <= N; ++d) gen_degree(n, d, cur, out);
    return out;
}

long basis_count(int n, int N) {
    long c = 1;
    for (int i = 1; i <= n; ++i) c = c * (N + i) / i;
    return c;
}

Complex basis_eval(const BasisIndex& k, const Point& z, const FockParams& params) {
    if (static_cast<int>(k.multi_index.size()) != params.n)
        throw std::invalid_argument("basis_eval: index dimension mismatch");
    Complex v = 1.0;
    for (int i = 0; i < params.n; ++i) {
        for (int j = 1; j <= k.multi_index[i]; ++j)
            v *= z(i) * std::sqrt(params.alpha / j);
    }
    return v;
}

Eigen::MatrixXcd basis_evaluation_matrix(const std::vector<BasisIndex>& basis,
                                         const QuadratureGrid& grid,
                                         const FockParams& params) {
    Eigen::MatrixXcd E(grid.size(), basis.size());
    for (int i = 0; i < grid.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j)
            E(i, j) = basis_eval(basis[j], grid.nodes[i], params);
    return E;
}

}  // namespace fock
