#include "fock/battery.hpp"

#include "fock/band.hpp"
#include "fock/basis.hpp"
#include "fock/criteria.hpp"
#include "fock/lattice.hpp"
#include "fock/lower_norm.hpp"
#include "fock/operators.hpp"
#include "fock/oscillation.hpp"
#include "fock/quadrature.hpp"
#include "fock/spectra.hpp"
#include "fock/symbol.hpp"

#include <Eigen/SVD>

#include <chrono>
#include <cmath>
#include <sstream>

namespace fock {

namespace {

// Exact spectral norm; the power iteration in op_norm2 can stall when the two
// top singular values are close, which random test matrices regularly hit.
double svd_norm2(const Eigen::MatrixXcd& A) {
    return Eigen::BDCSVD<Eigen::MatrixXcd>(A).singularValues()(0);
}

struct Lcg {
    unsigned long long state = 0x853c49e6748fea9bull;
    double uniform() {  // in [0, 1)
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return (state >> 11) / 9007199254740992.0;
    }
    double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    Complex cunit() { return Complex(range(-1.0, 1.0), range(-1.0, 1.0)); }
};

Eigen::MatrixXcd random_matrix(Lcg& rng, int rows, int cols) {
    Eigen::MatrixXcd A(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) A(i, j) = rng.cunit();
    return A;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

// entire, Gaussian-decaying test symbols (quadrature-friendly)
SymbolFunction gaussian_bump(Complex center, double height) {
    return SymbolFunction(
        [center, height](const Point& z) -> Complex {
            Point c = Point::Zero(z.size());
            c(0) = center;
            return height * std::exp(-(z - c).squaredNorm());
        },
        std::abs(height));
}

SymbolFunction cosine_envelope() {
    return SymbolFunction(
        [](const Point& z) -> Complex {
            return std::cos(z(0).real()) * std::exp(-z.squaredNorm() / 8.0);
        },
        1.0);
}

SymbolFunction winding_envelope() {
    return SymbolFunction(
        [](const Point& z) -> Complex { return z(0) * std::exp(-0.5 * z.squaredNorm()); },
        0.61);
}

std::vector<Point> standard_targets() {
    std::vector<Point> t;
    for (Complex z : {Complex(0, 0), Complex(0.5, 0), Complex(-1.2, 0), Complex(1, 0.5),
                      Complex(-0.3, 1.1), Complex(0, 2), Complex(1.5, -1.3), Complex(2, 0)})
        t.push_back(point1(z));
    return t;
}

// --- the twelve checks -----------------------------------------------------

CheckResult check_projection_identity() {
    CheckResult res{"projection-identity", false, "", 0.0};
    FockParams params(1, 2.0, 1.0);
    QuadratureGrid grid = build_grid_nu(1, 1.0, GridScheme::HermiteTensor, 40);
    std::vector<Point> targets = standard_targets();

    double fix_err = 0.0;
    for (const BasisIndex& k : enumerate_basis(1, 10)) {
        Eigen::VectorXcd samples(grid.size());
        for (int i = 0; i < grid.size(); ++i) samples(i) = basis_eval(k, grid.nodes[i], params);
        Eigen::VectorXcd out = apply_projection(samples, grid, params, targets);
        for (size_t t = 0; t < targets.size(); ++t)
            fix_err = std::max(fix_err, std::abs(out(t) - basis_eval(k, targets[t], params)));
    }

    SymbolFunction f = cosine_envelope();
    Eigen::VectorXcd samples(grid.size());
    for (int i = 0; i < grid.size(); ++i) samples(i) = f(grid.nodes[i]);
    Eigen::VectorXcd once = apply_projection(samples, grid, params, targets);
    Eigen::VectorXcd at_nodes = apply_projection(samples, grid, params, grid.nodes);
    Eigen::VectorXcd twice = apply_projection(at_nodes, grid, params, targets);
    double idem_gap = (twice - once).cwiseAbs().maxCoeff();

    res.pass = fix_err <= 1e-9 && idem_gap <= 2e-9;
    res.detail = "monomials fixed to " + fmt(fix_err) + ", idempotence gap " + fmt(idem_gap);
    return res;
}

CheckResult check_toeplitz_identity() {
    CheckResult res{"toeplitz-identity", false, "", 0.0};
    FockParams params(1, 2.0, 1.0);
    QuadratureGrid grid = build_grid_nu(1, 1.0, GridScheme::HermiteTensor, 32);
    BasisMatrix T = assemble_toeplitz(constant_symbol(1.0), 30, params, grid);
    Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(T.entries.rows(), T.entries.cols());
    double err = (T.entries - I).cwiseAbs().maxCoeff();
    res.pass = err <= 1e-10;
    res.detail = "N=30 deviation from identity " + fmt(err);
    return res;
}

CheckResult check_radial_diagonal() {
    CheckResult res{"radial-diagonal", false, "", 0.0};
    FockParams params(1, 2.0, 1.0);
    GridOptions opts;
    opts.angular = 80;
    opts.split_s = 1.0;  // the symbol jumps at s = alpha R^2 = 1
    QuadratureGrid grid = build_grid_nu(1, 1.0, GridScheme::Polar, 40, opts);
    BasisMatrix T = assemble_toeplitz(indicator_symbol(1.0), 30, params, grid);

    // P(k+1, R^2) = 1 - e^{-R^2} sum_{j<=k} R^{2j} / j!, R = 1
    double diag_err = 0.0, partial = 0.0, term = 1.0;
    for (int k = 0; k <= 30; ++k) {
        if (k > 0) term /= k;
        partial += term;
        double want = 1.0 - std::exp(-1.0) * partial;
        diag_err = std::max(diag_err, std::abs(T.entries(k, k) - want));
    }
    double off = 0.0;
    for (int j = 0; j <= 30; ++j)
        for (int k = 0; k <= 30; ++k)
            if (j != k) off = std::max(off, std::abs(T.entries(j, k)));

    res.pass = diag_err <= 1e-8 && off < 1e-10;
    res.detail = "diagonal gap " + fmt(diag_err) + ", off-diagonal max " + fmt(off);
    return res;
}

CheckResult check_shift_algebra() {
    CheckResult res{"shift-algebra", false, "", 0.0};
    FockParams params(1, 2.0, 1.0);
    QuadratureGrid grid = build_grid_nu(1, 1.0, GridScheme::HermiteTensor, 48);
    Lcg rng;

    // isometry on polynomial-times-Gaussian samples
    double iso_err = 0.0;
    std::vector<Complex> zs = {Complex(3, 0), Complex(0, 3), Complex(2.1, 2.1),
                               Complex(1.5, -1.0), Complex(0, 0.5)};
    for (Complex z : zs) {
        Eigen::VectorXcd coeff(5);
        for (int j = 0; j < 5; ++j) coeff(j) = rng.cunit();
        auto f = [coeff](const Point& w) {
            Complex acc = 0.0, pw = 1.0;
            for (int j = 0; j < 5; ++j, pw *= w(0)) acc += coeff(j) * pw;
            return acc * std::exp(-w.squaredNorm() / 8.0);
        };
        Eigen::VectorXcd samples(grid.size());
        for (int i = 0; i < grid.size(); ++i) samples(i) = f(grid.nodes[i]);
        double norm_f = lp_norm(samples, grid, params);
        Eigen::VectorXcd shifted = shift_samples(f, point1(z), grid, params);
        iso_err = std::max(iso_err, std::abs(lp_norm(shifted, grid, params) / norm_f - 1.0));
    }

    // composition phase on the trusted block
    ShiftMatrix A = shift_matrix(point1(Complex(1, 0)), 60, params, 1e-10, 5);
    ShiftMatrix B = shift_matrix(point1(Complex(0, 1)), 60, params, 1e-10, 5);
    ShiftMatrix C = shift_matrix(point1(Complex(1, 1)), 60, params, 1e-10, 5);
    Complex phase = std::exp(Complex(0, 1));  // e^{(a/2)(<w2,w1> - <w1,w2>)} at a = 1
    Eigen::MatrixXcd comp = A.op.entries * B.op.entries - phase * C.op.entries;
    double comp_err = comp.topLeftCorner(6, 6).cwiseAbs().maxCoeff();

    // intertwining: projection after C_z equals the shifted projection
    SymbolFunction f = cosine_envelope();
    Point z = point1(Complex(1, 0.5));
    Eigen::VectorXcd samples(grid.size());
    for (int i = 0; i < grid.size(); ++i) samples(i) = f(grid.nodes[i]);
    std::vector<Point> targets = standard_targets();
    auto feval = [&f](const Point& w) { return f(w); };
    Eigen::VectorXcd lhs =
        apply_projection(shift_samples(feval, z, grid, params), grid, params, targets);
    std::vector<Point> back(targets.size());
    for (size_t t = 0; t < targets.size(); ++t) back[t] = targets[t] - z;
    Eigen::VectorXcd proj_back = apply_projection(samples, grid, params, back);
    double twist_err = 0.0;
    for (size_t t = 0; t < targets.size(); ++t) {
        Complex rhs = proj_back(t) * shift_cocycle(targets[t], z, params);
        twist_err = std::max(twist_err, std::abs(lhs(t) - rhs));
    }

    res.pass = iso_err <= 1e-10 && comp_err <= 1e-10 && twist_err <= 1e-8;
    res.detail = "isometry " + fmt(iso_err) + ", composition " + fmt(comp_err) +
                 ", intertwining " + fmt(twist_err);
    return res;
}

CheckResult check_toeplitz_covariance() {
    CheckResult res{"toeplitz-covariance", false, "", 0.0};
    FockParams params(1, 2.0, 1.0);
    const int N = 20, Nbig = 90;
    QuadratureGrid grid = build_grid_nu(1, 1.0, GridScheme::HermiteTensor, 92);
    Point z = point1(Complex(1.0, -0.5));
    ShiftMatrix Cz = shift_matrix(z, Nbig, params, 1e-9, N);
    ShiftMatrix Cmz = shift_matrix(-z, Nbig, params, 1e-9, N);

    double worst = 0.0;
    for (const SymbolFunction& f :
         {gaussian_bump(Complex(0.5, 0), 1.0), cosine_envelope(), winding_envelope()}) {
        BasisMatrix Tbig = assemble_toeplitz(f, Nbig, params, grid);
        Eigen::MatrixXcd conj = Cz.op.entries * Tbig.entries * Cmz.op.entries;
        BasisMatrix direct = assemble_toeplitz(f.translate(z), N, params, grid);
        double gap = (conj.topLeftCorner(N + 1, N + 1) - direct.entries).norm();
        worst = std::max(worst, gap);
    }
    res.pass = worst <= 1e-6;
    res.detail = "worst Frobenius gap " + fmt(worst) + " over 3 symbols";
    return res;
}

CheckResult check_partition_invariants() {
    CheckResult res{"partition-invariants", false, "", 0.0};
    const int n = 1;
    CubeLattice lattice(n, 30.0);
    Lcg rng;

    bool ok = lattice.cube_diameter() == 6.0 * std::sqrt(2.0 * n);
    ok = ok && trapezoid_phi(0.0) == 1.0 && trapezoid_phi(4.0) == 0.0 &&
         trapezoid_phi(-4.0) == 0.0 && trapezoid_phi(3.0) == 0.5;

    double sum_err = 0.0, lip = 0.0;
    int max_o1 = 0, max_o3 = 0;
    bool unique_cube = true;
    PartitionFamily fam(lattice, 1.0);
    PartitionFamily fam_half(lattice, 0.5);
    for (int trial = 0; trial < 10000; ++trial) {
        Eigen::VectorXd x(2);
        x << rng.range(-25.0, 25.0), rng.range(-25.0, 25.0);
        Point z = point1(Complex(x(0), x(1)));
        sum_err = std::max(sum_err, std::abs(fam.phi_sum(z) - 1.0));
        sum_err = std::max(sum_err, std::abs(fam_half.phi_sum(z) - 1.0));

        int in_cube = 0, o1 = 0, o3 = 0;
        for (int j = 0; j < lattice.cube_count(); ++j) {
            bool in = true;
            for (int i = 0; i < 2; ++i) {
                double u = x(i) - lattice.sigma(j)(i);
                in = in && u >= -3.0 && u < 3.0;
            }
            if (in) ++in_cube;
            if (lattice.in_omega(j, 1, x)) ++o1;
            if (lattice.in_omega(j, 3, x)) ++o3;
        }
        unique_cube = unique_cube && in_cube == 1;
        max_o1 = std::max(max_o1, o1);
        max_o3 = std::max(max_o3, o3);

        if (trial < 2000) {
            Eigen::VectorXd y = x;
            double h = rng.range(1e-3, 0.5);
            double th = rng.range(0.0, 2.0 * M_PI);
            y(0) += h * std::cos(th);
            y(1) += h * std::sin(th);
            for (int j = 0; j < lattice.cube_count(); ++j) {
                double d = std::abs(fam.phi(j, x) - fam.phi(j, y));
                lip = std::max(lip, d / h);
            }
        }
    }
    ok = ok && sum_err <= 1e-14 && unique_cube && max_o1 <= 4 && max_o3 <= 16 &&
         lip <= n + 1e-9;
    res.pass = ok;
    res.detail = "sum gap " + fmt(sum_err) + ", overlaps " + std::to_string(max_o1) + "/" +
                 std::to_string(max_o3) + ", Lipschitz " + fmt(lip);
    return res;
}

CheckResult check_band_decay() {
    CheckResult res{"band-decay", false, "", 0.0};
    FockParams params(1, 2.0, 1.0);
    GridOptions opts;
    opts.extent = 42.0;
    QuadratureGrid grid = build_grid_nu(1, 1.0, GridScheme::Uniform, 68, opts);
    const std::vector<double> ts = {1.0, 0.5, 0.25, 0.125};

    DecayProfile prof;
    {
        GridOperator P = projection_operator(grid, params);
        prof = band_decay_profile(P, ts);
    }
    double mult_max = 0.0;
    {
        GridOperator M = multiplication_operator(cosine_envelope(), grid, params);
        DecayProfile zero = band_decay_profile(M, ts);
        for (double v : zero.values) mult_max = std::max(mult_max, v);
    }
    res.pass = prof.strictly_decreasing && prof.values[3] < 0.1 * prof.values[0] &&
               mult_max <= 1e-14;
    res.detail = "D(1)=" + fmt(prof.values[0]) + ", D(1/8)=" + fmt(prof.values[3]) +
                 ", multiplication max " + fmt(mult_max);
    return res;
}

CheckResult check_lower_norm_laws() {
    CheckResult res{"lower-norm-laws", false, "", 0.0};
    Lcg rng;
    const int dim = 24;
    double slack = 1e100;  // min over all inequality slacks; must stay >= -1e-9

    for (int trial = 0; trial < 100; ++trial) {
        Eigen::MatrixXcd A = random_matrix(rng, dim, dim);
        Eigen::MatrixXcd B = A + 0.05 * random_matrix(rng, dim, dim);
        std::vector<int> F, G;
        for (int i = 0; i < dim; ++i) {
            bool in_f = rng.uniform() < 0.5;
            if (in_f) F.push_back(i);
            if (in_f || rng.uniform() < 0.5) G.push_back(i);
        }
        if (F.empty()) F.push_back(static_cast<int>(rng.uniform() * dim));
        if (G.size() == F.size()) G = F;

        LowerNormReport nf = lower_norm(A, F);
        // support shrinking raises nu
        slack = std::min(slack, lower_norm(A, G).value * (-1.0) + nf.value);
        // Lipschitz in the operator
        slack = std::min(slack, svd_norm2(A - B) - std::abs(nf.value - lower_norm(B, F).value));
        // the minimizer achieves the value
        double achieved = (A * nf.minimizer).norm();
        slack = std::min(slack, 1e-9 - std::abs(achieved - nf.value));

        // invertible case: nu(A) ||A^{-1}|| = 1
        Eigen::MatrixXcd inv_base =
            A + 3.0 * std::sqrt(static_cast<double>(dim)) *
                    Eigen::MatrixXcd::Identity(dim, dim);
        double prod =
            lower_norm(inv_base, full_mask(dim)).value * svd_norm2(inv_base.inverse());
        slack = std::min(slack, 1e-9 - std::abs(prod - 1.0));
    }

    // localized law on a grid operator
    FockParams params(1, 2.0, 1.0);
    GridOptions opts;
    opts.extent = 6.0;
    QuadratureGrid grid = build_grid_nu(1, 1.0, GridScheme::Uniform, 12, opts);
    std::vector<Point> centers;
    for (double re : {-4.0, 0.0, 4.0})
        for (double im : {-4.0, 0.0, 4.0}) centers.push_back(point1(Complex(re, im)));
    for (int trial = 0; trial < 100; ++trial) {
        GridOperator A{random_matrix(rng, grid.size(), grid.size()), grid, params};
        std::vector<int> F;
        for (int i = 0; i < grid.size(); ++i)
            if (rng.uniform() < 0.7) F.push_back(i);
        if (F.empty()) F.push_back(0);
        double t = rng.range(0.75, 1.0);
        double nu = lower_norm(A, F).value;
        double nut = localized_lower_norm(A, F, t, centers).value;
        slack = std::min(slack, nut - nu);
    }

    res.pass = slack >= -1e-9;
    res.detail = "minimal slack " + fmt(slack) + " over 100 instances per law";
    return res;
}

CheckResult check_essential_spectrum() {
    CheckResult res{"essential-spectrum", false, "", 0.0};
    FockParams params(1, 2.0, 1.0);

    SymbolFunction one_plus_bump =
        sum_symbol(constant_symbol(1.0), bump_symbol(0.0, 1.0, 0.5));
    BoundaryReport r1 = essential_spectrum_vo(one_plus_bump, radial_schedule(6, 40, 5), 1);
    bool ok1 = !r1.caveat && r1.set.points.size() == 1 &&
               std::abs(r1.set.points[0] - Complex(1.0)) <= 1e-3;

    EscapeSchedule far = radial_schedule(10, 200, 5);
    BoundaryReport r2 = essential_spectrum_vo(angular_symbol(1), far, 1, 256);
    std::vector<Complex> circle;
    for (int k = 0; k < 256; ++k) {
        double th = 2.0 * M_PI * k / 256;
        circle.push_back(Complex(std::cos(th), std::sin(th)));
    }
    double haus = hausdorff_distance(r2.set.points, circle);
    bool ok2 = !r2.caveat && haus < 1e-2;

    SymbolFunction decay = radial_symbol([](double s) { return Complex(1.0 / (1.0 + s)); }, 1.0);
    BoundaryReport r3 = essential_spectrum_vo(decay, far, 1);
    std::vector<double> fractions;
    for (int N : {40, 80, 160}) {
        GridOptions opts;
        opts.angular = 2 * N + 4;
        QuadratureGrid grid =
            build_grid_nu(1, 1.0, GridScheme::Polar, (2 * N + 4 + 2 + 3) / 4, opts);
        ClusterReport cr =
            truncation_eigen_cluster(decay, {N}, params, grid, r3.set.points, 0.05);
        fractions.push_back(cr.fractions[0]);
    }
    bool ok3 = fractions[0] <= fractions[1] && fractions[1] <= fractions[2] &&
               fractions[2] > 0.8;

    res.pass = ok1 && ok2 && ok3;
    res.detail = "bump set gap " + fmt(std::abs(r1.set.points[0] - Complex(1.0))) +
                 ", circle Hausdorff " + fmt(haus) + ", cluster fraction " +
                 fmt(fractions[2]);
    return res;
}

CheckResult check_essential_norm() {
    CheckResult res{"essential-norm", false, "", 0.0};
    FockParams params(1, 2.0, 1.0);

    SymbolFunction f = sum_symbol(constant_symbol(Complex(0.8, 0)), bump_symbol(0.0, 1.0, 0.5));
    NormInterval a = essential_norm_bounds(f, params, radial_schedule(6, 40, 5));
    bool ok1 = a.p2_exact && a.lower == a.upper && std::abs(a.lower - 0.8) <= 1e-3;

    NormInterval b =
        essential_norm_bounds(angular_symbol(1), params, radial_schedule(10, 200, 5));
    bool ok2 = b.p2_exact && b.lower == b.upper && std::abs(b.lower - 1.0) <= 1e-2;

    res.pass = ok1 && ok2;
    res.detail = "constant-plus-bump " + fmt(a.lower) + ", winding " + fmt(b.lower);
    return res;
}

CheckResult check_vo_vmo() {
    CheckResult res{"vo-vmo-battery", false, "", 0.0};
    FockParams params(1, 2.0, 1.0);
    std::vector<double> radii = {5, 10, 20, 40};

    bool ok_const =
        vo_verdict(constant_symbol(Complex(0.3, 0.1)), radii, 1.0, 1e-2, 1).verdict ==
        VoVerdict::Vo;
    std::vector<double> far_radii = {25, 50, 100, 200};
    bool ok_ang =
        vo_verdict(angular_symbol(1), far_radii, 1.0, 1e-2, 1).verdict == VoVerdict::Vo;
    SymbolFunction chirp = radial_symbol([](double s) { return Complex(std::sin(s)); }, 1.0);
    bool ok_chirp = vo_verdict(chirp, radii, 1.0, 1e-2, 1).verdict == VoVerdict::NotVo;

    QuadratureGrid grid = build_grid_nu(1, 1.0, GridScheme::HermiteTensor, 15);
    EscapeSchedule sched = radial_schedule(6, 14, 4);
    SymbolFunction one_plus_bump =
        sum_symbol(constant_symbol(1.0), bump_symbol(0.0, 1.0, 0.5));
    VmoReport proxy =
        vmo_via_berezin(one_plus_bump, {2, 4, 6, 8}, params, grid, sched);
    bool ok_proxy = proxy.proxy.set.points.size() == 1 &&
                    std::abs(proxy.proxy.set.points[0] - Complex(1.0)) <= 1e-3;

    VmoReport compact =
        vmo_via_berezin(bump_symbol(0.0, 1.0, 0.5), {2, 4, 6, 8}, params, grid, sched);
    double tail = compact.mean_oscillation.back();
    bool ok_tail = tail < 1e-3;

    res.pass = ok_const && ok_ang && ok_chirp && ok_proxy && ok_tail;
    res.detail = std::string("verdicts ") + (ok_const ? "vo" : "!") + "/" +
                 (ok_ang ? "vo" : "!") + "/" + (ok_chirp ? "not-vo" : "!") +
                 ", proxy gap " + fmt(std::abs(proxy.proxy.set.points[0] - Complex(1.0))) +
                 ", decay tail " + fmt(tail);
    return res;
}

CheckResult check_analytic_criteria() {
    CheckResult res{"analytic-criteria", false, "", 0.0};
    Lcg rng;

    bool sweep_ok = boundedness_criterion(2, 1, 1).bounded;  // the equality case
    for (int trial = 0; trial < 100; ++trial) {
        double a = rng.range(0.1, 3.1), b = rng.range(0.1, 3.1), c = rng.range(0.1, 3.1);
        sweep_ok = sweep_ok && boundedness_criterion(a, b, c).bounded == (4 * b * c - a * a >= 0);
    }
    BoundednessVerdict wit = boundedness_criterion(3, 1, 1);
    sweep_ok = sweep_ok && !wit.bounded && wit.witness_slope == 1.0;
    sweep_ok = sweep_ok && exponent_grid_sup(1, 1, 1, 5.0, 200) <= 1.0 + 1e-12;

    bool dual_ok = duality_constant(FockParams(1, 2.0, 1.0)) == 1.0 &&
                   duality_constant(FockParams(2, 2.0, 1.0)) == 1.0;
    // long-double oracle for the closed form at n = 1, p = 4
    long double p = 4.0L, q = 4.0L / 3.0L;
    long double oracle = std::exp(std::log(2.0L) - std::log(p) / p - std::log(q) / q);
    double d4 = duality_constant(FockParams(1, 4.0, 1.0));
    dual_ok = dual_ok && std::abs(d4 - static_cast<double>(oracle)) <= 1e-12 &&
              std::abs(d4 - 1.1398) <= 1e-4;
    FockParams p4(1, 4.0, 1.0);
    dual_ok = dual_ok &&
              std::abs(duality_constant(p4) - duality_constant(FockParams(1, p4.q(), 1.0))) <=
                  1e-14;

    FockParams params(1, 2.0, 1.0);
    QuadratureGrid grid = build_grid(params, GridScheme::HermiteTensor, 40);
    double v0 = hille_tamarkin_integral(0.0, params, grid);
    double v1 = hille_tamarkin_integral(1.0, params, grid);  // throws when refinement-unstable
    double v2 = hille_tamarkin_integral(2.0, params, grid);
    bool ht_ok = v0 == 0.0 && std::isfinite(v1) && std::isfinite(v2) && v1 > 0.0 && v2 >= v1;

    res.pass = sweep_ok && dual_ok && ht_ok;
    res.detail = "sweep " + std::string(sweep_ok ? "ok" : "FAIL") + ", duality(4) " + fmt(d4) +
                 ", double integral " + fmt(v1) + " / " + fmt(v2);
    return res;
}

}  // namespace

std::vector<CheckResult> run_battery() {
    using Clock = std::chrono::steady_clock;
    std::vector<std::pair<const char*, CheckResult (*)()>> checks = {
        {"projection-identity", check_projection_identity},
        {"toeplitz-identity", check_toeplitz_identity},
        {"radial-diagonal", check_radial_diagonal},
        {"shift-algebra", check_shift_algebra},
        {"toeplitz-covariance", check_toeplitz_covariance},
        {"partition-invariants", check_partition_invariants},
        {"band-decay", check_band_decay},
        {"lower-norm-laws", check_lower_norm_laws},
        {"essential-spectrum", check_essential_spectrum},
        {"essential-norm", check_essential_norm},
        {"vo-vmo-battery", check_vo_vmo},
        {"analytic-criteria", check_analytic_criteria}};

    std::vector<CheckResult> results;
    for (const auto& [name, check] : checks) {
        auto start = Clock::now();
        CheckResult res;
        try {
            res = check();
        } catch (const std::exception& e) {
            res.pass = false;
            res.detail = std::string("exception: ") + e.what();
        }
        res.name = name;
        res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        results.push_back(res);
    }
    return results;
}

}  // namespace fock
