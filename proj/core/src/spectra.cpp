#include "fock/spectra.hpp"

#include "fock/oscillation.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace fock {

namespace {

double dist_to(const Complex& v, const std::vector<Complex>& set) {
    double d = std::numeric_limits<double>::infinity();
    for (const Complex& w : set) d = std::min(d, std::abs(v - w));
    return d;
}

}  // namespace

PointSet cluster_points(const std::vector<Complex>& values, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("cluster_points: tolerance must be > 0");
    std::vector<Complex> sums;
    std::vector<int> counts;
    for (const Complex& v : values) {
        int best = -1;
        double best_d = tol;
        for (size_t c = 0; c < sums.size(); ++c) {
            double d = std::abs(v - sums[c] / static_cast<double>(counts[c]));
            if (d <= best_d) {
                best_d = d;
                best = static_cast<int>(c);
            }
        }
        if (best < 0) {
            sums.push_back(v);
            counts.push_back(1);
        } else {
            sums[best] += v;
            counts[best] += 1;
        }
    }
    // merge representatives that ended up closer than tol
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < sums.size() && !merged; ++i)
            for (size_t j = i + 1; j < sums.size() && !merged; ++j) {
                Complex ri = sums[i] / static_cast<double>(counts[i]);
                Complex rj = sums[j] / static_cast<double>(counts[j]);
                if (std::abs(ri - rj) <= tol) {
                    sums[i] += sums[j];
                    counts[i] += counts[j];
                    sums.erase(sums.begin() + static_cast<long>(j));
                    counts.erase(counts.begin() + static_cast<long>(j));
                    merged = true;
                }
            }
    }
    PointSet out;
    out.cluster_tol = tol;
    for (size_t c = 0; c < sums.size(); ++c) {
        out.points.push_back(sums[c] / static_cast<double>(counts[c]));
        out.multiplicities.push_back(counts[c]);
    }
    return out;
}

double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.empty() || b.empty())
        return (a.empty() && b.empty()) ? 0.0 : std::numeric_limits<double>::infinity();
    double h = 0.0;
    for (const Complex& v : a) h = std::max(h, dist_to(v, b));
    for (const Complex& v : b) h = std::max(h, dist_to(v, a));
    return h;
}

double hausdorff_distance(const PointSet& a, const PointSet& b) {
    return hausdorff_distance(a.points, b.points);
}

EscapeSchedule::EscapeSchedule(std::vector<double> radii_, double window)
    : radii(std::move(radii_)), window_radius(window) {
    if (radii.size() < 2) throw std::invalid_argument("EscapeSchedule: need at least 2 radii");
    for (size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i] > radii[i - 1]))
            throw std::invalid_argument("EscapeSchedule: radii must be strictly increasing");
    if (!(radii.front() > 0.0)) throw std::invalid_argument("EscapeSchedule: radii must be > 0");
}

EscapeSchedule radial_schedule(double r_first, double r_last, int count) {
    if (count < 2) throw std::invalid_argument("radial_schedule: count must be >= 2");
    if (!(r_first > 0.0) || !(r_last > r_first))
        throw std::invalid_argument("radial_schedule: need 0 < r_first < r_last");
    std::vector<double> radii(count);
    const double ratio = std::pow(r_last / r_first, 1.0 / (count - 1));
    for (int i = 0; i < count; ++i) radii[i] = r_first * std::pow(ratio, i);
    radii.back() = r_last;
    return EscapeSchedule(radii);
}

std::vector<Point> sphere_directions(int n, int count) {
    if (n < 1 || count < 1) throw std::invalid_argument("sphere_directions: bad arguments");
    std::vector<Point> dirs;
    dirs.reserve(count);
    if (n == 1) {
        for (int k = 0; k < count; ++k) {
            double th = 2.0 * M_PI * k / count;
            dirs.push_back(point1(Complex(std::cos(th), std::sin(th))));
        }
        return dirs;
    }
    // reproducible pseudo-uniform directions: normalized Gaussian vectors
    // from a fixed linear congruential stream
    unsigned long long state = 0x9e3779b97f4a7c15ull;
    auto next_uniform = [&state]() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return ((state >> 11) + 0.5) / 9007199254740992.0;
    };
    for (int k = 0; k < count; ++k) {
        Point d(n);
        for (int i = 0; i < n; ++i) {
            double u1 = next_uniform(), u2 = next_uniform();
            double rho = std::sqrt(-2.0 * std::log(u1));
            d(i) = Complex(rho * std::cos(2.0 * M_PI * u2), rho * std::sin(2.0 * M_PI * u2));
        }
        dirs.push_back(d / d.norm());
    }
    return dirs;
}

BoundaryReport boundary_value_set(const SymbolFunction& f, const EscapeSchedule& schedule,
                                  int n, int angular_samples, double cluster_tol) {
    if (angular_samples < 1)
        throw std::invalid_argument("boundary_value_set: angular_samples must be >= 1");
    std::vector<Point> dirs = sphere_directions(n, angular_samples);

    std::vector<PointSet> shells;
    for (double r : schedule.radii) {
        std::vector<Complex> values;
        values.reserve(dirs.size());
        for (const Point& d : dirs) values.push_back(f(r * d));
        shells.push_back(cluster_points(values, cluster_tol));
    }

    BoundaryReport rep;
    rep.set = shells.back();
    rep.drift = hausdorff_distance(shells[shells.size() - 2], shells.back());
    rep.stabilized = rep.drift < cluster_tol;
    return rep;
}

BoundaryReport essential_spectrum_vo(const SymbolFunction& f, const EscapeSchedule& schedule,
                                     int n, int angular_samples, double cluster_tol,
                                     double vo_threshold) {
    VoReport vo = vo_verdict(f, schedule.radii, schedule.window_radius, vo_threshold, n);
    BoundaryReport rep = boundary_value_set(f, schedule, n, angular_samples, cluster_tol);
    rep.vo_checked = true;
    rep.caveat = (vo.verdict != VoVerdict::Vo);
    return rep;
}

NormInterval essential_norm_bounds(const SymbolFunction& f, const FockParams& params,
                                   const EscapeSchedule& schedule, double proj_norm,
                                   int angular_samples, double cluster_tol) {
    BoundaryReport rep =
        essential_spectrum_vo(f, schedule, params.n, angular_samples, cluster_tol);
    if (rep.caveat)
        throw std::runtime_error("essential_norm_bounds: symbol failed the vo check");
    double S = 0.0;
    for (const Complex& v : rep.set.points) S = std::max(S, std::abs(v));

    NormInterval out;
    out.lower = S;
    if (std::abs(params.p - 2.0) < 1e-14) {
        out.upper = S;
    } else if (proj_norm > 0.0) {
        out.upper = proj_norm * S;
    } else {
        out.upper = S;
        out.p2_exact = false;  // p != 2 reported with the p = 2 value
    }
    return out;
}

FredholmReport fredholm_test_vo(const SymbolFunction& f, Complex lambda,
                                const EscapeSchedule& schedule, int n, double margin,
                                int angular_samples, double cluster_tol) {
    BoundaryReport rep = essential_spectrum_vo(f, schedule, n, angular_samples, cluster_tol);

    FredholmReport out;
    out.caveat = rep.caveat;
    out.drift = rep.drift;
    out.margin = margin > 0.0 ? margin : 10.0 * std::max(rep.drift, cluster_tol);
    out.distance = dist_to(lambda, rep.set.points);
    if (out.distance > out.margin + out.drift)
        out.verdict = FredholmVerdict::Fredholm;
    else if (out.distance < out.margin - out.drift && out.distance <= cluster_tol)
        out.verdict = FredholmVerdict::NotFredholm;
    else
        out.verdict = FredholmVerdict::Uncertain;
    return out;
}

ClusterReport truncation_eigen_cluster(const SymbolFunction& f, const std::vector<int>& N_values,
                                       const FockParams& params, const QuadratureGrid& grid,
                                       const std::vector<Complex>& reference, double delta) {
    if (N_values.empty()) throw std::invalid_argument("truncation_eigen_cluster: no degrees");
    if (!(delta > 0.0)) throw std::invalid_argument("truncation_eigen_cluster: delta must be > 0");

    ClusterReport rep;
    rep.delta = delta;
    rep.pollution_warning =
        f.tag() != SymbolTag::Radial && f.tag() != SymbolTag::Constant;
    for (int N : N_values) {
        BasisMatrix T = assemble_toeplitz(f, N, params, grid);
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(T.entries, false);
        Eigen::VectorXcd ev = es.eigenvalues();
        int inside = 0;
        for (long i = 0; i < ev.size(); ++i)
            if (dist_to(ev(i), reference) <= delta) ++inside;
        rep.truncation_degrees.push_back(N);
        rep.eigenvalues.push_back(ev);
        rep.fractions.push_back(static_cast<double>(inside) / static_cast<double>(ev.size()));
    }
    return rep;
}

}  // namespace fock
