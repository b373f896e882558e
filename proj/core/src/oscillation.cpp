#include "fock/oscillation.hpp"

#include "fock/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace fock {

namespace {

double frac(double x) { return x - std::floor(x); }

/// Deterministic sample of the closed ball B(0, r): the 4n axis-extreme
/// points, then alternating boundary and low-discrepancy interior shells.
std::vector<Point> ball_sample(int n, double r, int samples) {
    std::vector<Point> pts;
    pts.reserve(samples + 4 * n);
    for (int i = 0; i < n; ++i)
        for (Complex u : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
            Point w = Point::Zero(n);
            w(i) = r * u;
            pts.push_back(w);
        }
    const int remaining = samples - static_cast<int>(pts.size());
    if (remaining > 0) {
        std::vector<Point> dirs = sphere_directions(n, remaining);
        const double golden = 0.6180339887498949;
        for (int k = 0; k < remaining; ++k) {
            double rho = (k % 2 == 0) ? 1.0 : frac((k + 1) * golden);
            pts.push_back(r * rho * dirs[k]);
        }
    }
    return pts;
}

}  // namespace

double oscillation(const SymbolFunction& f, const Point& z, double r, int samples) {
    if (!(r > 0.0)) throw std::invalid_argument("oscillation: r must be > 0");
    if (samples < 64) throw std::invalid_argument("oscillation: samples must be >= 64");
    const Complex fz = f(z);
    double osc = 0.0;
    for (const Point& d : ball_sample(static_cast<int>(z.size()), r, samples))
        osc = std::max(osc, std::abs(fz - f(z + d)));
    return osc;
}

VoReport vo_verdict(const SymbolFunction& f, const std::vector<double>& radii, double r,
                    double threshold, int n, int samples, int base_points) {
    if (radii.size() < 3) throw std::invalid_argument("vo_verdict: need at least 3 radii");
    for (size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i] > radii[i - 1]))
            throw std::invalid_argument("vo_verdict: radii must be strictly increasing");
    if (!(threshold > 0.0)) throw std::invalid_argument("vo_verdict: threshold must be > 0");

    std::vector<Point> dirs = sphere_directions(n, base_points);
    VoReport rep;
    rep.curve.r = r;
    rep.curve.samples = samples;
    for (double R : radii) {
        double osc = 0.0;
        for (const Point& d : dirs) osc = std::max(osc, oscillation(f, R * d, r, samples));
        rep.curve.magnitudes.push_back(R);
        rep.curve.values.push_back(osc);
    }

    const size_t m = rep.curve.values.size();
    const double v1 = rep.curve.values[m - 3];
    const double v2 = rep.curve.values[m - 2];
    const double v3 = rep.curve.values[m - 1];
    const bool tail_decreasing = v2 <= v1 + 1e-12 && v3 <= v2 + 1e-12;
    if (v3 < threshold && tail_decreasing)
        rep.verdict = VoVerdict::Vo;
    else if (v1 > 10.0 * threshold && v2 > 10.0 * threshold && v3 > 10.0 * threshold)
        rep.verdict = VoVerdict::NotVo;
    else
        rep.verdict = VoVerdict::Inconclusive;
    return rep;
}

VmoReport vmo_via_berezin(const SymbolFunction& f, const std::vector<double>& radii,
                          const FockParams& params, const QuadratureGrid& grid,
                          const EscapeSchedule& schedule, double cluster_tol) {
    if (radii.empty()) throw std::invalid_argument("vmo_via_berezin: no radii");

    VmoReport rep;
    rep.radii = radii;
    Point e1 = Point::Zero(params.n);
    e1(0) = 1.0;
    for (double R : radii) {
        Point z = R * e1;
        rep.berezin_values.push_back(berezin_transform(f, z, params, grid));
        // tilde(|f - f~|^2)(z), with the inner f~ evaluated by the same rule
        double acc = 0.0;
        for (int j = 0; j < grid.size(); ++j) {
            Point w = z + grid.nodes[j];
            Complex gap = f(w) - berezin_transform(f, w, params, grid);
            acc += grid.weights(j) * std::norm(gap);
        }
        rep.mean_oscillation.push_back(acc);
    }

    SymbolFunction tilde(
        [f, params, grid](const Point& z) { return berezin_transform(f, z, params, grid); },
        f.sup_bound());
    rep.proxy = boundary_value_set(tilde, schedule, params.n, 64, cluster_tol);
    return rep;
}

}  // namespace fock
