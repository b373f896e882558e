#pragma once

#include "fock/operators.hpp"
#include "fock/symbol.hpp"

#include <vector>

namespace fock {

/// Finite approximation of a spectrum or boundary-value set. Points are
/// pairwise separated by more than cluster_tol; multiplicities count the
/// raw samples merged into each point.
struct PointSet {
    std::vector<Complex> points;
    std::vector<int> multiplicities;
    double cluster_tol = 0.0;
};

/// Greedy merge of raw values into clusters of tolerance tol; cluster
/// representatives are sample means.
PointSet cluster_points(const std::vector<Complex>& values, double tol);

double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);
double hausdorff_distance(const PointSet& a, const PointSet& b);

/// Base points z with |z| -> infinity along which limit values are sampled.
struct EscapeSchedule {
    std::vector<double> radii;   // strictly increasing
    double window_radius = 1.0;  // compact window for limit-symbol comparison

    EscapeSchedule() = default;
    explicit EscapeSchedule(std::vector<double> radii_, double window = 1.0);
};

/// count radii from r_first to r_last, geometrically spaced.
EscapeSchedule radial_schedule(double r_first, double r_last, int count = 5);

/// Deterministic direction set on the unit sphere of C^n (equally spaced
/// angles for n = 1, reproducible pseudo-uniform directions otherwise).
std::vector<Point> sphere_directions(int n, int count);

struct BoundaryReport {
    PointSet set;
    /// Hausdorff gap between the clustered values on the last two shells.
    double drift = 0.0;
    bool stabilized = true;  // drift < cluster_tol
    bool vo_checked = false;
    /// set when the result is labeled sigma_ess without a passing vo check
    bool caveat = false;
};

/// Clustered values of f on the expanding spheres of the schedule.
BoundaryReport boundary_value_set(const SymbolFunction& f, const EscapeSchedule& schedule,
                                  int n, int angular_samples, double cluster_tol);

/// sigma_ess(T_f) = boundary value set, valid for vanishing-oscillation
/// symbols. Runs the vo check first; on failure the set is still returned,
/// flagged with caveat = true.
BoundaryReport essential_spectrum_vo(const SymbolFunction& f, const EscapeSchedule& schedule,
                                     int n, int angular_samples = 256,
                                     double cluster_tol = 1e-3, double vo_threshold = 1e-2);

struct NormInterval {
    double lower = 0.0;
    double upper = 0.0;
    /// p = 2: the interval is the degenerate exact value. Otherwise the
    /// upper end is proj_norm * lower; without a supplied proj_norm the
    /// p = 2 value is reported and this flag is cleared.
    bool p2_exact = true;
};

/// Essential-norm interval for a vo symbol: S = max modulus over the
/// boundary set; [S, S] at p = 2, [S, proj_norm * S] otherwise.
NormInterval essential_norm_bounds(const SymbolFunction& f, const FockParams& params,
                                   const EscapeSchedule& schedule, double proj_norm = 0.0,
                                   int angular_samples = 256, double cluster_tol = 1e-3);

enum class FredholmVerdict { Fredholm, NotFredholm, Uncertain };

struct FredholmReport {
    FredholmVerdict verdict = FredholmVerdict::Uncertain;
    double distance = 0.0;  // dist(lambda, boundary set)
    double margin = 0.0;
    double drift = 0.0;
    bool caveat = false;  // vo check failed
};

/// Fredholmness of T_f - lambda for a vo symbol. margin <= 0 selects the
/// default of 10x the larger of drift and cluster_tol.
FredholmReport fredholm_test_vo(const SymbolFunction& f, Complex lambda,
                                const EscapeSchedule& schedule, int n, double margin = 0.0,
                                int angular_samples = 256, double cluster_tol = 1e-3);

struct ClusterReport {
    std::vector<int> truncation_degrees;
    std::vector<Eigen::VectorXcd> eigenvalues;  // per truncation degree
    std::vector<double> fractions;  // within delta of the reference set
    double delta = 0.0;
    /// finite sections of non-radial symbols can carry spurious eigenvalues
    bool pollution_warning = false;
};

/// Eigenvalues of the Toeplitz truncations at each degree, with the
/// fraction lying within delta of the reference point set.
ClusterReport truncation_eigen_cluster(const SymbolFunction& f, const std::vector<int>& N_values,
                                       const FockParams& params, const QuadratureGrid& grid,
                                       const std::vector<Complex>& reference, double delta);

}  // namespace fock
