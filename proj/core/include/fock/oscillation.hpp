#pragma once

#include "fock/spectra.hpp"
#include "fock/symbol.hpp"

#include <vector>

namespace fock {

/// |z| -> Osc_z^r(f) sampled along increasing base-point magnitudes.
struct OscillationCurve {
    std::vector<double> magnitudes;
    std::vector<double> values;
    double r = 1.0;
    int samples = 0;
};

/// max |f(z) - f(w)| over a deterministic low-discrepancy sample of the
/// closed ball B(z, r); a lower bound on the true sup. samples >= 64.
double oscillation(const SymbolFunction& f, const Point& z, double r, int samples);

enum class VoVerdict { Vo, NotVo, Inconclusive };

struct VoReport {
    VoVerdict verdict = VoVerdict::Inconclusive;
    OscillationCurve curve;
};

/// Classifies the decay of |z| -> Osc_z^r(f): vo when the tail falls below
/// threshold and decreases on the last three shells, not_vo when it stays
/// above 10x threshold, inconclusive otherwise. Per shell the oscillation
/// is maximized over base_points base points on the sphere.
VoReport vo_verdict(const SymbolFunction& f, const std::vector<double>& radii, double r,
                    double threshold, int n, int samples = 256, int base_points = 8);

struct VmoReport {
    std::vector<double> radii;
    std::vector<Complex> berezin_values;       // f~ along the shells
    std::vector<double> mean_oscillation;      // tilde(|f - f~|^2) along the shells
    BoundaryReport proxy;                      // boundary set of f~
};

/// The Berezin route: f~ and tilde(|f - f~|^2) on the shells, plus the
/// boundary set of f~ as a sigma_ess proxy. The grid must carry measure
/// weight alpha.
VmoReport vmo_via_berezin(const SymbolFunction& f, const std::vector<double>& radii,
                          const FockParams& params, const QuadratureGrid& grid,
                          const EscapeSchedule& schedule, double cluster_tol = 1e-3);

}  // namespace fock
