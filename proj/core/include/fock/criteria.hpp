#pragma once

#include "fock/params.hpp"
#include "fock/quadrature.hpp"

namespace fock {

/// 2^n / (p^{n/p} q^{n/q}); the norm constant of the dual pairing.
/// Equals 1 iff p = 2, and is symmetric under p <-> q.
double duality_constant(const FockParams& params);

/// Verdict for boundedness of (z,w) -> e^{a<z,w> - b|z|^2 - c|w|^2}.
/// Bounded iff 4bc - a^2 >= 0. When unbounded, the exponent diverges along
/// w = witness_slope * z.
struct BoundednessVerdict {
    bool bounded = true;
    double witness_slope = 0.0;  // sqrt(b/c), meaningful when !bounded
};
BoundednessVerdict boundedness_criterion(double a, double b, double c);

/// Numeric sup of |e^{a<z,w> - b|z|^2 - c|w|^2}| over a coarse grid
/// (used as an oracle companion to boundedness_criterion).
double exponent_grid_sup(double a, double b, double c, double extent, int steps);

/// The Hille-Tamarkin double integral over D = B(0, radius) certifying
/// compactness of P_alpha M_{chi_D}. `grid` handles the inner integral over z;
/// it must carry the measure weight p*alpha/2. Throws if a refinement of the
/// radial rule moves the value by more than 1%.
double hille_tamarkin_integral(double radius, const FockParams& params,
                               const QuadratureGrid& grid);

/// (sum x_j)^p <= k^p sum x_j^p for nonnegative tuples; test utility.
bool power_sum_bound_holds(const std::vector<double>& xs, double p);

}  // namespace fock
