#pragma once

#include "fock/lattice.hpp"
#include "fock/operators.hpp"

#include <vector>

namespace fock {

/// Sampled decay curve (t -> D(t), m -> ||A - A_m||, r -> Osc, ...).
struct DecayProfile {
    std::vector<double> points;
    std::vector<double> values;
    /// sup over j of the individual cutoff terms, when applicable
    std::vector<double> sup_terms;
    bool strictly_decreasing = false;
    /// set when the requested p != 2 and the reported norms are p = 2 values
    bool p2_disclaimer = false;
};

/// Largest node-pair distance carrying a matrix entry of relative magnitude
/// above `threshold`; 0 for diagonal (multiplication) operators.
double band_width(const GridOperator& A, double threshold);

/// D(t) = || sum_j M_{phi_{j,t}} A M_{1 - psi_{j,t}} || on the grid for each
/// t in `t_values` (descending, in (0,1]). Norms are p = 2 operator norms.
DecayProfile band_decay_profile(const GridOperator& A, const std::vector<double>& t_values,
                                double p = 2.0);

/// A_m = sum_j M_{phi_{j,1/m}} A M_{psi_{j,1/m}}; a band operator for every m.
GridOperator band_truncation(const GridOperator& A, int m);

}  // namespace fock
