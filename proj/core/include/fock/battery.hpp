#pragma once

#include <string>
#include <vector>

namespace fock {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// The full verification battery: twelve deterministic checks covering
/// quadrature, projection and Toeplitz assembly, shifts, partitions, band
/// decay, lower norms, spectral estimators, oscillation and the analytic
/// criteria. Exceptions inside a check are caught and reported as failures.
std::vector<CheckResult> run_battery();

}  // namespace fock
