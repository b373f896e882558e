#pragma once

#include "fock/params.hpp"
#include "fock/quadrature.hpp"
#include "fock/serialize.hpp"

#include <string>
#include <vector>

namespace fockcli {

/// Validated run configuration shared by all subcommands. Fields not used by
/// a given command keep their defaults and are still echoed into the report,
/// so every report re-parses as a configuration.
struct RunConfig {
    fock::FockParams params{1, 2.0, 1.0};

    // grid
    fock::GridScheme scheme = fock::GridScheme::HermiteTensor;
    int grid_size = 40;
    fock::GridOptions grid_opts;

    std::string symbol = "const(1)";

    // command-specific knobs
    int N = 20;                                        // truncation degree
    std::vector<double> t_values{1.0, 0.5, 0.25, 0.125};
    double r_first = 6.0, r_last = 60.0;               // escape schedule
    int schedule_count = 5;
    double window_radius = 1.0;
    double cluster_tol = 1e-3;
    double vo_threshold = 1e-2;
    double margin = 0.0;                               // 0 -> default margin
    double delta = 0.05;                               // eigenvalue clustering
    fock::Complex lambda{0.0, 0.0};                    // fredholm test point
    double proj_norm = 0.0;                            // 0 -> p = 2 fallback
    int angular_samples = 256;
    std::string band_operator = "projection";          // or "multiplication"
    double osc_r = 1.0;
    int osc_samples = 256;
    std::vector<double> osc_magnitudes{0.0, 2.0, 4.0, 8.0, 16.0, 32.0};
    std::vector<double> vmo_radii{2.0, 4.0, 6.0, 8.0};

    std::string out_dir = "out";

    /// Throws std::invalid_argument on violated invariants.
    void validate() const;

    fock::EscapeSchedule schedule() const;
    fock::QuadratureGrid make_grid() const;
    fock::QuadratureGrid make_grid_nu(double nu) const;
};

/// Normalized JSON image of the configuration (every field present, fixed
/// key order; parse_config(to_json(c)) == c).
fock::Json to_json(const RunConfig& c);

/// Reads a configuration from its JSON image. A report object containing a
/// "config" member is accepted too, so reports round-trip as configurations.
/// Unknown keys are rejected. Throws std::invalid_argument on any problem.
RunConfig parse_config(const fock::Json& j);

RunConfig load_config(const std::string& path);

}  // namespace fockcli
