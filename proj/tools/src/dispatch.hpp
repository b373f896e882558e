#pragma once

#include "run_config.hpp"

#include <string>

namespace fockcli {

/// Runs one subcommand: {assemble, ess-spec, ess-norm, fredholm, band-profile,
/// osc, vmo, verify}. Writes a JSON summary (embedding the configuration, so
/// the report itself re-parses as a configuration) plus CSV payloads into
/// config.out_dir and returns the process exit status: 0 on success, 1 on
/// verify failures. Parse problems surface as std::invalid_argument and
/// numeric policy violations as std::runtime_error; the caller maps those to
/// statuses 2 and 3.
int dispatch(const std::string& command, const RunConfig& config);

}  // namespace fockcli
