#pragma once

#include <string>

#include "oscilspec_cli/config.hpp"
#include "oscilspec_cli/format.hpp"

namespace oscilspec::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kNonConvergence = 2, kMismatch = 3 };

struct CommandResult {
  Report report;
  int exit_code = kOk;
};

CommandResult cmd_spectrum(const RunConfig& config);
CommandResult cmd_moments(const RunConfig& config);
CommandResult cmd_wavefunction(const RunConfig& config);
/// Finite-difference cross-check; kMismatch when any level differs by more
/// than 1e-4 or the observed order leaves 2 +- 0.2.
CommandResult cmd_verify(const RunConfig& config);
/// Compares against the embedded reference sets (config.table = 1 or 2);
/// kMismatch when any entry falls short.
CommandResult cmd_reproduce(const RunConfig& config);

CommandResult run_command(const std::string& name, const RunConfig& config);

/// Maps a library exception to the process exit code.
int exit_code_for(const std::exception& e);

/// Minimum target digits for each reference set.
int required_digits(int table);

}  // namespace oscilspec::cli
