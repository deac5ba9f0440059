#pragma once

#include <string>
#include <vector>

#include "oscilspec/eigensolver.hpp"
#include "oscilspec/observables.hpp"
#include "oscilspec_cli/format.hpp"
#include "oscilspec_cli/presets.hpp"

namespace oscilspec::cli {

struct RunConfig {
  std::vector<ProblemSpec> problems;
  int digits = 20;
  int levels = 4;
  std::vector<int> moments{1, 2, 3, 4, 5};
  OutputFormat format = OutputFormat::Table;
  /// Empty for standard output.
  std::string out;
  SeriesLimits limits;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned jobs = 0;

  int level = 0;
  int points = 401;
  Normalization normalization = Normalization::PeakOne;
  int table = 1;
  int fd_points = 4000;
};

/// Merges a JSON problem description into `base`. Accepted shapes: a single
/// problem object {name, potential, L, digits, levels, moments}, an array of
/// such objects, or {"problems": [...], ...shared fields}. Potential keys may
/// be written "x^4" or just "4". Throws ParseError.
RunConfig parse_config_text(const std::string& text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

Normalization parse_normalization(const std::string& name);

/// Throws ParseError with a message naming the offending field.
void validate(const RunConfig& config);

BoundaryProblem make_problem(const ProblemSpec& spec, const RunConfig& config);

}  // namespace oscilspec::cli
