#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace oscilspec::cli {

struct ProblemSpec {
  std::string name;
  /// "x^2k" -> exact coefficient string.
  std::map<std::string, std::string> potential;
  /// Wall half-width as a decimal string.
  std::string half_width;
};

/// Built-in problems: the seven multi-well potentials A, B, C, D, F, G, H, the
/// empty box, the harmonic oscillator and the symmetric double well.
const std::vector<ProblemSpec>& presets();

std::optional<ProblemSpec> find_preset(const std::string& name);

/// -mu2 x^2 + x^4 with walls far enough out for the deep-well doublets.
ProblemSpec double_well(const std::string& mu2, const std::string& half_width = "7");

}  // namespace oscilspec::cli
