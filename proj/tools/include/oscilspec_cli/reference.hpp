#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "oscilspec/bigreal.hpp"

namespace oscilspec::cli {

/// Published bounded-box eigenvalue, 18 decimals as typeset.
struct ReferenceEigenvalue {
  std::string potential;
  int level;
  std::string value;
};

/// Published <x^{2m}> for one state, with the closed-form column alongside.
struct ReferenceMoment {
  std::string potential;
  int level;
  int m;
  std::string value;
  std::string exact_column;
  /// Set when the closed-form column is known to be misprinted.
  std::string note;
};

/// Reference set 1: first four levels of A, B, C, D, F, G, H.
const std::vector<ReferenceEigenvalue>& reference_eigenvalues();
/// Reference set 2: m = 1..5 for A level 0, B level 1, C level 0, D level 1.
const std::vector<ReferenceMoment>& reference_moments();

/// Closed-form energies of the four exactly solvable states.
struct ExactLevel {
  std::string potential;
  int level;
  std::string value;
};
const std::vector<ExactLevel>& exact_levels();

/// Significant digits written in a decimal string ("0.0834" -> 3).
int significant_digits(std::string_view decimal);

/// Leading significant digits of `reference` reproduced by `computed`. A
/// prefix of k digits counts as matched when the reference cut to k digits
/// equals the computed value either truncated or rounded at that position.
int matched_digits(const BigReal& computed, std::string_view reference);

}  // namespace oscilspec::cli
