#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "oscilspec/eigensolver.hpp"
#include "oscilspec/potential.hpp"
#include "oscilspec_cli/config.hpp"
#include "oscilspec_cli/presets.hpp"

namespace testing_support {

inline oscilspec::BoundaryProblem preset_problem(const std::string& name, int digits = 20,
                                                 const std::string& half_width = {}) {
  auto spec = *oscilspec::cli::find_preset(name);
  if (!half_width.empty()) spec.half_width = half_width;
  oscilspec::cli::RunConfig config;
  config.digits = digits;
  return oscilspec::cli::make_problem(spec, config);
}

/// Lowest four levels of a preset at its default L and 20 digits, computed once
/// per process.
inline const std::vector<oscilspec::Eigenpair>& cached_spectrum(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, std::vector<oscilspec::Eigenpair>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, oscilspec::spectrum(preset_problem(name), 4)).first;
  return it->second;
}

inline oscilspec::BigReal big(const char* s, int digits = 60) { return {std::string_view(s), digits}; }

}  // namespace testing_support
