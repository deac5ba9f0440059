#include "oscilspec_cli/presets.hpp"

#include <algorithm>

namespace oscilspec::cli {

const std::vector<ProblemSpec>& presets() {
  static const std::vector<ProblemSpec> all = {
      {"A", {{"x^2", "1"}, {"x^4", "-4"}, {"x^6", "1"}}, "4"},
      {"B", {{"x^2", "4"}, {"x^4", "-6"}, {"x^6", "1"}}, "4"},
      {"C", {{"x^2", "105/64"}, {"x^4", "-43/8"}, {"x^6", "1"}, {"x^8", "-1"}, {"x^10", "1"}}, "3"},
      {"D", {{"x^2", "169/64"}, {"x^4", "-59/8"}, {"x^6", "1"}, {"x^8", "-1"}, {"x^10", "1"}}, "3"},
      {"F", {{"x^2", "-1"}, {"x^4", "2"}, {"x^6", "-0.9"}, {"x^8", "0.1"}}, "4"},
      {"G", {{"x^2", "-1"}, {"x^4", "3"}, {"x^6", "-2"}, {"x^10", "0.1"}}, "3"},
      {"H", {{"x^2", "2"}, {"x^4", "-7.5"}, {"x^6", "5.5"}, {"x^8", "-0.877"}, {"x^10", "0.04"}}, "4"},
      {"box", {}, "1"},
      {"harmonic", {{"x^2", "1"}}, "10"},
      double_well("25"),
  };
  return all;
}

std::optional<ProblemSpec> find_preset(const std::string& name) {
  const auto& all = presets();
  auto it = std::find_if(all.begin(), all.end(), [&](const ProblemSpec& p) { return p.name == name; });
  if (it == all.end()) return std::nullopt;
  return *it;
}

ProblemSpec double_well(const std::string& mu2, const std::string& half_width) {
  std::string neg = mu2.rfind('-', 0) == 0 ? mu2.substr(1) : "-" + mu2;
  return {"doublewell", {{"x^2", neg}, {"x^4", "1"}}, half_width};
}

}  // namespace oscilspec::cli
