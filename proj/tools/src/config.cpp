#include "oscilspec_cli/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "oscilspec/errors.hpp"

namespace oscilspec::cli {

namespace {

using nlohmann::json;

std::string as_decimal(const json& v, const std::string& field) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    throw ParseError("field '" + field + "' must be an integer or a decimal string; binary floats lose digits");
  }
  throw ParseError("field '" + field + "' must be a decimal string");
}

int as_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw ParseError("field '" + field + "' must be an integer");
  return v.get<int>();
}

void read_shared(const json& j, RunConfig& c) {
  if (j.contains("digits")) c.digits = as_int(j["digits"], "digits");
  if (j.contains("levels")) c.levels = as_int(j["levels"], "levels");
  if (j.contains("moments")) {
    c.moments.clear();
    for (const auto& m : j["moments"]) c.moments.push_back(as_int(m, "moments"));
  }
  if (j.contains("max_order")) c.limits.max_order = as_int(j["max_order"], "max_order");
  if (j.contains("max_digits")) c.limits.max_digits = as_int(j["max_digits"], "max_digits");
}

ProblemSpec read_problem(const json& j, std::size_t index) {
  ProblemSpec p;
  p.name = j.value("name", "problem" + std::to_string(index));
  if (!j.contains("potential") || !j["potential"].is_object()) {
    throw ParseError("problem '" + p.name + "' needs a 'potential' object mapping exponents to coefficients");
  }
  for (const auto& [key, value] : j["potential"].items()) {
    std::string k = key;
    if (!k.empty() && k.find('x') == std::string::npos) k = "x^" + k;
    p.potential[k] = as_decimal(value, "potential." + key);
  }
  if (!j.contains("L")) throw ParseError("problem '" + p.name + "' needs a wall half-width 'L'");
  p.half_width = as_decimal(j["L"], "L");
  return p;
}

}  // namespace

RunConfig parse_config_text(const std::string& text, RunConfig base) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config is not valid JSON: ") + e.what());
  }
  try {
    if (j.is_array()) {
      for (const auto& item : j) base.problems.push_back(read_problem(item, base.problems.size()));
    } else if (j.is_object() && j.contains("problems")) {
      read_shared(j, base);
      for (const auto& item : j["problems"]) {
        base.problems.push_back(read_problem(item, base.problems.size()));
        read_shared(item, base);
      }
    } else if (j.is_object()) {
      base.problems.push_back(read_problem(j, base.problems.size()));
      read_shared(j, base);
    } else {
      throw ParseError("config must be a JSON object or array");
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed config: ") + e.what());
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), std::move(base));
}

Normalization parse_normalization(const std::string& name) {
  if (name == "none") return Normalization::None;
  if (name == "unit" || name == "unit-norm") return Normalization::UnitNorm;
  if (name == "peak" || name == "peak-one") return Normalization::PeakOne;
  throw ParseError("unknown normalization '" + name + "' (expected none, unit-norm or peak-one)");
}

void validate(const RunConfig& c) {
  if (c.digits < 10) throw ParseError("digits must be at least 10 (got " + std::to_string(c.digits) + ")");
  if (c.levels < 1) throw ParseError("levels must be at least 1 (got " + std::to_string(c.levels) + ")");
  for (int m : c.moments) {
    if (m < 0) throw ParseError("moment orders must be non-negative");
  }
  if (c.points < 2) throw ParseError("points must be at least 2");
  if (c.level < 0) throw ParseError("level must be non-negative");
  if (c.fd_points < 10) throw ParseError("fd-points must be at least 10");
  if (c.limits.max_digits < 2 * (c.digits + 20)) throw ParseError("max_digits is too small for the requested digits");
  for (const auto& p : c.problems) {
    if (parse_exact_number(p.half_width) <= 0) throw ParseError("problem '" + p.name + "': L must be positive");
    (void)parse_potential(p.potential, p.name);
  }
}

BoundaryProblem make_problem(const ProblemSpec& spec, const RunConfig& config) {
  const int digits = config.digits + 20;
  return BoundaryProblem(parse_potential(spec.potential, spec.name),
                         BigReal(parse_exact_number(spec.half_width), digits), config.digits, config.limits);
}

}  // namespace oscilspec::cli
