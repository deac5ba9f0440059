#include "oscilspec_cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "oscilspec/errors.hpp"
#include "oscilspec/fd_oracle.hpp"
#include "oscilspec/observables.hpp"
#include "oscilspec_cli/reference.hpp"
#include "oscilspec_cli/worker_pool.hpp"

namespace oscilspec::cli {

namespace {

constexpr int kReferenceSet1MinMatch = 12;
constexpr long double kFdTolerance = 1e-4L;

[[noreturn]] void rethrow_with_context(const std::string& context) {
  try {
    throw;
  } catch (const ParseError& e) {
    throw ParseError(context + ": " + e.what());
  } catch (const PrecisionExhausted& e) {
    throw PrecisionExhausted(context + ": " + e.what());
  } catch (const NoSignChange& e) {
    throw NoSignChange(context + ": " + e.what());
  } catch (const AmbiguousNode& e) {
    throw AmbiguousNode(context + ": " + e.what());
  } catch (const MissedLevel& e) {
    throw MissedLevel(context + ": " + e.what());
  }
}

template <typename Result>
std::vector<Result> run_jobs(const RunConfig& config, std::size_t count,
                             const std::function<std::string(std::size_t)>& context,
                             const std::function<Result(std::size_t)>& fn) {
  return parallel_map<Result>(count, config.jobs, [&](std::size_t i) -> Result {
    try {
      return fn(i);
    } catch (const Error&) {
      rethrow_with_context(context(i));
    }
  });
}

void require_problems(const RunConfig& config) {
  if (config.problems.empty()) throw ParseError("no problem given; use --preset NAME or --config FILE");
}

// Decimals that carry `converged` significant digits (absolute places below 1).
int full_decimals(const BigReal& value, int converged) {
  const double lg = value.is_zero() ? 0.0 : value.log10_abs();
  const int integer_digits = lg >= 0.0 ? static_cast<int>(std::floor(lg)) + 1 : 0;
  return std::max(0, converged - integer_digits);
}

std::string energy_text(const BigReal& e, const RunConfig& config, int converged) {
  if (config.format == OutputFormat::Table) return e.to_fixed(config.digits - 2);
  return e.to_fixed(full_decimals(e, converged));
}

std::string long_double_text(long double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lf", decimals, v);
  return buf;
}

std::string scientific_text(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2Le", v);
  return buf;
}

// "4.000000000000" -> "4", "2.500000000000" -> "2.5".
std::string length_text(const BigReal& L) {
  std::string s = L.to_fixed(12);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

struct SolvedProblem {
  BoundaryProblem bp;
  std::vector<Eigenpair> levels;
};

SolvedProblem solve(const ProblemSpec& spec, const RunConfig& config, int count) {
  SolvedProblem s{make_problem(spec, config), {}};
  s.levels = spectrum(s.bp, count);
  return s;
}

std::vector<SolvedProblem> solve_all(const RunConfig& config, int count) {
  return run_jobs<SolvedProblem>(
      config, config.problems.size(), [&](std::size_t i) { return "potential " + config.problems[i].name; },
      [&](std::size_t i) { return solve(config.problems[i], config, count); });
}

CommandResult reproduce_eigenvalues(const RunConfig& base) {
  RunConfig config = base;
  config.problems.clear();
  std::vector<std::string> names;
  for (const auto& r : reference_eigenvalues()) {
    if (names.empty() || names.back() != r.potential) names.push_back(r.potential);
  }
  for (const auto& n : names) config.problems.push_back(*find_preset(n));
  const auto solved = solve_all(config, 4);
  std::map<std::string, const SolvedProblem*> by_name;
  for (const auto& s : solved) by_name[s.bp.potential.name()] = &s;

  CommandResult result;
  auto& r = result.report;
  r.title = "reference set 1: first four eigenvalues, target digits " + std::to_string(config.digits);
  r.columns = {{"potential"}, {"L"},           {"level", true}, {"reference"},
               {"computed"},  {"matched", true}, {"required", true}, {"status"}};
  int ok = 0;
  for (const auto& ref : reference_eigenvalues()) {
    const auto* s = by_name.at(ref.potential);
    const auto& e = s->levels.at(static_cast<std::size_t>(ref.level)).energy;
    const int matched = matched_digits(e, ref.value);
    const bool pass = matched >= kReferenceSet1MinMatch;
    ok += pass;
    r.rows.push_back({ref.potential, length_text(s->bp.half_width), std::to_string(ref.level), ref.value,
                      e.to_fixed(18), std::to_string(matched), std::to_string(kReferenceSet1MinMatch),
                      pass ? "ok" : "MISMATCH"});
  }
  for (const auto& ex : exact_levels()) {
    const auto& e = by_name.at(ex.potential)->levels.at(static_cast<std::size_t>(ex.level)).energy;
    const BigReal diff = abs(e - BigReal(ex.value, e.digits()));
    r.notes.push_back("closed-form level " + ex.potential + "/" + std::to_string(ex.level) + " = " + ex.value +
                      ", |computed - exact| = " + diff.to_scientific(3));
  }
  r.notes.push_back(std::to_string(ok) + "/" + std::to_string(reference_eigenvalues().size()) +
                    " entries matched to >= " + std::to_string(kReferenceSet1MinMatch) + " significant digits");
  result.exit_code = ok == static_cast<int>(reference_eigenvalues().size()) ? kOk : kMismatch;
  return result;
}

CommandResult reproduce_moments(const RunConfig& base) {
  RunConfig config = base;
  struct State {
    std::string potential;
    int level;
  };
  std::vector<State> states;
  for (const auto& m : reference_moments()) {
    if (states.empty() || states.back().potential != m.potential) states.push_back({m.potential, m.level});
  }
  using Moments = std::vector<MomentReport>;
  const auto computed = run_jobs<Moments>(
      config, states.size(),
      [&](std::size_t i) { return "potential " + states[i].potential + ", level " + std::to_string(states[i].level); },
      [&](std::size_t i) {
        const auto solved = solve(*find_preset(states[i].potential), config, states[i].level + 1);
        return moments(solved.bp, solved.levels.at(static_cast<std::size_t>(states[i].level)), {1, 2, 3, 4, 5});
      });

  CommandResult result;
  auto& r = result.report;
  r.title = "reference set 2: moments <x^2m>, target digits " + std::to_string(config.digits);
  r.columns = {{"potential"},       {"level", true},    {"m", true}, {"reference"}, {"computed"},
               {"matched", true}, {"required", true}, {"status"},  {"note"}};
  int ok = 0;
  for (const auto& ref : reference_moments()) {
    std::size_t s = 0;
    while (states[s].potential != ref.potential) ++s;
    const auto& value = computed[s].at(static_cast<std::size_t>(ref.m - 1)).value;
    const int quoted = significant_digits(ref.value);
    const int matched = matched_digits(value, ref.value);
    const bool pass = matched >= quoted;
    ok += pass;
    const auto point = ref.value.find('.');
    const int decimals = point == std::string::npos ? 0 : static_cast<int>(ref.value.size() - point - 1);
    r.rows.push_back({ref.potential, std::to_string(ref.level), std::to_string(ref.m), ref.value,
                      value.to_fixed(decimals + 4), std::to_string(matched), std::to_string(quoted),
                      pass ? "ok" : "MISMATCH", ref.note});
  }
  r.notes.push_back(std::to_string(ok) + "/" + std::to_string(reference_moments().size()) +
                    " entries matched to every quoted digit");
  result.exit_code = ok == static_cast<int>(reference_moments().size()) ? kOk : kMismatch;
  return result;
}

}  // namespace

int required_digits(int table) { return table == 1 ? kReferenceSet1MinMatch + 2 : 19; }

CommandResult cmd_spectrum(const RunConfig& config) {
  require_problems(config);
  const auto solved = solve_all(config, config.levels);
  CommandResult result;
  auto& r = result.report;
  r.title = "spectrum, target digits " + std::to_string(config.digits);
  r.columns = {{"potential"},       {"L"},           {"level", true}, {"parity"}, {"energy", false, true},
               {"digits", true}, {"nodes", true}, {"doublet"}};
  for (const auto& s : solved) {
    for (const auto& e : s.levels) {
      r.rows.push_back({s.bp.potential.name(), length_text(s.bp.half_width),
                        std::to_string(e.level), to_string(e.parity), energy_text(e.energy, config, e.converged_digits),
                        std::to_string(e.converged_digits), std::to_string(e.nodes), e.doublet ? "yes" : "no"});
    }
  }
  return result;
}

CommandResult cmd_moments(const RunConfig& config) {
  require_problems(config);
  using Moments = std::vector<MomentReport>;
  const auto computed = run_jobs<Moments>(
      config, config.problems.size(),
      [&](std::size_t i) {
        return "potential " + config.problems[i].name + ", level " + std::to_string(config.level);
      },
      [&](std::size_t i) {
        const auto solved = solve(config.problems[i], config, config.level + 1);
        return moments(solved.bp, solved.levels.at(static_cast<std::size_t>(config.level)), config.moments);
      });
  CommandResult result;
  auto& r = result.report;
  r.title = "moments <x^2m>, target digits " + std::to_string(config.digits);
  r.columns = {{"potential"}, {"level", true}, {"m", true}, {"value", false, true}, {"digits", true}};
  for (const auto& list : computed) {
    for (const auto& m : list) {
      r.rows.push_back({m.potential, std::to_string(m.level), std::to_string(m.m),
                        energy_text(m.value, config, m.converged_digits), std::to_string(m.converged_digits)});
    }
  }
  return result;
}

CommandResult cmd_wavefunction(const RunConfig& config) {
  require_problems(config);
  if (config.problems.size() != 1) throw ParseError("wavefunction takes exactly one problem");
  const auto& spec = config.problems.front();
  std::vector<GridPoint> grid;
  try {
    const auto solved = solve(spec, config, config.level + 1);
    grid = wavefunction_grid(solved.bp, solved.levels.at(static_cast<std::size_t>(config.level)), config.points,
                             config.normalization);
  } catch (const Error&) {
    rethrow_with_context("potential " + spec.name + ", level " + std::to_string(config.level));
  }
  CommandResult result;
  auto& r = result.report;
  r.title = "wavefunction " + spec.name + " level " + std::to_string(config.level);
  r.columns = {{"x"}, {"psi"}};
  for (const auto& g : grid) {
    r.rows.push_back({g.x.to_fixed(12), g.psi.is_zero() ? "0" : g.psi.to_scientific(config.digits)});
  }
  return result;
}

CommandResult cmd_verify(const RunConfig& config) {
  require_problems(config);
  struct Verified {
    SolvedProblem solved;
    FDConvergence fd;
  };
  const auto runs = run_jobs<Verified>(
      config, config.problems.size(), [&](std::size_t i) { return "potential " + config.problems[i].name; },
      [&](std::size_t i) {
        auto solved = solve(config.problems[i], config, config.levels);
        auto fd = fd_convergence(solved.bp.potential, solved.bp.half_width.to_long_double(), config.fd_points,
                                 config.levels);
        return Verified{std::move(solved), std::move(fd)};
      });

  CommandResult result;
  auto& r = result.report;
  r.title = "finite-difference cross-check, M = " + std::to_string(config.fd_points) + " with Richardson step";
  r.columns = {{"potential"}, {"level", true}, {"series"}, {"fd"},     {"difference"},
               {"agree", true}, {"fd_order"},  {"exact"},  {"status"}};
  bool all_ok = true;
  for (const auto& v : runs) {
    const auto& bp = v.solved.bp;
    for (std::size_t k = 0; k < v.solved.levels.size(); ++k) {
      const long double series = v.solved.levels[k].energy.to_long_double();
      const long double fd = v.fd.extrapolated[k];
      const long double diff = std::fabs(series - fd);
      const long double scale = std::max(1.0L, std::fabs(series));
      const int agree = diff == 0.0L ? 18 : static_cast<int>(std::floor(-std::log10(diff / scale)));
      const double order = v.fd.order[k];
      const bool ok = diff <= kFdTolerance && std::fabs(order - 2.0) <= 0.2;
      all_ok = all_ok && ok;
      std::string exact;
      if (bp.potential.is_zero()) {
        const int d = bp.target_digits;
        const BigReal pi = BigReal::pi(d + 10);
        const BigReal n = BigReal(static_cast<long>(k + 1), d + 10);
        exact = (pi * pi * n * n / (bp.half_width * bp.half_width * 4L)).to_fixed(12);
      }
      char order_text[32];
      std::snprintf(order_text, sizeof order_text, "%.3f", order);
      r.rows.push_back({bp.potential.name(), std::to_string(k), v.solved.levels[k].energy.to_fixed(12),
                        long_double_text(fd, 12), scientific_text(diff), std::to_string(agree), order_text, exact,
                        ok ? "ok" : "MISMATCH"});
    }
  }
  result.exit_code = all_ok ? kOk : kMismatch;
  return result;
}

CommandResult cmd_reproduce(const RunConfig& config) {
  if (config.table != 1 && config.table != 2) throw ParseError("--table must be 1 or 2");
  const int need = required_digits(config.table);
  if (config.digits < need) {
    throw ParseError("insufficient precision requested: reference set " + std::to_string(config.table) +
                     " needs --digits >= " + std::to_string(need) + " (got " + std::to_string(config.digits) + ")");
  }
  return config.table == 1 ? reproduce_eigenvalues(config) : reproduce_moments(config);
}

CommandResult run_command(const std::string& name, const RunConfig& config) {
  validate(config);
  if (name == "spectrum") return cmd_spectrum(config);
  if (name == "moments") return cmd_moments(config);
  if (name == "wavefunction") return cmd_wavefunction(config);
  if (name == "verify") return cmd_verify(config);
  if (name == "reproduce") return cmd_reproduce(config);
  throw ParseError("unknown command '" + name + "'");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) != nullptr) return kConfigError;
  if (dynamic_cast<const Error*>(&e) != nullptr) return kNonConvergence;
  return kConfigError;
}

}  // namespace oscilspec::cli
