#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "oscilspec/errors.hpp"
#include "oscilspec_cli/commands.hpp"
#include "oscilspec_cli/config.hpp"
#include "oscilspec_cli/presets.hpp"

using namespace oscilspec;
using namespace oscilspec::cli;

int main(int argc, char** argv) {
  CLI::App app{"Bounded power-series eigenvalues, moments and wavefunctions of even polynomial potentials"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::vector<std::string> preset_names;
  std::string half_width;
  std::string format = "table";
  std::string norm = "peak-one";
  std::string mu2;
  RunConfig defaults;
  RunConfig cli;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON problem description");
    sub->add_option("--preset", preset_names, "Built-in problem(s): A B C D F G H box harmonic doublewell")
        ->delimiter(',');
    sub->add_option("--L", half_width, "Wall half-width, overrides every problem");
    sub->add_option("--digits", cli.digits, "Target significant digits (>= 10)");
    sub->add_option("--levels", cli.levels, "Number of levels");
    sub->add_option("--format", format, "table | csv | json");
    sub->add_option("--out", cli.out, "Write to a file instead of stdout");
    sub->add_option("--jobs", cli.jobs, "Worker threads (0 = all cores)");
    sub->add_option("--max-order", cli.limits.max_order, "Series truncation ceiling");
    sub->add_option("--max-digits", cli.limits.max_digits, "Working precision ceiling");
    sub->add_option("--mu2", mu2, "Well parameter of the doublewell preset");
  };

  auto* spectrum = app.add_subcommand("spectrum", "Lowest eigenvalues");
  auto* moments = app.add_subcommand("moments", "Expectation values <x^2m> of one level");
  auto* wavefunction = app.add_subcommand("wavefunction", "Psi on a uniform grid over [-L, L]");
  auto* verify = app.add_subcommand("verify", "Finite-difference cross-check");
  auto* reproduce = app.add_subcommand("reproduce", "Compare with the embedded reference values");
  for (auto* sub : {spectrum, moments, wavefunction, verify, reproduce}) add_common(sub);
  for (auto* sub : {moments, wavefunction}) sub->add_option("--level", cli.level, "Level index (0 = ground)");
  moments->add_option("--moments", cli.moments, "Moment orders m")->delimiter(',');
  wavefunction->add_option("--points", cli.points, "Grid points including both walls");
  wavefunction->add_option("--norm", norm, "none | unit-norm | peak-one");
  verify->add_option("--fd-points", cli.fd_points, "Interior points of the coarse grid");
  reproduce->add_option("--table", cli.table, "1 = eigenvalues, 2 = moments")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }
  auto* sub = app.get_subcommands().front();
  auto given = [&](const char* name) { return sub->get_option_no_throw(name) && sub->count(name) > 0; };

  try {
    RunConfig config = defaults;
    if (!config_path.empty()) config = load_config_file(config_path, config);
    for (const auto& name : preset_names) {
      auto preset = name == "doublewell" && !mu2.empty() ? double_well(mu2) : find_preset(name);
      if (!preset) throw ParseError("unknown preset '" + name + "'");
      config.problems.push_back(*preset);
    }
    if (!half_width.empty()) {
      for (auto& p : config.problems) p.half_width = half_width;
    }
    if (given("--digits")) config.digits = cli.digits;
    if (given("--levels")) config.levels = cli.levels;
    if (given("--jobs")) config.jobs = cli.jobs;
    if (given("--max-order")) config.limits.max_order = cli.limits.max_order;
    if (given("--max-digits")) config.limits.max_digits = cli.limits.max_digits;
    if (given("--moments")) config.moments = cli.moments;
    if (given("--level")) config.level = cli.level;
    if (given("--points")) config.points = cli.points;
    if (given("--fd-points")) config.fd_points = cli.fd_points;
    if (given("--table")) config.table = cli.table;
    // Very high target digits need a proportionally higher precision ceiling.
    if (!given("--max-digits")) config.limits.max_digits = std::max(config.limits.max_digits, 40 * config.digits);
    config.format = parse_format(format);
    config.normalization = parse_normalization(norm);
    config.out = cli.out;

    auto result = run_command(sub->get_name(), config);
    const std::string text = render(result.report, config.format);
    if (config.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(config.out);
      if (!out) throw ParseError("cannot write '" + config.out + "'");
      out << text;
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "oscilspec: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
