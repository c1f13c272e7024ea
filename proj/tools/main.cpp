// main.cpp - command-line entry point.
#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "casimir/commands.hpp"
#include "casimir/config.hpp"

namespace {

using namespace casimir;

// Loads the config and applies CASIMIR_MAX_TERMS; errors become exit codes.
std::optional<RunConfig> load(const std::string& path, int& code) {
  try {
    RunConfig cfg = load_config(path);
    cfg.series = SeriesControl::from_env(cfg.series);
    return cfg;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = cli::kConfigError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = cli::kConfigError;
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Casimir and thermal Casimir energies between plates in stationary spacetimes"};
  app.require_subcommand(1);
  cli::Streams io{std::cout, std::cerr};

  std::string config;
  std::optional<double> observer_z;
  std::optional<std::string> out;
  std::optional<int> points;
  bool log = false;

  auto* validate = app.add_subcommand("validate", "Check the metric signature on the z grid");
  validate->add_option("--config", config, "Config file")->required();

  auto* energy = app.add_subcommand("energy", "Zero-temperature Casimir energies");
  energy->add_option("--config", config, "Config file")->required();
  energy->add_option("--observer-z", observer_z, "Observer coordinate z");

  auto* thermal = app.add_subcommand("thermal", "Thermodynamics at the configured temperature");
  thermal->add_option("--config", config, "Config file")->required();
  thermal->add_option("--observer-z", observer_z, "Observer coordinate z");

  auto* sweep = app.add_subcommand("sweep", "Temperature sweep to CSV");
  sweep->add_option("--config", config, "Config file")->required();
  sweep->add_option("--out", out, "CSV output path");
  sweep->add_option("--points", points, "Number of sweep points")->check(CLI::PositiveNumber);
  sweep->add_flag("--log", log, "Geometric spacing");
  sweep->add_option("--observer-z", observer_z, "Observer coordinate z");

  auto* oracle = app.add_subcommand("oracle", "Reference computations and golden fixtures");
  oracle->require_subcommand(1);
  std::vector<double> Ls{1.0};
  auto* cutoff = oracle->add_subcommand("cutoff", "Exponential-cutoff mode sum, flat space");
  cutoff->add_option("--L", Ls, "Plate separation(s)");
  cutoff->add_option("--out", out, "Fixture output path");

  std::vector<std::string> beta_tildes{"1"};
  int digits = 50;
  int max_terms = 1'000'000;
  auto* thermal_oracle = oracle->add_subcommand("thermal", "High-precision thermal bracket");
  thermal_oracle->add_option("--beta-tilde", beta_tildes, "Decimal beta_tilde value(s)");
  thermal_oracle->add_option("--digits", digits, "Decimal digits (>= 30)");
  thermal_oracle->add_option("--max-terms", max_terms, "Term cap (>= 1e5)");
  thermal_oracle->add_option("--out", out, "Fixture output path");

  int n = 1;
  double kx = 0.0, ky = 0.0;
  auto* modes = oracle->add_subcommand("modes", "Mode PDE residual and scalar-product checks");
  modes->add_option("--metric", config, "Config file with a constant metric")->required();
  modes->add_option("--n", n, "Longitudinal index")->check(CLI::PositiveNumber);
  modes->add_option("--kx", kx, "Transverse wave number x");
  modes->add_option("--ky", ky, "Transverse wave number y");
  modes->add_option("--out", out, "Fixture output path");

  CLI11_PARSE(app, argc, argv);

  int code = cli::kOk;
  if (*validate) {
    if (auto cfg = load(config, code)) return cli::cmd_validate(*cfg, io);
  } else if (*energy) {
    if (auto cfg = load(config, code)) return cli::cmd_energy(*cfg, observer_z, io);
  } else if (*thermal) {
    if (auto cfg = load(config, code)) return cli::cmd_thermal(*cfg, observer_z, io);
  } else if (*sweep) {
    if (auto cfg = load(config, code))
      return cli::cmd_sweep(*cfg, {.out_path = out, .points = points, .log = log, .observer_z = observer_z}, io);
  } else if (*cutoff) {
    return cli::cmd_oracle_cutoff(Ls, out, io);
  } else if (*thermal_oracle) {
    return cli::cmd_oracle_thermal(beta_tildes, digits, max_terms, out, io);
  } else if (*modes) {
    if (auto cfg = load(config, code)) return cli::cmd_oracle_modes(*cfg, n, kx, ky, out, io);
  }
  return code;
}
