// commands.hpp
//
// The CLI subcommands as library functions writing to caller-supplied
// streams, so the tests can drive them without spawning a process.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "casimir/config.hpp"

namespace casimir::cli {

enum ExitCode : int {
  kOk = 0,
  kRuntimeError = 1,
  kConfigError = 2,
  kValidationFailed = 3,
  kAccuracyFloor = 4,
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

/// Formats with `digits` significant digits in scientific notation.
std::string sci(double v, int digits = 12);

/// The informational natural-units line printed by energy/thermal/sweep.
std::string units_note();

int cmd_validate(const RunConfig& cfg, Streams io);
int cmd_energy(const RunConfig& cfg, std::optional<double> observer_z, Streams io);
int cmd_thermal(const RunConfig& cfg, std::optional<double> observer_z, Streams io);

struct SweepOptions {
  std::optional<std::string> out_path;
  std::optional<int> points;
  bool log = false;
  std::optional<double> observer_z;
};

inline constexpr const char* kSweepHeader =
    "one_over_beta_tilde,F_scaled,U_scaled,S_scaled,Cv_scaled,F_total,U,S,Cv";

/// Writes the CSV to opts.out_path, else cfg.output.csv, else io.out.
int cmd_sweep(const RunConfig& cfg, const SweepOptions& opts, Streams io);

/// Fixture records go to out_path when given, else io.out; a readable
/// summary goes to io.err.
int cmd_oracle_cutoff(const std::vector<double>& Ls, const std::optional<std::string>& out_path,
                      Streams io);
int cmd_oracle_thermal(const std::vector<std::string>& beta_tildes, int digits, int max_terms,
                       const std::optional<std::string>& out_path, Streams io);
int cmd_oracle_modes(const RunConfig& cfg, int n, double kx, double ky,
                     const std::optional<std::string>& out_path, Streams io);

}  // namespace casimir::cli
