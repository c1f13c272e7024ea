// sweep.hpp
//
// Temperature sweeps. Each point is independent, so the parallel kernel is a
// plain OpenMP loop over points; the serial kernel is kept as the reference
// the tests compare against. Rows always come back in input order.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "casimir/thermal.hpp"

namespace casimir {

enum class Execution { serial, parallel };

struct SweepRow {
  double inverse_beta_tilde = 0.0;
  std::optional<ThermoReport> report;  // empty when the point failed
  std::string error;
};

std::vector<SweepRow> evaluate_sweep(const ThermalSetup& setup, std::span<const ThermalPoint> points,
                                     const SeriesControl& ctl, Execution exec = Execution::parallel);

/// n points from `from` to `to` inclusive; geometric spacing when `log`.
/// from == to yields a single point.
std::vector<double> sweep_grid(double from, double to, int n, bool log);

}  // namespace casimir
