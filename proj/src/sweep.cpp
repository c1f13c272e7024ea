// sweep.cpp
#include "casimir/sweep.hpp"

#include <cmath>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

SweepRow evaluate_point(const ThermalSetup& setup, const ThermalPoint& p, const SeriesControl& ctl) {
  SweepRow row;
  row.inverse_beta_tilde = 1.0 / p.beta_tilde;
  try {
    row.report = thermodynamics(setup, p, ctl);
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

std::vector<SweepRow> evaluate_sweep(const ThermalSetup& setup, std::span<const ThermalPoint> points,
                                     const SeriesControl& ctl, Execution exec) {
  const auto n = static_cast<std::ptrdiff_t>(points.size());
  std::vector<SweepRow> rows(points.size());
  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) rows[i] = evaluate_point(setup, points[i], ctl);
    return rows;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) rows[i] = evaluate_point(setup, points[i], ctl);
  return rows;
}

std::vector<double> sweep_grid(double from, double to, int n, bool log) {
  if (!(from > 0.0) || !(to > 0.0)) throw InputError("sweep range must be positive");
  if (to < from) throw InputError("sweep range must be ordered (from <= to)");
  if (n < 1) throw InputError("sweep needs at least one point");
  if (from == to || n == 1) return {from};
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) / (n - 1);
    grid[i] = log ? from * std::pow(to / from, t) : from + (to - from) * t;
  }
  grid.back() = to;
  return grid;
}

}  // namespace casimir
