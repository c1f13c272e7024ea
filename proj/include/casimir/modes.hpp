// modes.hpp
//
// Confined massless scalar modes between Dirichlet plates at z = +-L/2,
//
//   phi = N exp(-i w t + i kx x + i ky y) sin(n pi (z + L/2) / L) exp(i a z),
//
// with every metric component frozen at its z = 0 value.
#pragma once

#include <complex>

#include "casimir/metric.hpp"

namespace casimir {

struct ModeSpec {
  int n = 1;
  double kx = 0.0;
  double ky = 0.0;
};

struct ModeData {
  double omega = 0.0;
  double norm_sq = 0.0;
  double phase_rate = 0.0;  // a = omega g^03 / g^33
};

/// w = sqrt(g^33^2 / (g^03^2 - g^00 g^33)) sqrt((g^11/g^33) kx^2 + (g^22/g^33) ky^2 + (n pi/L)^2).
/// Throws InvalidMetricError if either radicand is not positive.
double mode_frequency(const MetricComponents& c, double L, const ModeSpec& m);

/// N^2 = g00 sqrt(-g00 g11 g22 g33) / (-g (2 pi)^2 L w).
double mode_norm_sq(const MetricComponents& c, double L, double omega);

double mode_phase_rate(const MetricComponents& c, double omega);

ModeData mode_data(const MetricComponents& c, double L, const ModeSpec& m);

/// Full normalized mode value at (t, x, y, z).
std::complex<double> mode_value(const MetricComponents& c, double L, const ModeSpec& m,
                                double t, double x, double y, double z);

}  // namespace casimir
