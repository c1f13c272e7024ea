// modes.cpp
#include "casimir/modes.hpp"

#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"

namespace casimir {

using constants::pi;

double mode_frequency(const MetricComponents& c, double L, const ModeSpec& m) {
  if (m.n < 1) throw InputError("mode index n must be >= 1");
  if (!(L > 0.0)) throw InputError("plate separation must be > 0");
  const InverseComponents inv = inverse_components(c);
  const double denom = inv.g03 * inv.g03 - inv.g00 * inv.g33;
  if (!(denom > 0.0)) throw InvalidMetricError("g^03^2 - g^00 g^33 > 0 violated");
  const double kz = m.n * pi / L;
  const double spatial =
      inv.g11 / inv.g33 * m.kx * m.kx + inv.g22 / inv.g33 * m.ky * m.ky + kz * kz;
  if (!(spatial > 0.0)) throw InvalidMetricError("mode dispersion radicand > 0 violated");
  return std::sqrt(inv.g33 * inv.g33 / denom) * std::sqrt(spatial);
}

double mode_norm_sq(const MetricComponents& c, double L, double omega) {
  if (!(omega > 0.0)) throw InputError("mode frequency must be > 0");
  const double transverse = std::sqrt(-c.g00 * c.g11 * c.g22 * c.g33);
  return c.g00 * transverse / (det_neg(c) * (2.0 * pi) * (2.0 * pi) * L * omega);
}

double mode_phase_rate(const MetricComponents& c, double omega) {
  const InverseComponents inv = inverse_components(c);
  return omega * inv.g03 / inv.g33;
}

ModeData mode_data(const MetricComponents& c, double L, const ModeSpec& m) {
  const double omega = mode_frequency(c, L, m);
  return {omega, mode_norm_sq(c, L, omega), mode_phase_rate(c, omega)};
}

std::complex<double> mode_value(const MetricComponents& c, double L, const ModeSpec& m, double t,
                                double x, double y, double z) {
  const ModeData d = mode_data(c, L, m);
  const double phase = -d.omega * t + m.kx * x + m.ky * y + d.phase_rate * z;
  const double standing = std::sin(m.n * pi * (z + 0.5 * L) / L);
  return std::sqrt(d.norm_sq) * standing * std::polar(1.0, phase);
}

}  // namespace casimir
