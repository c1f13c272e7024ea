// casimir.cpp
#include "casimir/casimir.hpp"

#include <cmath>

#include "casimir/constants.hpp"

namespace casimir {

using constants::pi;

double casimir_energy_flat(const ProperGeometry& geom) {
  return -pi * pi * geom.S_p / (1440.0 * geom.L_p * geom.L_p * geom.L_p);
}

namespace {

double redshift_factor(const MetricComponents& origin) {
  return std::sqrt(origin.g00 / dragged_g00(origin));
}

double observed(const MetricModel& model, const MetricComponents& origin, double E_0, double z) {
  if (z == 0.0) return E_0;
  const MetricComponents at = components_at(model, z);
  return origin.g00 / at.g00 * E_0;
}

}  // namespace

EnergyReport casimir_energy_origin(const MetricModel& model, const CavitySpec& cavity) {
  EnergyReport r;
  r.geometry = proper_geometry(model, cavity);
  const MetricComponents origin = components_at(model, 0.0);
  r.E_p = casimir_energy_flat(r.geometry);
  r.redshift_factor = redshift_factor(origin);
  r.E_0 = r.redshift_factor * r.E_p;
  r.observer_z = cavity.observer_z;
  r.E_z = observed(model, origin, r.E_0, cavity.observer_z);
  return r;
}

double casimir_energy_at(const MetricModel& model, const CavitySpec& cavity, double z) {
  const MetricComponents origin = components_at(model, 0.0);
  const double E_0 = redshift_factor(origin) * casimir_energy_flat(proper_geometry(model, cavity));
  return observed(model, origin, E_0, z);
}

}  // namespace casimir
