// casimir.hpp
//
// Zero-temperature renormalized Casimir energies in natural units.
#pragma once

#include "casimir/geometry.hpp"
#include "casimir/metric.hpp"

namespace casimir {

struct EnergyReport {
  ProperGeometry geometry;
  double E_p = 0.0;              // flat-space value at the proper geometry
  double redshift_factor = 1.0;  // sqrt(g00(0) / dragged g00(0))
  double E_0 = 0.0;              // comoving observer at the origin
  double observer_z = 0.0;
  double E_z = 0.0;              // stationary observer at observer_z
};

/// E_p = -pi^2 S_p / (1440 L_p^3).
double casimir_energy_flat(const ProperGeometry& geom);

/// Origin observer; E_z is filled for the cavity's observer_z.
EnergyReport casimir_energy_origin(const MetricModel& model, const CavitySpec& cavity);

/// E_z = (g00(0)/g00(z)) sqrt(g00(0)/dragged g00(0)) E_p, so g00(z) E_z is
/// the same for every observer.
double casimir_energy_at(const MetricModel& model, const CavitySpec& cavity, double z);

}  // namespace casimir
