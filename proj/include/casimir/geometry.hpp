// geometry.hpp
//
// Proper sizes of the cavity. Plates sit at z = -L/2 and z = +L/2 with the
// origin at the centre of the apparatus; the transverse plate is the
// coordinate rectangle [x0, x1] x [y0, y1].
#pragma once

#include "casimir/metric.hpp"

namespace casimir {

struct CavitySpec {
  double L = 1.0;
  double x0 = 0.0, x1 = 1.0;
  double y0 = 0.0, y1 = 1.0;
  double observer_z = 0.0;

  double coordinate_area() const { return (x1 - x0) * (y1 - y0); }
};

/// Throws InputError on L <= 0 or an empty rectangle, OutOfDomainError when
/// the plates or the observer leave the metric domain.
void check_cavity(const MetricModel& model, const CavitySpec& cavity);

struct ProperGeometry {
  double L_p = 1.0;
  double S_p = 1.0;
  double V_p = 1.0;

  /// V_p is always S_p * L_p.
  static ProperGeometry from(double L_p, double S_p);
};

/// Integral of sqrt(-g33 + g03^2/g00) over [-L/2, L/2].
double proper_length(const MetricModel& model, const CavitySpec& cavity);

/// sqrt(g11(0) g22(0)) times the coordinate area. Transverse components are
/// taken at z = 0 (zero-order treatment).
double proper_area(const MetricModel& model, const CavitySpec& cavity);

ProperGeometry proper_geometry(const MetricModel& model, const CavitySpec& cavity);

}  // namespace casimir
