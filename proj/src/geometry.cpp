// geometry.cpp
#include "casimir/geometry.hpp"

#include <cmath>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

void check_cavity(const MetricModel& model, const CavitySpec& cavity) {
  if (!(cavity.L > 0.0)) throw InputError("cavity: L must be > 0");
  if (!(cavity.x1 > cavity.x0)) throw InputError("cavity: x1 must be > x0");
  if (!(cavity.y1 > cavity.y0)) throw InputError("cavity: y1 must be > y0");
  const auto& dom = model.domain();
  if (!dom.contains(-0.5 * cavity.L) || !dom.contains(0.5 * cavity.L)) {
    std::ostringstream os;
    os << "cavity: plates at +-" << 0.5 * cavity.L << " leave metric domain [" << dom.lo << ", "
       << dom.hi << "]";
    throw OutOfDomainError(os.str());
  }
  if (!dom.contains(cavity.observer_z)) {
    std::ostringstream os;
    os << "cavity: observer_z = " << cavity.observer_z << " outside metric domain";
    throw OutOfDomainError(os.str());
  }
}

ProperGeometry ProperGeometry::from(double L_p, double S_p) {
  if (!(L_p > 0.0) || !(S_p > 0.0)) throw InputError("proper geometry must be strictly positive");
  return {L_p, S_p, S_p * L_p};
}

double proper_length(const MetricModel& model, const CavitySpec& cavity) {
  check_cavity(model, cavity);
  const double half = 0.5 * cavity.L;
  if (model.is_constant()) {
    const MetricComponents c = components_at(model, 0.0);
    return std::sqrt(-c.g33 + c.g03 * c.g03 / c.g00) * cavity.L;
  }
  auto integrand = [&model](double z) {
    const MetricComponents c = components_at(model, z);
    return std::sqrt(-c.g33 + c.g03 * c.g03 / c.g00);
  };
  return quad::integrate(integrand, -half, half).value;
}

double proper_area(const MetricModel& model, const CavitySpec& cavity) {
  check_cavity(model, cavity);
  const MetricComponents c = components_at(model, 0.0);
  return std::sqrt(c.g11 * c.g22) * cavity.coordinate_area();
}

ProperGeometry proper_geometry(const MetricModel& model, const CavitySpec& cavity) {
  return ProperGeometry::from(proper_length(model, cavity), proper_area(model, cavity));
}

}  // namespace casimir
