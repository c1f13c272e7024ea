// oracle_blackbody.cpp
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/oracle.hpp"

namespace casimir::oracle {

using constants::pi;

double blackbody_free_energy_density_quadrature(double T) {
  if (!(T > 0.0)) throw InputError("temperature must be > 0");
  // Radial part in s = k/T: int_0^inf s^2 ln(1 - e^{-s}) ds.
  boost::math::quadrature::exp_sinh<double> radial_rule;
  auto radial = [](double s) { return s * s * std::log(-std::expm1(-s)); };
  const double radial_integral = radial_rule.integrate(radial, 0.0, std::numeric_limits<double>::infinity(), 1e-14);

  // Angular parts, integrated rather than assumed to give 4 pi.
  using Gauss = boost::math::quadrature::gauss<double, 20>;
  auto polar = [](double theta) { return std::sin(theta); };
  const double solid_angle =
      Gauss::integrate([&](double) { return Gauss::integrate(polar, 0.0, pi); }, 0.0, 2.0 * pi);

  const double T4 = T * T * T * T;
  return T * T4 / T * solid_angle * radial_integral / std::pow(2.0 * pi, 3);
}

}  // namespace casimir::oracle
