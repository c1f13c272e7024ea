// quadrature.cpp
#include "casimir/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir::quad {

double simpson(const std::function<double(double)>& f, double a, double b, int points) {
  if (points < 3 || points % 2 == 0) throw InputError("simpson: node count must be odd and >= 3");
  const int intervals = points - 1;
  const double h = (b - a) / intervals;
  double ends = f(a) + f(b);
  double odd = 0.0, even = 0.0;
  for (int i = 1; i < intervals; ++i) {
    const double v = f(a + i * h);
    (i % 2 ? odd : even) += v;
  }
  return h / 3.0 * (ends + 4.0 * odd + 2.0 * even);
}

Result integrate(const std::function<double(double)>& f, double a, double b) {
  Result r;
  double l1 = 0.0;
  r.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, kRelTol,
                                                                          &r.error_estimate, &l1);
  if (r.error_estimate > std::max(kAbsTol, kRelTol * std::abs(r.value))) {
    std::ostringstream os;
    os << "adaptive quadrature missed tolerance: estimate " << r.value << ", error "
       << r.error_estimate;
    throw ConvergenceError(os.str());
  }
  r.fixed_value = simpson(f, a, b, kFixedPoints);
  if (std::abs(r.fixed_value - r.value) > std::max(kAbsTol, 1e-8 * std::abs(r.value))) {
    std::ostringstream os;
    os.precision(15);
    os << "quadrature cross-check failed: adaptive " << r.value << " vs fixed " << r.fixed_value;
    throw ConsistencyError(os.str());
  }
  return r;
}

}  // namespace casimir::quad
