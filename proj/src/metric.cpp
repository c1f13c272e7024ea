// metric.cpp
#include "casimir/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

std::string describe(const char* inequality, double value) {
  std::ostringstream os;
  os.precision(12);
  os << inequality << " violated (value " << value << ")";
  return os.str();
}

}  // namespace

double tz_discriminant(const MetricComponents& c) {
  return c.g03 * c.g03 - c.g00 * c.g33;
}

void check_signature(const MetricComponents& c) {
  if (!(c.g00 > 0.0)) throw InvalidMetricError(describe("g00 > 0", c.g00));
  if (!(c.g11 < 0.0)) throw InvalidMetricError(describe("g11 < 0", c.g11));
  if (!(c.g22 < 0.0)) throw InvalidMetricError(describe("g22 < 0", c.g22));
  if (!(c.g33 < 0.0)) throw InvalidMetricError(describe("g33 < 0", c.g33));
  const double d = tz_discriminant(c);
  if (!(d > 0.0)) throw InvalidMetricError(describe("g03^2 - g00*g33 > 0", d));
  const double dragged = dragged_g00(c);
  if (!(dragged > 0.0)) throw InvalidMetricError(describe("g00 - g03^2/g33 > 0", dragged));
  const double neg_det = det_neg(c);
  if (!(neg_det > 0.0)) throw InvalidMetricError(describe("-det(g) > 0", neg_det));
}

InverseComponents inverse_components(const MetricComponents& c) {
  const double d = tz_discriminant(c);
  return {
      .g00 = -c.g33 / d,
      .g11 = 1.0 / c.g11,
      .g22 = 1.0 / c.g22,
      .g33 = -c.g00 / d,
      .g03 = c.g03 / d,
  };
}

double det_neg(const MetricComponents& c) { return c.g11 * c.g22 * tz_discriminant(c); }

double dragged_g00(const MetricComponents& c) { return c.g00 - c.g03 * c.g03 / c.g33; }

Polynomial::Polynomial(std::vector<double> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty()) coefficients_.push_back(0.0);
  while (coefficients_.size() > 1 && coefficients_.back() == 0.0) coefficients_.pop_back();
}

double Polynomial::operator()(double z) const {
  double acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

MetricModel::MetricModel(std::string name, Polynomial g00, Polynomial g11, Polynomial g22,
                         Polynomial g33, Polynomial g03, ZDomain domain)
    : name_(std::move(name)),
      g00_(std::move(g00)),
      g11_(std::move(g11)),
      g22_(std::move(g22)),
      g33_(std::move(g33)),
      g03_(std::move(g03)),
      domain_(domain) {
  if (!(domain_.hi > domain_.lo)) throw InputError("metric domain must satisfy z_max > z_min");
  if (!domain_.contains(0.0)) throw InputError("metric domain must contain the cavity centre z = 0");
}

MetricModel MetricModel::minkowski(ZDomain domain) {
  return constant(MetricComponents{}, domain).renamed("minkowski");
}

MetricModel MetricModel::static_conformal(double phi, ZDomain domain) {
  if (!(std::abs(phi) < 0.5)) throw InvalidMetricError("static-conformal requires |phi| < 1/2");
  const double spatial = -(1.0 - 2.0 * phi);
  MetricComponents c{1.0 + 2.0 * phi, spatial, spatial, spatial, 0.0};
  return constant(c, domain).renamed("static-conformal");
}

MetricModel MetricModel::rotating_unit_det(double drag, ZDomain domain) {
  if (drag == 0.0) throw InvalidMetricError("rotating-unit-det requires a nonzero drag (g03)");
  MetricComponents c{1.0, -1.0 / (1.0 + drag * drag), -1.0, -1.0, drag};
  return constant(c, domain).renamed("rotating-unit-det");
}

MetricModel MetricModel::constant(const MetricComponents& c, ZDomain domain) {
  return MetricModel("constant", Polynomial::constant(c.g00), Polynomial::constant(c.g11),
                     Polynomial::constant(c.g22), Polynomial::constant(c.g33),
                     Polynomial::constant(c.g03), domain);
}

MetricModel MetricModel::renamed(std::string name) const {
  MetricModel copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool MetricModel::is_constant() const {
  return g00_.is_constant() && g11_.is_constant() && g22_.is_constant() && g33_.is_constant() &&
         g03_.is_constant();
}

bool MetricModel::is_static() const { return g03_.is_constant() && g03_(0.0) == 0.0; }

MetricComponents MetricModel::evaluate(double z) const {
  return {g00_(z), g11_(z), g22_(z), g33_(z), g03_(z)};
}

MetricComponents components_at(const MetricModel& model, double z) {
  if (!model.domain().contains(z)) {
    std::ostringstream os;
    os << "z = " << z << " outside metric domain [" << model.domain().lo << ", "
       << model.domain().hi << "]";
    throw OutOfDomainError(os.str());
  }
  MetricComponents c = model.evaluate(z);
  try {
    check_signature(c);
  } catch (const InvalidMetricError& e) {
    std::ostringstream os;
    os << "metric '" << model.name() << "' at z = " << z << ": " << e.what();
    throw InvalidMetricError(os.str());
  }
  return c;
}

ValidationReport validate(const MetricModel& model) {
  ValidationReport report;
  report.dragged_g00_min = std::numeric_limits<double>::infinity();
  report.dragged_g00_max = -std::numeric_limits<double>::infinity();

  const auto& dom = model.domain();
  std::vector<double> grid;
  grid.reserve(kValidationGridPoints + 1);
  for (int i = 0; i < kValidationGridPoints; ++i)
    grid.push_back(dom.lo + (dom.hi - dom.lo) * i / (kValidationGridPoints - 1));
  grid.push_back(0.0);

  for (double z : grid) {
    const MetricComponents c = model.evaluate(z);
    try {
      check_signature(c);
      const double dragged = dragged_g00(c);
      report.dragged_g00_min = std::min(report.dragged_g00_min, dragged);
      report.dragged_g00_max = std::max(report.dragged_g00_max, dragged);
    } catch (const InvalidMetricError& e) {
      report.valid = false;
      const std::string what = e.what();
      const std::string kind = what.substr(0, what.find(" violated"));
      const bool seen = std::any_of(report.failures.begin(), report.failures.end(),
                                    [&](const std::string& f) { return f.find(": " + kind) != std::string::npos; });
      if (seen) continue;
      std::ostringstream os;
      os.precision(6);
      os << "z=" << z << ": " << e.what();
      report.failures.push_back(os.str());
    }
  }
  if (report.valid) {
    const MetricComponents origin = model.evaluate(0.0);
    report.det_neg_origin = det_neg(origin);
    report.dragged_g00_origin = dragged_g00(origin);
  }
  return report;
}

}  // namespace casimir
