// metric.hpp
//
// Stationary metrics of the form
//
//   ds^2 = g00(z) dt^2 + g11(z) dx^2 + g22(z) dy^2 + g33(z) dz^2 + 2 g03(z) dt dz
//
// with signature (+,-,-,-). Components are analytic in z: each one is a
// polynomial (constants are degree-0 polynomials), and the named catalog
// entries are built from those.
#pragma once

#include <string>
#include <vector>

namespace casimir {

/// Covariant components at a single point.
struct MetricComponents {
  double g00 = 1.0;
  double g11 = -1.0;
  double g22 = -1.0;
  double g33 = -1.0;
  double g03 = 0.0;
};

/// Contravariant components g^{mu nu} of the same point.
struct InverseComponents {
  double g00 = 1.0;
  double g11 = -1.0;
  double g22 = -1.0;
  double g33 = -1.0;
  double g03 = 0.0;
};

/// Throws InvalidMetricError naming the first inequality that fails:
/// g00 > 0, g11 < 0, g22 < 0, g33 < 0, D > 0, dragged g00 > 0, -det(g) > 0.
void check_signature(const MetricComponents& c);

/// D = g03^2 - g00 g33, the t-z block discriminant.
double tz_discriminant(const MetricComponents& c);

InverseComponents inverse_components(const MetricComponents& c);

/// -det(g) = g11 g22 (g03^2 - g00 g33).
double det_neg(const MetricComponents& c);

/// 00-component in the dragging frame: g00 - g03^2/g33.
double dragged_g00(const MetricComponents& c);

/// Coefficients c0 + c1 z + c2 z^2 + ...
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coefficients);
  static Polynomial constant(double value) { return Polynomial({value}); }

  double operator()(double z) const;
  const std::vector<double>& coefficients() const { return coefficients_; }
  bool is_constant() const { return coefficients_.size() <= 1; }

private:
  std::vector<double> coefficients_{0.0};
};

struct ZDomain {
  double lo = -10.0;
  double hi = 10.0;
  bool contains(double z) const { return z >= lo && z <= hi; }
};

/// Five component functions of z plus the domain on which they are trusted.
class MetricModel {
public:
  MetricModel(std::string name, Polynomial g00, Polynomial g11, Polynomial g22,
              Polynomial g33, Polynomial g03, ZDomain domain = {});

  /// diag(1, -1, -1, -1).
  static MetricModel minkowski(ZDomain domain = {});

  /// Weak-field static flavour: g00 = 1 + 2 phi, g_ii = -(1 - 2 phi).
  /// Signature requires |phi| < 1/2.
  static MetricModel static_conformal(double phi, ZDomain domain = {});

  /// Constant rotating metric with g03 = drag != 0 and -det(g) = 1:
  ///   g00 = 1, g33 = -1, g03 = drag, g11 = -1/(1 + drag^2), g22 = -1.
  /// drag = 1 (the default) makes -det(g) = 1 exactly in binary floating point.
  static MetricModel rotating_unit_det(double drag = 1.0, ZDomain domain = {});

  static MetricModel constant(const MetricComponents& c, ZDomain domain = {});

  MetricModel renamed(std::string name) const;

  const std::string& name() const { return name_; }
  const ZDomain& domain() const { return domain_; }
  bool is_constant() const;
  bool is_static() const;  // g03 identically zero

  /// Raw evaluation without any checks.
  MetricComponents evaluate(double z) const;

  const Polynomial& g00() const { return g00_; }
  const Polynomial& g11() const { return g11_; }
  const Polynomial& g22() const { return g22_; }
  const Polynomial& g33() const { return g33_; }
  const Polynomial& g03() const { return g03_; }

private:
  std::string name_;
  Polynomial g00_, g11_, g22_, g33_, g03_;
  ZDomain domain_;
};

/// Components at z. Throws OutOfDomainError when z is outside the model
/// domain and InvalidMetricError when the signature fails there.
MetricComponents components_at(const MetricModel& model, double z);

inline constexpr int kValidationGridPoints = 129;

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> failures;  // first failing z per inequality
  double dragged_g00_min = 0.0;
  double dragged_g00_max = 0.0;
  double det_neg_origin = 0.0;
  double dragged_g00_origin = 0.0;
};

/// Checks the signature on kValidationGridPoints uniform samples across the
/// domain plus z = 0.
ValidationReport validate(const MetricModel& model);

}  // namespace casimir
