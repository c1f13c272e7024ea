// oracle_cutoff.cpp
#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/oracle.hpp"
#include "casimir/summation.hpp"

namespace casimir::oracle {

using constants::pi;

namespace {

// int_k^inf w^2 e^{-lambda w} dw
double regulated_mode_energy(double k, double lambda) {
  return std::exp(-lambda * k) * (k * k / lambda + 2.0 * k / (lambda * lambda) +
                                  2.0 / (lambda * lambda * lambda));
}

CutoffPoint evaluate(double L, double lambda) {
  CutoffPoint p;
  p.lambda = lambda;
  CompensatedSum sum;
  sum += 0.5 * regulated_mode_energy(0.0, lambda);
  const double f0 = regulated_mode_energy(0.0, lambda);
  for (int n = 1;; ++n) {
    const double term = regulated_mode_energy(n * pi / L, lambda);
    sum += term;
    p.terms = n;
    if (term < 1e-20 * f0) break;
  }
  const double l2 = lambda * lambda;
  p.mode_sum = sum.value() / (4.0 * pi);
  p.continuum = (L / pi) * 6.0 / (l2 * l2) / (4.0 * pi);
  p.energy_per_area = p.mode_sum - p.continuum;
  return p;
}

}  // namespace

std::vector<double> default_lambdas(double L) {
  std::vector<double> out;
  for (int i = 10; i >= 3; --i) out.push_back(L * 0.01 * i);
  return out;
}

CutoffSweep cutoff_casimir_energy_per_area(double L, const std::vector<double>& lambdas,
                                           Execution exec) {
  if (!(L > 0.0)) throw InputError("cutoff oracle: L must be > 0");
  CutoffSweep out;
  out.L = L;
  if (static_cast<int>(lambdas.size()) < out.degree + 2)
    throw InputError("cutoff oracle: need at least 6 cutoff values");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (!(lambdas[i] > 0.0) || lambdas[i] > L / 10.0 * (1.0 + 1e-12))
      throw InputError("cutoff oracle: cutoff values must lie in (0, L/10]");
    if (i > 0 && !(lambdas[i] < lambdas[i - 1]))
      throw InputError("cutoff oracle: cutoff values must be strictly decreasing");
  }

  const auto n = static_cast<std::ptrdiff_t>(lambdas.size());
  out.points.resize(lambdas.size());
  if (exec == Execution::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i) out.points[i] = evaluate(L, lambdas[i]);
  } else {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) out.points[i] = evaluate(L, lambdas[i]);
  }

  // Least-squares polynomial in lambda/L (scaled for conditioning).
  Eigen::MatrixXd A(n, out.degree + 1);
  Eigen::VectorXd y(n);
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double s = out.points[i].lambda / L;
    double p = 1.0;
    for (int j = 0; j <= out.degree; ++j, p *= s) A(i, j) = p;
    y(i) = out.points[i].energy_per_area;
  }
  const Eigen::VectorXd c = A.colPivHouseholderQr().solve(y);
  out.coefficients.resize(out.degree + 1);
  for (int j = 0; j <= out.degree; ++j) out.coefficients[j] = c(j) / std::pow(L, j);
  out.extrapolated = c(0);
  const Eigen::VectorXd r = A * c - y;
  out.fit_residual = r.cwiseAbs().maxCoeff() / std::abs(out.extrapolated);
  out.residual_ok = out.fit_residual <= kCutoffResidualThreshold;
  return out;
}

}  // namespace casimir::oracle
