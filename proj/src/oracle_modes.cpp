// oracle_modes.cpp
#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <complex>
#include <random>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/oracle.hpp"

namespace casimir::oracle {

using constants::pi;
using cplx = std::complex<double>;

namespace {

// Coordinates ordered (t, x, y, z).
Eigen::Matrix4d covariant(const MetricComponents& c) {
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  g(0, 0) = c.g00;
  g(1, 1) = c.g11;
  g(2, 2) = c.g22;
  g(3, 3) = c.g33;
  g(0, 3) = g(3, 0) = c.g03;
  return g;
}

Eigen::Matrix4d contravariant(const MetricComponents& c) {
  return covariant(c).fullPivLu().inverse();
}

// Five-point central difference of a complex function of one variable.
template <typename F>
cplx derivative(F&& f, double x, double h) {
  return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
}

}  // namespace

double mode_pde_residual(const MetricComponents& c, double L, const ModeSpec& m, int samples) {
  const Eigen::Matrix4d ginv = contravariant(c);
  const ModeData d = mode_data(c, L, m);
  const double kz = m.n * pi / L;

  // sin(kz (z + L/2)) e^{i a z} = sum over s = +-1 of  s e^{i s kz L/2}/(2i) e^{i (a + s kz) z}.
  struct Wave {
    Eigen::Vector4d p;
    cplx amplitude;
  };
  const std::array<Wave, 2> waves{{
      {Eigen::Vector4d(-d.omega, m.kx, m.ky, d.phase_rate + kz),
       std::polar(1.0, 0.5 * kz * L) / cplx(0.0, 2.0)},
      {Eigen::Vector4d(-d.omega, m.kx, m.ky, d.phase_rate - kz),
       -std::polar(1.0, -0.5 * kz * L) / cplx(0.0, 2.0)},
  }};

  double scale = 0.0;
  for (const Wave& w : waves)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) scale = std::max(scale, std::abs(ginv(i, j) * w.p(i) * w.p(j)));

  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> unit(-0.5, 0.5);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Eigen::Vector4d x(unit(rng), unit(rng), unit(rng), L * unit(rng));
    cplx residual = 0.0;
    for (const Wave& w : waves) {
      const cplx e = w.amplitude * std::polar(1.0, w.p.dot(x));
      // g^{mu nu} d_mu d_nu e^{i p.x} = -(p^T g^-1 p) e^{i p.x}
      residual += -(w.p.dot(ginv * w.p)) * e;
    }
    // Each wave has amplitude 1/2, so this is relative to the largest single
    // operator term acting on the unnormalized mode.
    worst = std::max(worst, std::abs(residual) / scale);
  }
  return worst;
}

double mode_scalar_product(const MetricComponents& c, double L, const ModeSpec& a,
                           const ModeSpec& b) {
  if (a.kx != b.kx || a.ky != b.ky)
    throw InputError("mode scalar product oracle needs equal transverse momenta");
  const Eigen::Matrix4d g = covariant(c);
  const Eigen::Matrix4d ginv = contravariant(c);
  // Unit normal to t = const and the induced spatial measure sqrt(-g/g00).
  const double n0 = std::sqrt(ginv(0, 0));
  const double n3 = ginv(0, 3) / n0;
  const double root_gs = std::sqrt(-g.determinant() / g(0, 0));

  const double box_x = a.kx != 0.0 ? 2.0 * pi / std::abs(a.kx) : 1.0;
  const double box_y = a.ky != 0.0 ? 2.0 * pi / std::abs(a.ky) : 1.0;

  const double wa = mode_frequency(c, L, a);
  const double wb = mode_frequency(c, L, b);
  const double ht = 1e-3 / std::max(wa, wb);
  const double hz = 1e-3 * L / std::max(a.n, b.n);

  auto density = [&](double x, double y, double z) {
    auto phi_a_t = [&](double t) { return mode_value(c, L, a, t, x, y, z); };
    auto phi_b_t = [&](double t) { return std::conj(mode_value(c, L, b, t, x, y, z)); };
    auto phi_a_z = [&](double s) { return mode_value(c, L, a, 0.0, x, y, s); };
    auto phi_b_z = [&](double s) { return std::conj(mode_value(c, L, b, 0.0, x, y, s)); };
    const cplx pa = phi_a_z(z), pb = phi_b_z(z);
    const cplx time = derivative(phi_a_t, 0.0, ht) * pb - pa * derivative(phi_b_t, 0.0, ht);
    const cplx space = derivative(phi_a_z, z, hz) * pb - pa * derivative(phi_b_z, z, hz);
    return cplx(0.0, 1.0) * (time * n0 + space * n3) * root_gs;
  };

  using Gauss = boost::math::quadrature::gauss<double, 30>;
  using GaussT = boost::math::quadrature::gauss<double, 7>;
  const int pieces = 2 * std::max(a.n, b.n);
  const double dz = L / pieces;
  cplx total = 0.0;
  for (int k = 0; k < pieces; ++k) {
    const double z0 = -0.5 * L + k * dz;
    auto over_z = [&](double z) {
      auto over_y = [&](double y) {
        return GaussT::integrate([&](double x) { return density(x, y, z); }, 0.0, box_x);
      };
      return GaussT::integrate(over_y, 0.0, box_y);
    };
    total += Gauss::integrate(over_z, z0, z0 + dz);
  }
  // Box normalization: int e^{i(k-k')x} d^2x = A delta_kk' stands in for (2 pi)^2 delta^2.
  return std::abs(total) * (2.0 * pi) * (2.0 * pi) / (box_x * box_y);
}

double mode_norm_check(const MetricComponents& c, double L, const ModeSpec& m) {
  return std::abs(mode_scalar_product(c, L, m, m) - 1.0);
}

}  // namespace casimir::oracle
