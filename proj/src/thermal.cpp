// thermal.cpp
#include "casimir/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/summation.hpp"

namespace casimir {

using constants::pi;
using constants::zeta3;

namespace {

constexpr double kPi3 = pi * pi * pi;

void require_floor(double beta_tilde) {
  if (!(beta_tilde >= kBetaTildeFloor)) {
    std::ostringstream os;
    os << "beta_tilde = " << beta_tilde << " is below the accuracy floor " << kBetaTildeFloor
       << " (1/beta_tilde = " << 1.0 / beta_tilde << ")";
    throw AccuracyError(os.str());
  }
}

// sum_{m > M} m^-3
double zeta3_tail(int M) {
  CompensatedSum partial;
  for (int m = M; m >= 1; --m) {
    const double md = m;
    partial += 1.0 / (md * md * md);
  }
  return zeta3 - partial.value();
}

}  // namespace

SeriesControl SeriesControl::from_env(SeriesControl base) {
  if (const char* env = std::getenv("CASIMIR_MAX_TERMS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 100'000'000)
      throw InputError(std::string("CASIMIR_MAX_TERMS must be a positive integer, got '") + env +
                       "'");
    base.max_terms = static_cast<int>(v);
  }
  return base;
}

BracketSeries bracket_series(double beta_tilde, const SeriesControl& ctl) {
  require_floor(beta_tilde);
  if (ctl.max_terms < 1) throw InputError("series max_terms must be >= 1");

  const double bt = beta_tilde;
  const int m_exp = static_cast<int>(std::floor(kExponentialCutoff / (pi * bt)));
  const int M = std::min(ctl.max_terms, m_exp);

  // Per term, with u = pi m bt, c = coth u, s2 = 1/sinh^2 u:
  //   value:     c/(m bt)^3 + pi s2/(m bt)^2
  //   bt d/dbt:  pi^3 (-3c/u^3 - 3 s2/u^2 - 2 s2 c/u)
  //   bt^2 d2:   pi^3 (12c/u^3 + 12 s2/u^2 + 10 s2 c/u + 4 s2 c^2 + 2 s2^2)
  // Largest terms come first (m = 1), so sum in increasing m.
  CompensatedSum value, d1, d2;
  for (int m = 1; m <= M; ++m) {
    const double mb = m * bt;
    const double u = pi * mb;
    const double c = 1.0 / std::tanh(u);
    const double sh = std::sinh(u);
    const double s2 = 1.0 / (sh * sh);
    const double u2 = u * u;
    const double u3 = u2 * u;
    value += c / (mb * mb * mb) + pi * s2 / (mb * mb);
    d1 += -3.0 * c / u3 - 3.0 * s2 / u2 - 2.0 * s2 * c / u;
    d2 += 12.0 * c / u3 + 12.0 * s2 / u2 + 10.0 * s2 * c / u + 4.0 * s2 * c * c + 2.0 * s2 * s2;
  }

  BracketSeries out;
  out.explicit_terms = M;
  const double tail3 = zeta3_tail(M);
  const double bt3 = bt * bt * bt;
  out.tail = tail3 / bt3;
  out.value = value.value() + out.tail;
  out.d1 = kPi3 * d1.value() / bt - 3.0 * tail3 / (bt3 * bt);
  out.d2 = kPi3 * d2.value() / (bt * bt) + 12.0 * tail3 / (bt3 * bt * bt);

  // Dropped part for m > M: (coth - 1)/(m bt)^3 + pi s2/(m bt)^2, both
  // ~ e^{-2u}; bounded by a geometric series from m = M + 1.
  const double u_next = pi * (M + 1) * bt;
  const double mb_next = (M + 1) * bt;
  const double decay = std::exp(-2.0 * u_next);
  const double first = (2.0 / (mb_next * mb_next * mb_next) + 4.0 * pi / (mb_next * mb_next)) *
                       decay / (1.0 - decay);
  out.neglected = first / (-std::expm1(-2.0 * pi * bt));
  if (M < m_exp && out.neglected > ctl.term_tolerance * out.value) {
    std::ostringstream os;
    os << "bracket series truncated at max_terms = " << ctl.max_terms << " for beta_tilde = " << bt
       << ": dropped part bound " << out.neglected << " exceeds tolerance "
       << ctl.term_tolerance * out.value;
    throw ConvergenceError(os.str());
  }
  return out;
}

SeriesControl SeriesControl::from_env() { return from_env(SeriesControl{}); }

RenormalizedSeries renormalized_series(double beta_tilde, const SeriesControl& ctl) {
  require_floor(beta_tilde);
  if (ctl.max_terms < 1) throw InputError("series max_terms must be >= 1");
  const double bt = beta_tilde;
  RenormalizedSeries out;

  if (bt >= kDualSwitch) {
    const BracketSeries b = bracket_series(bt, ctl);
    const double bt4 = bt * bt * bt * bt;
    const double sub = kPi3 / (45.0 * bt4);
    // theta bt^-4 = -4 bt^-4, theta^2 bt^-4 = 16 bt^-4
    out.G = b.value - sub;
    out.theta1 = bt * b.d1 + 4.0 * sub;
    out.theta2 = bt * bt * b.d2 + bt * b.d1 - 16.0 * sub;
    out.energy = out.G + out.theta1;
    out.capacity = out.theta2 + out.theta1;
    out.energy_excess = out.energy + kPi3 / 45.0;
    out.terms = b.explicit_terms;
    return out;
  }

  // Per k with s = 2 pi k/bt, p = q(1+q), D = s d/ds (= -theta):
  //   f   = s q + s^2 p
  //   Df  = s q + s^2 p - s^3 p (1+2q)
  //   D2f = s q + s^2 p - 4 s^3 p (1+2q) + s^4 (p (1+2q)^2 + 2 p^2)
  // Stop once e^{-(s_k - s_1)} drops below ~1e-20 of the leading term.
  out.dual = true;
  const double s1 = 2.0 * pi / bt;
  const int needed = 1 + static_cast<int>(std::ceil(46.0 / s1));
  if (needed > ctl.max_terms) {
    std::ostringstream os;
    os << "high-temperature series for beta_tilde = " << bt << " needs " << needed
       << " terms, max_terms = " << ctl.max_terms;
    throw ConvergenceError(os.str());
  }
  CompensatedSum f, df, d2f, f_minus_df, d2f_minus_df;
  for (int k = 1; k <= needed; ++k) {
    const double s = k * s1;
    const double q = 1.0 / std::expm1(s);
    const double p = q * (1.0 + q);
    const double r = 1.0 + 2.0 * q;
    const double s2 = s * s, s3 = s2 * s;
    const double k4 = static_cast<double>(k) * k * k * k;
    const double base = s * q + s2 * p;
    const double cubic = s3 * p * r;
    const double quartic = s2 * s2 * (p * r * r + 2.0 * p * p);
    f += base / k4;
    df += (base - cubic) / k4;
    d2f += (base - 4.0 * cubic + quartic) / k4;
    f_minus_df += cubic / k4;
    d2f_minus_df += (quartic - 3.0 * cubic) / k4;
  }
  out.terms = needed;
  const double z = zeta3 / bt;
  // theta (1/bt) = -1/bt, theta^2 (1/bt) = 1/bt
  out.G = -kPi3 / 45.0 + z + f.value() / pi;
  out.theta1 = -z - df.value() / pi;
  out.theta2 = z + d2f.value() / pi;
  out.energy_excess = f_minus_df.value() / pi;
  out.energy = -kPi3 / 45.0 + out.energy_excess;
  out.capacity = d2f_minus_df.value() / pi;
  return out;
}

ThermalPoint ThermalPoint::from_coordinate(double T, double g00_origin, double L_p) {
  if (!(T > 0.0)) throw InputError("temperature must be > 0");
  const double T_p = T / std::sqrt(g00_origin);
  return {T, T_p, 1.0 / (2.0 * T_p * L_p)};
}

ThermalPoint ThermalPoint::from_proper(double T_p, double g00_origin, double L_p) {
  if (!(T_p > 0.0)) throw InputError("proper temperature must be > 0");
  return {T_p * std::sqrt(g00_origin), T_p, 1.0 / (2.0 * T_p * L_p)};
}

ThermalPoint ThermalPoint::from_reduced(double inverse_beta_tilde, double g00_origin, double L_p) {
  if (!(inverse_beta_tilde > 0.0)) throw InputError("1/beta_tilde must be > 0");
  const double T_p = inverse_beta_tilde / (2.0 * L_p);
  return {T_p * std::sqrt(g00_origin), T_p, 1.0 / inverse_beta_tilde};
}

double thermal_free_energy_raw(const MetricModel& model, const ProperGeometry& geom,
                               const ThermalPoint& point, const SeriesControl& ctl) {
  const double sqrt_neg_g = std::sqrt(det_neg(components_at(model, 0.0)));
  const double bt = point.beta_tilde;
  const double L3 = geom.L_p * geom.L_p * geom.L_p;
  const double prefactor = geom.S_p / (32.0 * pi * L3);
  const double flat = prefactor * (zeta3 / (bt * bt * bt) - bracket_sum(bt, ctl));
  return sqrt_neg_g * flat;
}

double thermal_free_energy_renormalized(double beta_tilde, const ProperGeometry& geom,
                                        const SeriesControl& ctl) {
  const double L3 = geom.L_p * geom.L_p * geom.L_p;
  return -geom.S_p / (32.0 * pi * L3) * renormalized_series(beta_tilde, ctl).G;
}

AsymptoticTerms asymptotic_expansion(const ProperGeometry& geom, double T_p) {
  const double T3 = T_p * T_p * T_p;
  const double L3 = geom.L_p * geom.L_p * geom.L_p;
  return {
      blackbody_free_energy(T_p, geom.V_p),
      geom.S_p * zeta3 * T3 / (4.0 * pi),
      -pi * pi * geom.S_p / (720.0 * L3),
  };
}

double blackbody_free_energy(double T_p, double V_p) {
  const double T2 = T_p * T_p;
  return -pi * pi * V_p * T2 * T2 / 90.0;
}

ProperCorrections proper_corrections(const ProperGeometry& geom, const ThermalPoint& point,
                                     const SeriesControl& ctl) {
  const double T = point.T_p;
  const RenormalizedSeries g = renormalized_series(point.beta_tilde, ctl);

  // dF = K G(bt(T)); T d/dT = -theta, so
  //   S  = -dF/dT          =  K theta G / T
  //   U  = F + T S         =  K (G + theta G)
  //   Cv = dU/dT           = -K (theta^2 G + theta G) / T
  const double K = -geom.S_p / (32.0 * pi * geom.L_p * geom.L_p * geom.L_p);
  ProperCorrections out;
  out.dF_p = K * g.G;
  out.dS_p = K * g.theta1 / T;
  out.dU_p = K * g.energy;
  out.dCv_p = -K * g.capacity / T;
  return out;
}

ThermalSetup make_thermal_setup(const MetricModel& model, const CavitySpec& cavity) {
  ThermalSetup s;
  s.metric_name = model.name();
  s.energy = casimir_energy_origin(model, cavity);
  s.geometry = s.energy.geometry;
  const MetricComponents origin = components_at(model, 0.0);
  s.g00_origin = origin.g00;
  s.sqrt_neg_g = std::sqrt(det_neg(origin));
  return s;
}

ThermoReport thermodynamics(const ThermalSetup& setup, const ThermalPoint& point,
                            const SeriesControl& ctl) {
  const ProperGeometry& geom = setup.geometry;
  ThermoReport r;
  r.point = point;
  r.sqrt_neg_g = setup.sqrt_neg_g;
  r.E_z = setup.energy.E_z;
  r.proper = proper_corrections(geom, point, ctl);

  r.F_total = r.E_z + r.sqrt_neg_g * r.proper.dF_p;
  r.U = r.E_z + r.sqrt_neg_g * r.proper.dU_p;
  r.S_entropy = r.sqrt_neg_g * r.proper.dS_p;
  r.C_V = r.sqrt_neg_g * r.proper.dCv_p;
  r.blackbody_F = r.sqrt_neg_g * blackbody_free_energy(point.T_p, geom.V_p);

  const double L2_over_S = geom.L_p * geom.L_p / geom.S_p;
  const double L3_over_S = L2_over_S * geom.L_p;
  r.F_scaled = L3_over_S * r.proper.dF_p;
  r.U_scaled = L3_over_S * r.proper.dU_p;
  r.S_scaled = L2_over_S * r.proper.dS_p;
  r.Cv_scaled = L2_over_S * r.proper.dCv_p;
  return r;
}

DerivativeCheck check_derivatives(const ProperGeometry& geom, const ThermalPoint& point,
                                  const SeriesControl& ctl, double tolerance) {
  const double T = point.T_p;
  const double L_p = geom.L_p;
  const double K = -geom.S_p / (32.0 * pi * L_p * L_p * L_p);
  auto series = [&](double T_p) { return renormalized_series(1.0 / (2.0 * T_p * L_p), ctl); };
  // Richardson-extrapolated central difference, O(h^4).
  auto derivative = [&](auto&& f, double h) {
    auto central = [&](double s) { return (f(T + s) - f(T - s)) / (2.0 * s); };
    return (4.0 * central(0.5 * h) - central(h)) / 3.0;
  };
  auto rel = [](double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
  };

  const ProperCorrections analytic = proper_corrections(geom, point, ctl);
  DerivativeCheck best;
  bool first = true;
  for (double step : kDerivativeSteps) {
    const double h = step * T;
    DerivativeCheck c;
    c.step = step;
    c.S_fd = -derivative([&](double t) { return K * series(t).G; }, h);
    c.Cv_fd = derivative([&](double t) { return K * series(t).energy_excess; }, h);
    c.S_analytic = analytic.dS_p;
    c.Cv_analytic = analytic.dCv_p;
    c.S_rel_err = rel(c.S_fd, c.S_analytic);
    c.Cv_rel_err = rel(c.Cv_fd, c.Cv_analytic);
    if (first || std::max(c.S_rel_err, c.Cv_rel_err) < std::max(best.S_rel_err, best.Cv_rel_err))
      best = c;
    first = false;
  }
  if (best.S_rel_err > tolerance || best.Cv_rel_err > tolerance) {
    std::ostringstream os;
    os << "analytic vs finite-difference derivatives disagree at T_p = " << T
       << ": entropy rel err " << best.S_rel_err << ", heat capacity rel err " << best.Cv_rel_err;
    throw ConsistencyError(os.str());
  }
  return best;
}

}  // namespace casimir
