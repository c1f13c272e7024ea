// thermal.hpp
//
// Thermal corrections to the Casimir free energy between the plates and the
// thermodynamic quantities built from them. Everything is in natural units
// (hbar = c = k_B = 1). The temperature is a single coordinate-constant
// scalar; proper temperature uses g00 at z = 0.
//
// The series variable is the dimensionless inverse temperature
//   bt = 1 / (2 T_p L_p)
// and the central object is the bracket
//   B(bt) = sum_{m>=1} [ coth(pi m bt)/(m bt)^3 + pi/((m bt)^2 sinh^2(pi m bt)) ].
#pragma once

#include <string>

#include "casimir/casimir.hpp"
#include "casimir/geometry.hpp"
#include "casimir/metric.hpp"

namespace casimir {

/// Below this bt the renormalized correction loses too many digits to the
/// pi^3/(45 bt^4) subtraction; evaluations there raise AccuracyError.
inline constexpr double kBetaTildeFloor = 0.01;

/// Terms with pi m bt above this are coth = 1, sinh^-2 = 0 to double precision.
inline constexpr double kExponentialCutoff = 37.0;

struct SeriesControl {
  int max_terms = 500;
  double term_tolerance = 1e-16;

  /// Applies CASIMIR_MAX_TERMS from the environment when it is set.
  static SeriesControl from_env(SeriesControl base);
  static SeriesControl from_env();
};

/// B and its first two derivatives with respect to bt.
struct BracketSeries {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  int explicit_terms = 0;   // terms summed one by one
  double tail = 0.0;        // analytic sum_{m>M} 1/(m bt)^3 contribution to value
  double neglected = 0.0;   // bound on the dropped exponentially small parts
};

/// Explicit compensated sum up to min(max_terms, last m with pi m bt <= 37),
/// then the 1/(m bt)^3 tail through zeta(3). Throws AccuracyError below
/// kBetaTildeFloor and ConvergenceError when max_terms stops the explicit sum
/// before the dropped part falls under term_tolerance * B.
BracketSeries bracket_series(double beta_tilde, const SeriesControl& ctl);

inline double bracket_sum(double beta_tilde, const SeriesControl& ctl) {
  return bracket_series(beta_tilde, ctl).value;
}

/// Renormalized bracket G(bt) = B(bt) - pi^3/(45 bt^4) and its logarithmic
/// derivatives theta G, theta^2 G with theta = bt d/dbt.
///
/// For bt >= kDualSwitch this comes straight from bracket_series. Below it
/// the zeta(3) modular identity is used instead,
///   G = -pi^3/45 + zeta(3)/bt + (1/pi) sum_k f(2 pi k/bt)/k^4,
///   f(s) = s q + s^2 q (1 + q),  q = 1/(e^s - 1),
/// which keeps the exponentially small high-temperature part (all of C_V
/// there) free of cancellation.
struct RenormalizedSeries {
  double G = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
  // G + theta G and theta^2 G + theta G, formed before rounding so the
  // zeta(3)/bt pieces cancel exactly in the dual form.
  double energy = 0.0;
  double capacity = 0.0;
  // energy + pi^3/45; tends to zero at high temperature.
  double energy_excess = 0.0;
  bool dual = false;
  int terms = 0;
};

inline constexpr double kDualSwitch = 1.0;

RenormalizedSeries renormalized_series(double beta_tilde, const SeriesControl& ctl);

struct ThermalPoint {
  double T = 0.0;           // coordinate temperature
  double T_p = 0.0;         // proper temperature T / sqrt(g00(0))
  double beta_tilde = 0.0;  // 1 / (2 T_p L_p)

  static ThermalPoint from_coordinate(double T, double g00_origin, double L_p);
  static ThermalPoint from_proper(double T_p, double g00_origin, double L_p);
  /// From the figure axis 1/bt = 2 T_p L_p.
  static ThermalPoint from_reduced(double inverse_beta_tilde, double g00_origin, double L_p);
};

/// Unrenormalized correction including its standalone zeta(3) term:
///   sqrt(-g) S_p/(32 pi L_p^3) [ zeta(3)/bt^3 - B(bt) ].
double thermal_free_energy_raw(const MetricModel& model, const ProperGeometry& geom,
                               const ThermalPoint& point, const SeriesControl& ctl);

/// Proper renormalized correction
///   dF_p = -S_p/(32 pi L_p^3) [ B(bt) - pi^3/(45 bt^4) ].
double thermal_free_energy_renormalized(double beta_tilde, const ProperGeometry& geom,
                                        const SeriesControl& ctl);

/// Large-L_p expansion of the raw correction divided by sqrt(-g).
struct AsymptoticTerms {
  double term_T4 = 0.0;     // -V_p pi^2 T_p^4 / 90
  double term_T3 = 0.0;     //  S_p zeta(3) T_p^3 / (4 pi)
  double term_const = 0.0;  // -pi^2 S_p / (720 L_p^3)
};
AsymptoticTerms asymptotic_expansion(const ProperGeometry& geom, double T_p);

/// -pi^2 V_p T_p^4 / 90.
double blackbody_free_energy(double T_p, double V_p);

/// Flat-space proper corrections at fixed volume. Entropy is
/// dS_p = -d(dF_p)/dT_p, so it is non-negative where dF_p decreases.
struct ProperCorrections {
  double dF_p = 0.0;
  double dU_p = 0.0;   // -T_p^2 d(dF_p/T_p)/dT_p
  double dS_p = 0.0;   // -d(dF_p)/dT_p
  double dCv_p = 0.0;  // d(dU_p)/dT_p
};
ProperCorrections proper_corrections(const ProperGeometry& geom, const ThermalPoint& point,
                                     const SeriesControl& ctl);

/// Everything a temperature sweep needs that does not depend on temperature.
struct ThermalSetup {
  std::string metric_name;
  ProperGeometry geometry;
  double g00_origin = 1.0;
  double sqrt_neg_g = 1.0;  // sqrt(-det g) at z = 0
  EnergyReport energy;      // zero-temperature part, observer from the cavity
};
ThermalSetup make_thermal_setup(const MetricModel& model, const CavitySpec& cavity);

struct ThermoReport {
  ThermalPoint point;
  double sqrt_neg_g = 1.0;
  double E_z = 0.0;
  ProperCorrections proper;

  double F_total = 0.0;      // E_z + sqrt(-g) dF_p
  double U = 0.0;            // E_z + sqrt(-g) dU_p
  double S_entropy = 0.0;    // sqrt(-g) dS_p
  double C_V = 0.0;          // sqrt(-g) dCv_p
  double blackbody_F = 0.0;  // sqrt(-g) (-pi^2 V_p T_p^4 / 90)

  // Figure axes: L_p^3/S_p for energies, L_p^2/S_p for entropy and C_V.
  double F_scaled = 0.0;
  double U_scaled = 0.0;
  double S_scaled = 0.0;
  double Cv_scaled = 0.0;
};

ThermoReport thermodynamics(const ThermalSetup& setup, const ThermalPoint& point,
                            const SeriesControl& ctl);

struct DerivativeCheck {
  double step = 0.0;        // chosen relative step in T_p
  double S_fd = 0.0, S_analytic = 0.0;
  double Cv_fd = 0.0, Cv_analytic = 0.0;
  double S_rel_err = 0.0;
  double Cv_rel_err = 0.0;
};

/// Relative steps (times T_p) tried by check_derivatives.
inline constexpr double kDerivativeSteps[] = {3e-2, 1e-2, 3e-3, 1e-3};

/// Compares the analytic entropy with a central difference of dF_p and the
/// analytic heat capacity with a central difference of dU_p (both
/// Richardson-extrapolated; dU_p is differenced after removing its constant
/// high-temperature limit, which does not change the derivative), over the steps in kDerivativeSteps. Reports the
/// step with the smallest disagreement and throws ConsistencyError when even
/// that one exceeds `tolerance` in relative terms.
DerivativeCheck check_derivatives(const ProperGeometry& geom, const ThermalPoint& point,
                                  const SeriesControl& ctl, double tolerance = 1e-6);

}  // namespace casimir
