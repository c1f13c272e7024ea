// oracle.hpp
//
// Brute-force reference computations. None of this shares series or
// quadrature code with the main path: the thermal oracle runs in MPFR
// arithmetic on a different rearrangement of the bracket, the cutoff oracle
// sums the regulated mode spectrum directly, and the mode checks rebuild the
// metric inverse with a generic 4x4 solver.
#pragma once

#include <string>
#include <vector>

#include "casimir/metric.hpp"
#include "casimir/modes.hpp"
#include "casimir/sweep.hpp"

namespace casimir::oracle {

// ---------------------------------------------------------------------------
// Exponential-cutoff mode sum (flat space, Dirichlet plates).
//
// Per unit area, with F(k) = int_0^inf q sqrt(q^2+k^2) e^{-lambda sqrt(q^2+k^2)} dq
//                          = e^{-lambda k} (k^2/lambda + 2k/lambda^2 + 2/lambda^3),
//   E(lambda)/S = (1/4 pi) [ F(0)/2 + sum_{n>=1} F(n pi/L) - (L/pi) int_0^inf F ]
// where int_0^inf F = 6/lambda^4. The F(0)/2 term removes the L-independent
// plate self-energy so the difference stays bounded as lambda -> 0.
// ---------------------------------------------------------------------------

struct CutoffPoint {
  double lambda = 0.0;
  double mode_sum = 0.0;    // (1/4 pi) [F(0)/2 + sum F(n pi/L)]
  double continuum = 0.0;   // (1/4 pi) (L/pi) 6/lambda^4
  double energy_per_area = 0.0;
  int terms = 0;
};

struct CutoffSweep {
  double L = 1.0;
  std::vector<CutoffPoint> points;  // lambda strictly decreasing
  int degree = 4;
  std::vector<double> coefficients;  // fit c0 + c1 lambda + ...
  double extrapolated = 0.0;         // c0
  double fit_residual = 0.0;         // max |fit - data| / |c0|
  bool residual_ok = true;           // fit_residual <= kCutoffResidualThreshold
};

inline constexpr double kCutoffResidualThreshold = 1e-4;

/// Default lambda grid for plate separation L: L * {0.1, 0.09, ..., 0.03}.
std::vector<double> default_lambdas(double L);

/// Requires L > 0, >= 6 lambdas in (0, L/10], strictly decreasing.
CutoffSweep cutoff_casimir_energy_per_area(double L, const std::vector<double>& lambdas,
                                           Execution exec = Execution::parallel);

// ---------------------------------------------------------------------------
// High-precision thermal bracket.
//
// B(bt) = zeta(3)/bt^3 + sum_m [ 2/((e^{2u}-1)(m bt)^3) + pi/((m bt)^2 sinh^2 u) ],
// u = pi m bt, evaluated in MPFR at `digits` decimal digits. The summand
// decays like e^{-2u}; summation stops once it drops below 10^-(digits+5)
// relative, and fails if that needs more than max_terms terms.
// ---------------------------------------------------------------------------

struct HighPrecValue {
  std::string beta_tilde;      // decimal input as given
  int digits = 50;
  int max_terms = 0;
  int terms_used = 0;
  std::string bracket;          // B, `digits` significant digits
  std::string renormalized;     // B - pi^3/(45 bt^4)
  std::string bound;            // bound on the omitted remainder
  double bracket_double = 0.0;
  double renormalized_double = 0.0;
};

HighPrecValue highprec_thermal_bracket(const std::string& beta_tilde, int digits, int max_terms);

/// Leading large-bt form zeta(3)/bt^3 + sum_{m<=terms} e^{-2u} (2/(m bt)^3 + 4 pi/(m bt)^2),
/// valid up to relative O(e^{-2 pi bt}); returned as a decimal string.
std::string highprec_large_beta_form(const std::string& beta_tilde, int digits, int terms);

/// |a - b| / |b| for two decimal strings, computed in MPFR at `digits`.
double highprec_relative_difference(const std::string& a, const std::string& b, int digits);

/// Proper corrections for S_p = L_p = 1 (scaled figure quantities) with the
/// T_p-derivatives taken by MPFR central differences of B - pi^3/(45 bt^4).
struct HighPrecCorrections {
  double F_scaled = 0.0;
  double U_scaled = 0.0;
  double S_scaled = 0.0;
  double Cv_scaled = 0.0;
};
HighPrecCorrections highprec_scaled_corrections(double inverse_beta_tilde, int digits = 40);

// ---------------------------------------------------------------------------
// Mode checks for constant-component metrics.
// ---------------------------------------------------------------------------

/// Applies the scalar wave operator g^{mu nu} d_mu d_nu to the mode ansatz
/// (written as two plane waves) using a numerically inverted 4x4 metric, at
/// `samples` pseudo-random interior points. Returns the maximum residual
/// relative to the largest individual operator term.
double mode_pde_residual(const MetricComponents& c, double L, const ModeSpec& m, int samples = 64);

/// Scalar product of two modes over one transverse box period and the full
/// gap, by Gauss-Legendre quadrature with finite-difference derivatives.
/// Result is normalized so that box-normalized unit norm gives 1.
double mode_scalar_product(const MetricComponents& c, double L, const ModeSpec& a, const ModeSpec& b);

/// |(phi, phi) - 1| for the normalization N^2 from the modes module.
double mode_norm_check(const MetricComponents& c, double L, const ModeSpec& m);

// ---------------------------------------------------------------------------
// Black-body free energy density T int d^3k/(2 pi)^3 ln(1 - e^{-k/T}),
// by nested quadrature over spherical coordinates.
// ---------------------------------------------------------------------------
double blackbody_free_energy_density_quadrature(double T);

}  // namespace casimir::oracle
