// oracle_highprec.cpp
//
// MPFR-backed evaluation of the thermal bracket. Precision is carried in
// decimal digits; every value is computed with 10 guard digits and rounded
// only when formatted.
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <sstream>

#include "casimir/errors.hpp"
#include "casimir/oracle.hpp"

namespace casimir::oracle {

namespace {

using mp = boost::multiprecision::mpfr_float;

constexpr int kGuardDigits = 10;

class ScopedPrecision {
public:
  explicit ScopedPrecision(int digits) : saved_(mp::default_precision()) {
    mp::default_precision(digits + kGuardDigits);
  }
  ~ScopedPrecision() { mp::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

private:
  unsigned saved_;
};

mp mp_pi() {
  mp r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

mp mp_zeta3() {
  mp r;
  mpfr_zeta_ui(r.backend().data(), 3, MPFR_RNDN);
  return r;
}

std::string to_string(const mp& x, int digits) {
  return x.str(digits, std::ios_base::scientific);
}

mp exact_from_double(double x) {
  // Exact for the magnitudes used here: glibc prints the binary value
  // digit-exactly and 60 digits cover a 53-bit mantissa above ~1e-7.
  std::ostringstream os;
  os.precision(60);
  os << std::scientific << x;
  return mp(os.str());
}

struct Bracket {
  mp value;
  mp bound;
  int terms = 0;
};

// zeta(3)/bt^3 + sum_m [2/((e^{2u}-1)(m bt)^3) + pi/((m bt)^2 sinh^2 u)]
Bracket bracket(const mp& bt, int digits, int max_terms) {
  const mp pi = mp_pi();
  const mp eps = pow(mp(10), -(digits + 5));
  const mp ratio = exp(-2 * pi * bt);

  Bracket out;
  mp correction = 0;
  const mp head = mp_zeta3() / (bt * bt * bt);
  for (int m = 1;; ++m) {
    if (m > max_terms) {
      std::ostringstream os;
      os << "high-precision bracket did not converge within " << max_terms
         << " terms; remainder bound " << to_string(out.bound, 6);
      throw ConvergenceError(os.str());
    }
    const mp mb = m * bt;
    const mp u = pi * mb;
    const mp sh = sinh(u);
    const mp term = 2 / (expm1(2 * u) * mb * mb * mb) + pi / (mb * mb * sh * sh);
    correction += term;
    out.terms = m;
    // Successive terms shrink at least by e^{-2 pi bt} once u is large;
    // a factor 2 covers the polynomial prefactors.
    out.bound = 2 * term * ratio / (1 - ratio);
    if (u > 1 && out.bound < eps * (head + correction)) break;
  }
  out.value = head + correction;
  return out;
}

mp renormalized(const mp& bt, const mp& b) {
  const mp pi = mp_pi();
  return b - pi * pi * pi / (45 * bt * bt * bt * bt);
}

}  // namespace

HighPrecValue highprec_thermal_bracket(const std::string& beta_tilde, int digits, int max_terms) {
  if (digits < 30) throw InputError("high-precision oracle needs digits >= 30");
  if (max_terms < 100000) throw InputError("high-precision oracle needs max_terms >= 1e5");
  // Subtracting pi^3/(45 bt^4) from B cancels about -3 log10(bt) leading
  // digits for small bt; carry that many more so the renormalized value
  // keeps `digits` as well.
  const double bt_estimate = std::stod(beta_tilde);
  if (!(bt_estimate > 0.0)) throw InputError("beta_tilde must be > 0");
  const int extra = bt_estimate < 1.0 ? static_cast<int>(std::ceil(-3.0 * std::log10(bt_estimate))) + 2 : 0;
  ScopedPrecision guard(digits + extra);
  const mp bt(beta_tilde);
  const Bracket b = bracket(bt, digits + extra, max_terms);
  const mp g = renormalized(bt, b.value);

  HighPrecValue out;
  out.beta_tilde = beta_tilde;
  out.digits = digits;
  out.max_terms = max_terms;
  out.terms_used = b.terms;
  out.bracket = to_string(b.value, digits);
  out.renormalized = to_string(g, digits);
  out.bound = to_string(b.bound, 6);
  out.bracket_double = b.value.convert_to<double>();
  out.renormalized_double = g.convert_to<double>();
  return out;
}

std::string highprec_large_beta_form(const std::string& beta_tilde, int digits, int terms) {
  ScopedPrecision guard(digits);
  const mp pi = mp_pi();
  const mp bt(beta_tilde);
  mp sum = mp_zeta3() / (bt * bt * bt);
  for (int m = 1; m <= terms; ++m) {
    const mp mb = m * bt;
    sum += exp(-2 * pi * mb) * (2 / (mb * mb * mb) + 4 * pi / (mb * mb));
  }
  return to_string(sum, digits);
}

double highprec_relative_difference(const std::string& a, const std::string& b, int digits) {
  ScopedPrecision guard(digits);
  const mp x(a), y(b);
  return (abs(x - y) / abs(y)).convert_to<double>();
}

HighPrecCorrections highprec_scaled_corrections(double inverse_beta_tilde, int digits) {
  if (!(inverse_beta_tilde > 0.0)) throw InputError("1/beta_tilde must be > 0");
  ScopedPrecision guard(digits);
  const mp pi = mp_pi();
  // S_p = L_p = 1: T_p = x/2, bt = 1/(2 T_p), dF_p = -G(bt)/(32 pi).
  auto dF = [&](const mp& T) {
    const mp bt = 1 / (2 * T);
    return -renormalized(bt, bracket(bt, digits, 100'000'000).value) / (32 * pi);
  };
  const mp T = exact_from_double(inverse_beta_tilde) / 2;
  const mp h = T * pow(mp(10), -(digits / 4));
  const mp f0 = dF(T);
  const mp fp = dF(T + h), fm = dF(T - h);
  const mp fp2 = dF(T + 2 * h), fm2 = dF(T - 2 * h);
  // Fourth-order central stencils.
  const mp d1 = (fm2 - 8 * fm + 8 * fp - fp2) / (12 * h);
  const mp d2 = (-fm2 + 16 * fm - 30 * f0 + 16 * fp - fp2) / (12 * h * h);

  HighPrecCorrections out;
  out.F_scaled = f0.convert_to<double>();
  out.S_scaled = (-d1).convert_to<double>();
  out.U_scaled = (f0 - T * d1).convert_to<double>();
  out.Cv_scaled = (-T * d2).convert_to<double>();
  return out;
}

}  // namespace casimir::oracle
