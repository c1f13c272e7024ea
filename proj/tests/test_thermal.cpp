#include <doctest.h>

#include <cmath>
#include <string>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/fixtures.hpp"
#include "casimir/thermal.hpp"

using namespace casimir;
using constants::pi;
using constants::zeta3;

namespace {

const std::vector<FixtureRecord>& golden() {
  static const auto records =
      read_fixture_file(std::string(CASIMIR_FIXTURE_DIR) + "/thermal_golden.txt");
  return records;
}

double golden_value(const std::string& name, const std::string& bt) {
  const auto r = find_fixture(golden(), name, "beta_tilde", bt);
  REQUIRE(r.has_value());
  return r->number("value");
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_SUITE("thermal") {
  const SeriesControl ctl;
  const ProperGeometry unit = ProperGeometry::from(1, 1);

  TEST_CASE("bracket against golden fixtures") {
    for (const char* bt : {"0.2", "1", "5", "10", "50"}) {
      CAPTURE(bt);
      const double b = std::stod(bt);
      CHECK(rel(bracket_sum(b, ctl), golden_value("thermal_bracket", bt)) < 1e-12);
      const double g = -thermal_free_energy_renormalized(b, unit, ctl) * 32 * pi;
      CHECK(rel(g, golden_value("thermal_renormalized", bt)) < 1e-9);
    }
    CHECK(rel(bracket_sum(0.05, ctl), golden_value("thermal_bracket", "0.05")) < 1e-12);
    const double g = -thermal_free_energy_renormalized(0.05, unit, ctl) * 32 * pi;
    CHECK(rel(g, golden_value("thermal_renormalized", "0.05")) < 1e-6);
  }

  TEST_CASE("large beta_tilde limit") {
    const double bt = 50;
    CHECK(rel(bracket_sum(bt, ctl), zeta3 / (bt * bt * bt)) < 1e-12);
    const BracketSeries s = bracket_series(bt, ctl);
    CHECK(s.explicit_terms == 0);
    // At bt = 10 the renormalized correction is the T^3 term plus the T^4 subtraction.
    const double T = 1.0 / 20.0;
    const double expected = -zeta3 * T * T * T / (4 * pi) + pi * pi * std::pow(T, 4) / 90.0;
    CHECK(rel(thermal_free_energy_renormalized(10, unit, ctl), expected) < 1e-12);
  }

  TEST_CASE("accuracy floor") {
    CHECK_THROWS_AS(bracket_sum(0.009, ctl), AccuracyError);
    CHECK_NOTHROW(bracket_sum(0.01, ctl));
    CHECK_THROWS_AS(ThermalPoint::from_proper(-1, 1, 1), InputError);
  }

  TEST_CASE("truncation") {
    SeriesControl small;
    small.max_terms = 5;
    CHECK_THROWS_AS(bracket_sum(0.1, small), ConvergenceError);
    CHECK_NOTHROW(bracket_sum(5, small));
    for (double bt : {0.1, 0.3, 1.0, 4.0}) {
      SeriesControl a, b;
      a.max_terms = 500;
      b.max_terms = 1000;
      const auto pa = proper_corrections(unit, ThermalPoint::from_reduced(1 / bt, 1, 1), a);
      const auto pb = proper_corrections(unit, ThermalPoint::from_reduced(1 / bt, 1, 1), b);
      CHECK(rel(pa.dF_p, pb.dF_p) < 1e-12);
      CHECK(rel(pa.dS_p, pb.dS_p) < 1e-12);
      CHECK(rel(pa.dCv_p, pb.dCv_p) < 1e-12);
    }
  }

  TEST_CASE("thermal points") {
    const auto p = ThermalPoint::from_coordinate(0.6, 1.44, 2.0);
    CHECK(p.T_p == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(p.beta_tilde * 2 * p.T_p * 2.0 == doctest::Approx(1.0).epsilon(1e-15));
    const auto q = ThermalPoint::from_reduced(0.8, 1.44, 2.0);
    CHECK(q.T_p == doctest::Approx(0.2).epsilon(1e-15));
    CHECK(q.T == doctest::Approx(0.24).epsilon(1e-15));
  }

  TEST_CASE("raw free energy factorizes over the determinant") {
    const auto rot = MetricModel::rotating_unit_det();
    const auto flat = MetricModel::minkowski();
    const auto other = MetricModel::constant({2, -1.5, -0.8, -1.2, 0.7});
    const auto geom = ProperGeometry::from(1.3, 0.9);
    const auto pt = ThermalPoint::from_proper(0.4, 1, geom.L_p);
    const double f = thermal_free_energy_raw(flat, geom, pt, ctl);
    CHECK(thermal_free_energy_raw(rot, geom, pt, ctl) == f);
    CHECK(thermal_free_energy_raw(other, geom, pt, ctl) ==
          doctest::Approx(std::sqrt(det_neg(other.evaluate(0))) * f).epsilon(1e-14));
  }

  TEST_CASE("asymptotic terms") {
    const auto a = asymptotic_expansion(unit, 1);
    CHECK(a.term_T4 == doctest::Approx(-pi * pi / 90).epsilon(1e-15));
    CHECK(a.term_T4 == blackbody_free_energy(1, 1));
    CHECK(blackbody_free_energy(2, 1) == doctest::Approx(16 * blackbody_free_energy(1, 1)).epsilon(1e-15));
    CHECK(blackbody_free_energy(1, 1) == doctest::Approx(-0.1096622711).epsilon(1e-9));
    const auto z = asymptotic_expansion(unit, 1e-9);
    CHECK(std::abs(z.term_T4) < 1e-30);
    CHECK(std::abs(z.term_T3) < 1e-26);
    CHECK(z.term_const == doctest::Approx(-pi * pi / 720).epsilon(1e-15));
  }

  TEST_CASE("analytic derivatives match finite differences") {
    const auto geom = ProperGeometry::from(1.4, 2.2);
    for (double x = 0.05; x <= 5.0; x *= 1.3) {
      CAPTURE(x);
      const auto pt = ThermalPoint::from_reduced(x, 1, geom.L_p);
      const DerivativeCheck c = check_derivatives(geom, pt, ctl);
      CHECK(c.S_rel_err < 1e-6);
      CHECK(c.Cv_rel_err < 1e-6);
    }
  }

  TEST_CASE("thermodynamic identity and signs") {
    const auto setup = make_thermal_setup(MetricModel::constant({2, -1, -1, -1, 1}), CavitySpec{});
    for (int i = 0; i < 100; ++i) {
      const double x = 0.05 + i * (5.0 - 0.05) / 99;
      const auto r = thermodynamics(setup, ThermalPoint::from_reduced(x, setup.g00_origin, setup.geometry.L_p), ctl);
      CHECK(rel(r.F_total + r.point.T_p * r.S_entropy, r.U) < 1e-8);
      CHECK(r.S_entropy >= 0);
      CHECK(r.proper.dF_p < 0);
    }
  }

  TEST_CASE("max terms from the environment") {
    SeriesControl base;
    base.max_terms = 42;
    unsetenv("CASIMIR_MAX_TERMS");
    CHECK(SeriesControl::from_env(base).max_terms == 42);
    setenv("CASIMIR_MAX_TERMS", "2000", 1);
    CHECK(SeriesControl::from_env(base).max_terms == 2000);
    setenv("CASIMIR_MAX_TERMS", "abc", 1);
    CHECK_THROWS_AS(SeriesControl::from_env(base), InputError);
    unsetenv("CASIMIR_MAX_TERMS");
  }
}
