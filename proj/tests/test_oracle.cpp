#include <doctest.h>

#include <cmath>
#include <sstream>

#include "casimir/constants.hpp"
#include "casimir/errors.hpp"
#include "casimir/fixtures.hpp"
#include "casimir/oracle.hpp"
#include "casimir/thermal.hpp"

using namespace casimir;
using constants::pi;

TEST_SUITE("oracle") {
  TEST_CASE("cutoff sum reproduces the flat Casimir energy") {
    for (double L : {0.5, 1.0, 2.0}) {
      CAPTURE(L);
      const auto s = oracle::cutoff_casimir_energy_per_area(L, oracle::default_lambdas(L));
      const double target = -pi * pi / (1440 * L * L * L);
      CHECK(std::abs(s.extrapolated / target - 1) < 1e-3);
      CHECK(s.residual_ok);
      CHECK(s.points.size() == 8);
    }
    const auto one = oracle::cutoff_casimir_energy_per_area(1, oracle::default_lambdas(1));
    const auto two = oracle::cutoff_casimir_energy_per_area(2, oracle::default_lambdas(2));
    CHECK(two.extrapolated / one.extrapolated == doctest::Approx(0.125).epsilon(1e-6));
  }

  TEST_CASE("cutoff pieces diverge while their difference stays bounded") {
    const auto s = oracle::cutoff_casimir_energy_per_area(1, {0.1, 0.05, 0.02, 0.01, 0.005, 0.002});
    for (std::size_t i = 1; i < s.points.size(); ++i) {
      const auto& a = s.points[i - 1];
      const auto& b = s.points[i];
      const double ratio = a.lambda / b.lambda;
      CHECK(b.mode_sum > 0.9 * std::pow(ratio, 4) * a.mode_sum);
      CHECK(b.continuum > 0.9 * std::pow(ratio, 4) * a.continuum);
      CHECK(std::abs(b.energy_per_area) < 1e-2);
    }
  }

  TEST_CASE("cutoff input validation") {
    CHECK_THROWS_AS(oracle::cutoff_casimir_energy_per_area(1, {0.1, 0.09}), InputError);
    CHECK_THROWS_AS(oracle::cutoff_casimir_energy_per_area(1, {0.2, 0.09, 0.08, 0.07, 0.06, 0.05}), InputError);
    CHECK_THROWS_AS(oracle::cutoff_casimir_energy_per_area(1, {0.05, 0.09, 0.08, 0.07, 0.06, 0.04}), InputError);
  }

  TEST_CASE("serial and parallel cutoff sweeps agree exactly") {
    const auto a = oracle::cutoff_casimir_energy_per_area(1, oracle::default_lambdas(1), Execution::serial);
    const auto b = oracle::cutoff_casimir_energy_per_area(1, oracle::default_lambdas(1), Execution::parallel);
    CHECK(a.extrapolated == b.extrapolated);
  }

  TEST_CASE("high-precision bracket") {
    const auto v = oracle::highprec_thermal_bracket("1", 50, 1000000);
    CHECK(std::abs(bracket_sum(1.0, SeriesControl{}) / v.bracket_double - 1) < 1e-12);
    CHECK(v.bracket.size() > 50);

    const auto big = oracle::highprec_thermal_bracket("10", 50, 1000000);
    const std::string closed = oracle::highprec_large_beta_form("10", 50, 5);
    CHECK(oracle::highprec_relative_difference(big.bracket, closed, 50) < 1e-30);

    // Below the double-precision floor the oracle still answers.
    const auto tiny = oracle::highprec_thermal_bracket("0.005", 50, 1000000);
    CHECK(tiny.renormalized_double > 0);
    CHECK_THROWS_AS(bracket_sum(0.005, SeriesControl{}), AccuracyError);
  }

  TEST_CASE("high-precision input checks") {
    CHECK_THROWS_AS(oracle::highprec_thermal_bracket("1", 20, 1000000), InputError);
    CHECK_THROWS_AS(oracle::highprec_thermal_bracket("1", 50, 10), InputError);
    CHECK_THROWS_AS(oracle::highprec_thermal_bracket("0.00001", 30, 100000), ConvergenceError);
  }

  TEST_CASE("golden fixture file is reproducible") {
    const auto stored = read_fixture_file(std::string(CASIMIR_FIXTURE_DIR) + "/thermal_golden.txt");
    REQUIRE(stored.size() == 12);
    for (const auto& r : stored) {
      const auto fresh = oracle::highprec_thermal_bracket(r.at("beta_tilde"), 50, 1000000);
      const std::string& expected = r.name == "thermal_bracket" ? fresh.bracket : fresh.renormalized;
      CHECK(r.at("value") == expected);
    }
  }

  TEST_CASE("scaled corrections from differentiated high-precision sums") {
    const SeriesControl ctl;
    for (double x : {0.2, 0.628, 1.0, 3.0}) {
      CAPTURE(x);
      const auto hp = oracle::highprec_scaled_corrections(x);
      const auto p = proper_corrections(ProperGeometry::from(1, 1), ThermalPoint::from_reduced(x, 1, 1), ctl);
      CHECK(std::abs(p.dF_p / hp.F_scaled - 1) < 1e-9);
      CHECK(std::abs(p.dS_p / hp.S_scaled - 1) < 1e-9);
      CHECK(std::abs(p.dU_p / hp.U_scaled - 1) < 1e-9);
      CHECK(std::abs(p.dCv_p / hp.Cv_scaled - 1) < 1e-9);
    }
  }

  TEST_CASE("black-body quadrature") {
    for (double T : {0.3, 1.0, 2.5}) {
      const double q = oracle::blackbody_free_energy_density_quadrature(T);
      CHECK(std::abs(q / blackbody_free_energy(T, 1) - 1) < 1e-8);
    }
  }

  TEST_CASE("fixture records round trip") {
    FixtureRecord r{"x", {{"a", "1"}, {"value", "-2.5e-3"}}};
    const std::string line = format_record(r);
    CHECK(line == "x, a=1, value=-2.5e-3");
    const auto back = parse_record(line);
    CHECK(back.name == "x");
    CHECK(back.number("value") == -2.5e-3);
    CHECK_FALSE(back.get("missing").has_value());
    std::stringstream ss;
    write_fixtures(ss, {r, r});
    CHECK(read_fixtures(ss).size() == 2);
    CHECK_THROWS(parse_record("x, novalue"));
  }
}
