#include <doctest.h>

#include <cmath>
#include <sstream>

#include "casimir/config.hpp"

using namespace casimir;

namespace {

RunConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in, "test.cfg");
}

std::string error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

const char* kMinimal = "[metric]\nmodel = minkowski\n[cavity]\nL = 1\n";

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("minimal config and defaults") {
    const RunConfig c = parse(kMinimal);
    CHECK(c.model.name() == "minkowski");
    CHECK(c.cavity.L == 1.0);
    CHECK(c.cavity.x1 == 1.0);
    CHECK_FALSE(c.thermal.present);
    CHECK(c.series.max_terms == 500);
    CHECK(c.output.precision == 12);
  }

  TEST_CASE("full config with comments") {
    const RunConfig c = parse(R"(# leading comment
[metric]
model = polynomial   # trailing comment
g00 = 1, 0, 1
g11 = -1
g22 = -1
g33 = -1, -0.1
z_min = -2
z_max = 2

[cavity]
L = 0.5
x0 = -1
x1 = 1
observer_z = 1

[thermal]
mode = coordinate
from = 0.1
to = 2
points = 7
spacing = log

[series]
max_terms = 800
tolerance = 1e-15

[output]
csv = out.csv
precision = 9
)");
    CHECK(c.model.evaluate(1.0).g00 == 2.0);
    CHECK(c.model.evaluate(0.0).g03 == 0.0);
    CHECK(c.model.domain().hi == 2.0);
    CHECK(c.cavity.L == 0.5);
    CHECK(c.cavity.observer_z == 1.0);
    CHECK(c.thermal.present);
    CHECK(c.thermal.mode == TemperatureMode::coordinate);
    CHECK(c.thermal.points == 7);
    CHECK(c.thermal.log);
    CHECK(c.series.max_terms == 800);
    CHECK(c.output.csv == "out.csv");
    CHECK(c.output.precision == 9);
  }

  TEST_CASE("catalog parameters") {
    CHECK(parse("[metric]\nmodel = static-conformal\nphi = 0.02\n[cavity]\nL = 1\n").model.evaluate(0).g00 ==
          doctest::Approx(1.04));
    const RunConfig r = parse("[metric]\nmodel = rotating-unit-det\n[cavity]\nL = 1\n");
    CHECK(det_neg(r.model.evaluate(0)) == 1.0);
    const RunConfig k = parse(
        "[metric]\nmodel = constant\ng00 = 2\ng11 = -1\ng22 = -1\ng33 = -1\ng03 = 1\n[cavity]\nL = 1\n");
    CHECK(k.model.evaluate(5).g03 == 1.0);
  }

  TEST_CASE("errors carry line numbers") {
    CHECK(error_of("[metric]\nmodel = minkowski\nfoo = 1\n[cavity]\nL = 1\n").find("test.cfg:3") == 0);
    CHECK(error_of("[metric]\nmodel = minkowski\n[cavity]\nL = abc\n").find("test.cfg:4") == 0);
    CHECK(error_of("[metric]\nmodel = minkowski\n[cavity]\nL = 1\nL = 2\n").find("test.cfg:5") == 0);
    CHECK(error_of("[metric]\nmodel = warp\n[cavity]\nL = 1\n").find("test.cfg:2") == 0);
    CHECK(error_of("[metrik]\n").find("unknown section") != std::string::npos);
    CHECK(error_of("model = minkowski\n").find("outside") != std::string::npos);
    CHECK(error_of("[metric]\nmodel = minkowski\n").find("[cavity]") != std::string::npos);
    CHECK(error_of(std::string(kMinimal) + "[thermal]\nfrom = 2\nto = 1\n").find("ordered") != std::string::npos);
    CHECK(error_of(std::string(kMinimal) + "[thermal]\nfrom = -1\nto = 1\n").find("> 0") != std::string::npos);
    CHECK(error_of(std::string(kMinimal) + "[output]\nprecision = 40\n").find("precision") != std::string::npos);
    CHECK(error_of("[metric]\nmodel = constant\ng00 = 1\n[cavity]\nL = 1\n").find("needs") != std::string::npos);
    CHECK_THROWS_AS(load_config("/nonexistent/file.cfg"), ConfigError);
  }

  TEST_CASE("temperature modes") {
    const ThermalSetup s = make_thermal_setup(MetricModel::static_conformal(0.1), CavitySpec{});
    const ThermalPoint c = make_point(TemperatureMode::coordinate, 0.3, s);
    CHECK(c.T == 0.3);
    CHECK(c.T_p == doctest::Approx(0.3 / std::sqrt(1.2)));
    const ThermalPoint r = make_point(TemperatureMode::reduced, 0.5, s);
    CHECK(r.beta_tilde == 2.0);
    const ThermalPoint p = make_point(TemperatureMode::proper, 0.25, s);
    CHECK(p.T_p == 0.25);
  }
}
