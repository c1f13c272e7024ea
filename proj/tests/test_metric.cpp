#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "casimir/errors.hpp"
#include "casimir/metric.hpp"

using namespace casimir;

namespace {

Eigen::Matrix4d full(const MetricComponents& c) {
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  g(0, 0) = c.g00;
  g(1, 1) = c.g11;
  g(2, 2) = c.g22;
  g(3, 3) = c.g33;
  g(0, 3) = g(3, 0) = c.g03;
  return g;
}

MetricComponents random_valid(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(0.2, 3.0), cross(-2.0, 2.0);
  MetricComponents c{pos(rng), -pos(rng), -pos(rng), -pos(rng), cross(rng)};
  return c;
}

}  // namespace

TEST_SUITE("metric") {
  TEST_CASE("catalog components") {
    const auto flat = components_at(MetricModel::minkowski(), 0.0);
    CHECK(flat.g00 == 1.0);
    CHECK(flat.g11 == -1.0);
    CHECK(flat.g22 == -1.0);
    CHECK(flat.g33 == -1.0);
    CHECK(flat.g03 == 0.0);

    const auto c = components_at(MetricModel::constant({2, -1, -1, -1, 1}), 0.3);
    CHECK(c.g00 == 2.0);
    CHECK(c.g03 == 1.0);

    CHECK(det_neg(components_at(MetricModel::rotating_unit_det(), 0.0)) == 1.0);
    CHECK(det_neg(components_at(MetricModel::rotating_unit_det(0.4), 0.0)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(components_at(MetricModel::rotating_unit_det(), 0.0).g03 != 0.0);
  }

  TEST_CASE("inverse of the constant stationary example") {
    const MetricComponents c{2, -1, -1, -1, 1};
    CHECK(tz_discriminant(c) == 3.0);
    const auto inv = inverse_components(c);
    CHECK(inv.g00 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(inv.g33 == doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
    CHECK(inv.g03 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(inv.g11 == -1.0);
    CHECK(det_neg(c) == 3.0);
    CHECK(dragged_g00(c) == 3.0);
  }

  TEST_CASE("inverse and determinant match a generic 4x4 solver") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
      MetricComponents c = random_valid(rng);
      if (c.g00 - c.g03 * c.g03 / c.g33 <= 0) continue;
      const Eigen::Matrix4d g = full(c);
      const Eigen::Matrix4d ginv = g.inverse();
      const auto inv = inverse_components(c);
      CHECK(inv.g00 == doctest::Approx(ginv(0, 0)).epsilon(1e-12));
      CHECK(inv.g11 == doctest::Approx(ginv(1, 1)).epsilon(1e-12));
      CHECK(inv.g22 == doctest::Approx(ginv(2, 2)).epsilon(1e-12));
      CHECK(inv.g33 == doctest::Approx(ginv(3, 3)).epsilon(1e-12));
      CHECK(inv.g03 == doctest::Approx(ginv(0, 3)).epsilon(1e-12));
      CHECK(det_neg(c) == doctest::Approx(-g.determinant()).epsilon(1e-12));
      CHECK(dragged_g00(c) ==
            doctest::Approx((c.g03 * c.g03 - c.g00 * c.g33) / (-c.g33)).epsilon(1e-12));

      // t-z block contraction
      Eigen::Matrix2d cov, con;
      cov << c.g00, c.g03, c.g03, c.g33;
      con << inv.g00, inv.g03, inv.g03, inv.g33;
      CHECK((cov * con - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() < 1e-12);
    }
  }

  TEST_CASE("static reduction") {
    const MetricComponents c{1.3, -0.7, -2.0, -0.4, 0.0};
    const auto inv = inverse_components(c);
    CHECK(inv.g03 == 0.0);
    CHECK(dragged_g00(c) == c.g00);
    CHECK(tz_discriminant(c) == -c.g00 * c.g33);
  }

  TEST_CASE("signature violations name the inequality") {
    const MetricModel bad("bad", Polynomial({1.0, -2.0}), Polynomial::constant(-1),
                          Polynomial::constant(-1), Polynomial::constant(-1),
                          Polynomial::constant(0), ZDomain{-1, 1});
    CHECK_NOTHROW(components_at(bad, 0.0));
    try {
      components_at(bad, 0.75);
      FAIL("expected InvalidMetricError");
    } catch (const InvalidMetricError& e) {
      CHECK(std::string(e.what()).find("g00 > 0") != std::string::npos);
    }
    const ValidationReport r = validate(bad);
    CHECK_FALSE(r.valid);
    REQUIRE(r.failures.size() == 1);

    MetricComponents c{1, -1, -1, 0, 2};
    CHECK_THROWS_AS(check_signature(c), InvalidMetricError);
    c = {1, 1, -1, -1, 0};
    CHECK_THROWS_AS(check_signature(c), InvalidMetricError);
  }

  TEST_CASE("domain handling") {
    const auto m = MetricModel::minkowski(ZDomain{-1, 1});
    CHECK_THROWS_AS(components_at(m, 1.5), OutOfDomainError);
    CHECK_THROWS_AS(MetricModel::minkowski(ZDomain{1, 2}), InputError);
    CHECK_THROWS_AS(MetricModel::static_conformal(0.6), InvalidMetricError);
  }

  TEST_CASE("validation report") {
    const ValidationReport r = validate(MetricModel::constant({2, -1, -1, -1, 1}));
    CHECK(r.valid);
    CHECK(r.det_neg_origin == 3.0);
    CHECK(r.dragged_g00_origin == 3.0);
    CHECK(r.dragged_g00_min == 3.0);
    CHECK(r.dragged_g00_max == 3.0);
  }

  TEST_CASE("polynomial evaluation") {
    const Polynomial p({1.0, 0.0, 2.0, 0.0, 0.0});
    CHECK(p.coefficients().size() == 3);
    CHECK(p(2.0) == 9.0);
    CHECK(Polynomial::constant(4.0).is_constant());
  }
}
