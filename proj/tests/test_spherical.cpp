#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "cvrp/spherical.hpp"

using namespace cvrp;

namespace {

EirpPattern random_pattern(std::mt19937& rng, double res = 15.0, double scale = 10.0) {
  EirpPattern p = EirpPattern::zeros(AngularGrid::from_resolution(res), 10.0);
  std::uniform_real_distribution<double> value(0.0, scale);
  for (double& v : p.values) v = value(rng);
  return p;
}

}  // namespace

TEST_CASE("quadrature_sum") {
  SUBCASE("constant pattern over the full sphere approaches 4*pi") {
    const EirpPattern p = EirpPattern::isotropic(AngularGrid::from_resolution(5.0), 0.0);
    const double q = quadrature_sum(p, FovMask::cap(180.0));
    // discrete sin-sum differs from the analytic area by well under 0.1%
    CHECK(std::abs(q / (4.0 * kPi) - 1.0) < 1e-3);
    CHECK(q == doctest::Approx(cap_area(p.grid, FovMask::cap(180.0))).epsilon(1e-12));
  }

  SUBCASE("empty cap integrates to zero") {
    std::mt19937 rng(23);
    const EirpPattern p = random_pattern(rng);
    CHECK(quadrature_sum(p, FovMask::cap(0.0)) == 0.0);
  }

  SUBCASE("1 mW cap sum at 90 degrees on the half-degree grid") {
    EirpPattern p = EirpPattern::zeros(AngularGrid::from_resolution(0.5), 0.0);
    for (double& v : p.values) v = 1.0;
    const double q = quadrature_sum(p, FovMask::cap(90.0));

    // independent direct summation
    double direct = 0.0;
    for (int i = 1; i <= 180; ++i) {
      const double theta = 0.5 * i;
      direct += 720.0 * std::sin(theta * kPi / 180.0);
    }
    direct *= (0.5 * kPi / 180.0) * (0.5 * kPi / 180.0);
    CHECK(q == doctest::Approx(direct).epsilon(1e-12));
    // closed-form frozen value for the same sum
    CHECK(q == doctest::Approx(6.310561000582773).epsilon(1e-9));
  }

  SUBCASE("linearity") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
      const EirpPattern p1 = random_pattern(rng);
      EirpPattern p2 = random_pattern(rng);
      std::uniform_real_distribution<double> coef(0.1, 3.0);
      const double a = coef(rng), b = coef(rng);
      EirpPattern combo = p1;
      for (std::size_t k = 0; k < combo.values.size(); ++k) {
        combo.values[k] = a * p1.values[k] + b * p2.values[k];
      }
      std::uniform_real_distribution<double> fov(0.0, 180.0);
      const FovMask mask = FovMask::cap(fov(rng));
      const double lhs = quadrature_sum(combo, mask);
      const double rhs = a * quadrature_sum(p1, mask) + b * quadrature_sum(p2, mask);
      REQUIRE(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
  }

  SUBCASE("monotone in the cap angle for non-negative patterns") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
      const EirpPattern p = random_pattern(rng);
      double prev = 0.0;
      for (int f = 0; f <= 180; f += 5) {
        const double q = quadrature_sum(p, FovMask::cap(f));
        REQUIRE(q >= prev);
        prev = q;
      }
    }
  }

  SUBCASE("boundary ring is included") {
    EirpPattern p = EirpPattern::zeros(AngularGrid::from_resolution(5.0), 0.0);
    // put power only on the theta = 30 ring
    for (int j = 0; j < p.grid.cols(); ++j) p.at(6, j) = 1.0;
    CHECK(quadrature_sum(p, FovMask::cap(30.0)) > 0.0);
    CHECK(quadrature_sum(p, FovMask::cap(25.0)) == 0.0);
  }
}

TEST_CASE("bilinear_sample") {
  std::mt19937 rng(37);
  const EirpPattern p = random_pattern(rng, 15.0);

  SUBCASE("grid nodes return their own value") {
    for (int i = 0; i < p.grid.rows(); ++i) {
      for (int j = 0; j < p.grid.cols(); ++j) {
        REQUIRE(bilinear_sample(p, {p.grid.theta_deg(i), p.grid.phi_deg(j)}) ==
                doctest::Approx(p.at(i, j)).epsilon(1e-15));
      }
    }
  }

  SUBCASE("constants are preserved everywhere") {
    const EirpPattern c = EirpPattern::isotropic(AngularGrid::from_resolution(5.0), 15.0);
    std::uniform_real_distribution<double> th(0.0, 180.0), ph(0.0, 360.0);
    const double expect = dbm_to_mw(15.0);
    for (int trial = 0; trial < 500; ++trial) {
      REQUIRE(bilinear_sample(c, {th(rng), ph(rng)}) ==
              doctest::Approx(expect).epsilon(1e-12));
    }
  }

  SUBCASE("midpoint between phi neighbors is their mean") {
    const double theta = p.grid.theta_deg(3);
    for (int j = 0; j < p.grid.cols(); ++j) {
      const double mid = p.grid.phi_deg(j) + p.grid.dphi_deg / 2.0;
      const double expect = 0.5 * (p.at(3, j) + p.at(3, (j + 1) % p.grid.cols()));
      REQUIRE(bilinear_sample(p, {theta, mid}) == doctest::Approx(expect).epsilon(1e-12));
    }
  }

  SUBCASE("phi wraps across the seam") {
    const double theta = p.grid.theta_deg(4);
    const double just_before = 360.0 - p.grid.dphi_deg / 2.0;
    const double expect = 0.5 * (p.at(4, p.grid.cols() - 1) + p.at(4, 0));
    CHECK(bilinear_sample(p, {theta, just_before}) == doctest::Approx(expect).epsilon(1e-12));
  }

  SUBCASE("convexity: samples stay inside the source range") {
    std::uniform_real_distribution<double> th(0.0, 180.0), ph(0.0, 360.0);
    const double lo = *std::min_element(p.values.begin(), p.values.end());
    const double hi = *std::max_element(p.values.begin(), p.values.end());
    for (int trial = 0; trial < 2000; ++trial) {
      const double v = bilinear_sample(p, {th(rng), ph(rng)});
      REQUIRE(v >= lo - 1e-12 * hi);
      REQUIRE(v <= hi + 1e-12 * hi);
    }
  }
}

TEST_CASE("rotate_pattern_postproc") {
  std::mt19937 rng(41);

  SUBCASE("zero angle is the identity") {
    const EirpPattern p = random_pattern(rng, 10.0);
    const EirpPattern r = rotate_pattern_postproc(p, {Axis::Y, 0.0});
    for (int i = 1; i < p.grid.n_theta; ++i) {
      for (int j = 0; j < p.grid.cols(); ++j) {
        REQUIRE(r.at(i, j) == doctest::Approx(p.at(i, j)).epsilon(1e-15));
      }
    }
  }

  SUBCASE("constants are invariant under any rotation") {
    const EirpPattern c = EirpPattern::isotropic(AngularGrid::from_resolution(7.5), 15.0);
    const double expect = dbm_to_mw(15.0);
    for (const double ang : {-133.0, -45.0, 12.5, 90.0}) {
      const EirpPattern r = rotate_pattern_postproc(c, {Axis::Y, ang});
      for (const double v : r.values) REQUIRE(v == doctest::Approx(expect).epsilon(1e-12));
    }
  }

  SUBCASE("grid and trp metadata carry over; pole rows stay constant") {
    const EirpPattern p = random_pattern(rng, 10.0);
    const EirpPattern r = rotate_pattern_postproc(p, {Axis::Y, -37.0});
    CHECK(r.grid == p.grid);
    CHECK(r.trp_dbm == p.trp_dbm);
    for (int j = 1; j < r.grid.cols(); ++j) {
      CHECK(r.at(0, j) == r.at(0, 0));
      CHECK(r.at(r.grid.n_theta, j) == r.at(r.grid.n_theta, 0));
    }
  }

  SUBCASE("resampling is bounded by the source range") {
    for (int trial = 0; trial < 20; ++trial) {
      const EirpPattern p = random_pattern(rng, 15.0);
      std::uniform_real_distribution<double> angle(-180.0, 180.0);
      const EirpPattern r = rotate_pattern_postproc(p, {Axis::Y, angle(rng)});
      const double lo = *std::min_element(p.values.begin(), p.values.end());
      const double hi = *std::max_element(p.values.begin(), p.values.end());
      for (const double v : r.values) {
        REQUIRE(v >= lo - 1e-12 * hi);
        REQUIRE(v <= hi + 1e-12 * hi);
      }
    }
  }

  SUBCASE("a y rotation moves the pole onto the tilted source direction") {
    // single bright ring sample: after rotating by -45 the pole reads the
    // source at theta=45 on the phi=0 meridian
    EirpPattern p = EirpPattern::zeros(AngularGrid::from_resolution(5.0), 0.0);
    p.at(9, 0) = 7.0;  // theta = 45, phi = 0
    const EirpPattern r = rotate_pattern_postproc(p, {Axis::Y, -45.0});
    CHECK(r.at(0, 0) == doctest::Approx(7.0).epsilon(1e-12));
  }
}
