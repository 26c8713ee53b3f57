#include <doctest.h>

#include <cmath>
#include <random>

#include "cvrp/pattern.hpp"
#include "cvrp/uncertainty.hpp"

using namespace cvrp;

namespace {

EirpPattern broadside(double res_deg) {
  return synthesize_eirp(build_ura(), uniform_weights(16), ElementPattern::cosine(),
                         AngularGrid::from_resolution(res_deg), 15.0);
}

// Closed-form ripple standard deviation of the masked average, written
// directly from the error model: std = (dphi*dtheta/A) * sigma_lin *
// sqrt(sum_masked (v*sin(theta))^2), with the pole entry degenerating to
// sigma_lin * v(0,0).
std::vector<double> ripple_std_oracle(const EirpPattern& p, double sigma_db) {
  const double sig = 23.0 * sigma_db / 100.0;
  const double dth = p.grid.dtheta_rad(), dph = p.grid.dphi_rad();
  std::vector<double> out;
  for (int fov = 0; fov <= 180; fov += 10) {
    if (fov == 0) {
      out.push_back(sig * p.at(0, 0));
      continue;
    }
    const int limit = std::min(p.grid.n_theta - 1,
                               static_cast<int>(std::floor(fov / p.grid.dtheta_deg + 1e-9)));
    double ss = 0.0, area = 0.0;
    for (int i = 1; i <= limit; ++i) {
      const double s = std::sin(deg2rad(p.grid.theta_deg(i)));
      for (int j = 0; j < p.grid.cols(); ++j) {
        const double w = p.at(i, j) * s;
        ss += w * w;
        area += s;
      }
    }
    out.push_back(dph * dth / (dph * dth * area) * sig * std::sqrt(ss));
  }
  return out;
}

}  // namespace

TEST_CASE("sigma_lin") {
  CHECK(sigma_lin(1.0) == doctest::Approx(0.23).epsilon(1e-15));
  CHECK(sigma_lin(2.0) == doctest::Approx(0.46).epsilon(1e-15));
  CHECK(sigma_lin(0.0) == 0.0);
  CHECK_THROWS_AS(sigma_lin(-0.5), std::invalid_argument);
}

TEST_CASE("perturb_pattern") {
  const EirpPattern p = broadside(5.0);

  SUBCASE("zero severity leaves the pattern untouched") {
    const EirpPattern q = perturb_pattern(p, {0.0, 1000, 99}, 3);
    REQUIRE(q.values == p.values);
  }

  SUBCASE("deterministic per (seed, draw)") {
    const EirpPattern a = perturb_pattern(p, {1.0, 1000, 42}, 7);
    const EirpPattern b = perturb_pattern(p, {1.0, 1000, 42}, 7);
    REQUIRE(a.values == b.values);
    const EirpPattern c = perturb_pattern(p, {1.0, 1000, 42}, 8);
    CHECK(a.values != c.values);
    const EirpPattern d = perturb_pattern(p, {1.0, 1000, 43}, 7);
    CHECK(a.values != d.values);
  }

  SUBCASE("relative distortion is unbiased") {
    const EirpPattern small = broadside(15.0);
    const RippleSpec spec{1.0, 1000, 4242};
    const int draws = 1000;
    double acc = 0.0;
    std::size_t n = 0;
    for (int d = 0; d < draws; ++d) {
      const EirpPattern q = perturb_pattern(small, spec, d);
      for (std::size_t k = 0; k < q.values.size(); ++k) {
        if (small.values[k] > 0.0) {
          acc += q.values[k] / small.values[k] - 1.0;
          ++n;
        }
      }
    }
    const double bound = 3.0 * spec.sigma_lin() / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(acc / static_cast<double>(n)) < bound);
  }
}

TEST_CASE("monte_carlo_cvrp") {
  const EirpPattern p = broadside(5.0);

  SUBCASE("zero severity gives a zero-width interval at the deterministic value") {
    const CvrpCI ci = monte_carlo_cvrp(p, {0.0, 10, 5});
    const CvrpTrace tr = cvrp_trace(p);
    for (std::size_t k = 0; k < ci.theta_fov_deg.size(); ++k) {
      REQUIRE(ci.sigma_hat_mw[k] == 0.0);
      REQUIRE(ci.mean_mw[k] == doctest::Approx(tr.cvrp_mw[k]).epsilon(1e-15));
      REQUIRE(ci.lower_mw[k] == ci.upper_mw[k]);
    }
  }

  SUBCASE("equals the explicit perturb-then-trace loop") {
    const RippleSpec spec{1.0, 40, 77};
    const CvrpCI fast = monte_carlo_cvrp(p, spec, 3);
    // brute force with the same stats conventions
    std::vector<std::vector<double>> draws;
    for (int d = 0; d < spec.draws; ++d) {
      draws.push_back(cvrp_trace(perturb_pattern(p, spec, d)).cvrp_mw);
    }
    for (std::size_t k = 0; k < fast.theta_fov_deg.size(); ++k) {
      double sum = 0.0;
      for (const auto& dr : draws) sum += dr[k];
      const double mean = sum / spec.draws;
      double ss = 0.0;
      for (const auto& dr : draws) ss += (dr[k] - mean) * (dr[k] - mean);
      const double sd = std::sqrt(ss / (spec.draws - 1));
      REQUIRE(fast.mean_mw[k] == doctest::Approx(mean).epsilon(1e-14));
      REQUIRE(fast.sigma_hat_mw[k] == doctest::Approx(sd).epsilon(1e-12).scale(mean));
    }
  }

  SUBCASE("CI symmetry and half-width") {
    const CvrpCI ci = monte_carlo_cvrp(p, {2.0, 300, 11});
    for (std::size_t k = 0; k < ci.theta_fov_deg.size(); ++k) {
      const double half = kTScore95 * ci.sigma_hat_mw[k];
      REQUIRE(ci.upper_mw[k] - ci.mean_mw[k] ==
              doctest::Approx(half).epsilon(1e-12).scale(ci.mean_mw[k]));
      REQUIRE(ci.mean_mw[k] - ci.lower_mw[k] ==
              doctest::Approx(half).epsilon(1e-12).scale(ci.mean_mw[k]));
      REQUIRE(ci.lower_mw[k] <= ci.mean_mw[k]);
      REQUIRE(ci.mean_mw[k] <= ci.upper_mw[k]);
    }
  }

  SUBCASE("sigma_hat tracks the closed form within 10% at 1000 draws") {
    for (const double sdb : {1.0, 2.0}) {
      const CvrpCI ci = monte_carlo_cvrp(p, {sdb, 1000, 2024});
      const std::vector<double> expect = ripple_std_oracle(p, sdb);
      for (std::size_t k = 0; k < expect.size(); ++k) {
        REQUIRE(ci.sigma_hat_mw[k] == doctest::Approx(expect[k]).epsilon(0.10));
      }
    }
  }

  SUBCASE("isotropic mean stays within 1% of the TRP at 180 degrees") {
    const EirpPattern iso = EirpPattern::isotropic(AngularGrid::from_resolution(5.0), 15.0);
    const CvrpCI ci = monte_carlo_cvrp(iso, {1.0, 1000, 31});
    CHECK(ci.mean_mw.back() == doctest::Approx(dbm_to_mw(15.0)).epsilon(0.01));
  }

  SUBCASE("wide caps average the ripple down") {
    const CvrpCI ci = monte_carlo_cvrp(p, {1.0, 1000, 8});
    const double rel_at_10 = ci.sigma_hat_mw[1] / ci.mean_mw[1];
    const double rel_at_180 = ci.sigma_hat_mw.back() / ci.mean_mw.back();
    CHECK(rel_at_180 < rel_at_10);
  }

  SUBCASE("doubling sigma_db doubles sigma_hat for a shared seed") {
    const CvrpCI a = monte_carlo_cvrp(p, {1.0, 400, 123});
    const CvrpCI b = monte_carlo_cvrp(p, {2.0, 400, 123});
    for (std::size_t k = 0; k < a.theta_fov_deg.size(); ++k) {
      REQUIRE(b.sigma_hat_mw[k] ==
              doctest::Approx(2.0 * a.sigma_hat_mw[k]).epsilon(1e-9));
    }
  }

  SUBCASE("thread count does not change the result") {
    const RippleSpec spec{1.0, 64, 99};
    const CvrpCI serial = monte_carlo_cvrp(p, spec, 1);
    const CvrpCI parallel = monte_carlo_cvrp(p, spec, 4);
    REQUIRE(serial.mean_mw == parallel.mean_mw);
    REQUIRE(serial.sigma_hat_mw == parallel.sigma_hat_mw);
    REQUIRE(serial.lower_mw == parallel.lower_mw);
    REQUIRE(serial.upper_mw == parallel.upper_mw);
  }
}
