#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cvrp/metrics.hpp"

namespace cvrp {

// t-score for a 95% confidence interval at 999 degrees of freedom.
inline constexpr double kTScore95 = 1.962;

// sigma_lin = 23 * sigma_db / 100. Throws on negative input.
double sigma_lin(double sigma_db);

// Multiplicative ripple error model: each pattern sample is scaled by
// (1 + g) with g ~ N(0, sigma_lin^2), independent per sample and per draw.
struct RippleSpec {
  double sigma_db = 0.0;
  int draws = 1000;
  std::uint64_t seed = 0;

  double sigma_lin() const { return cvrp::sigma_lin(sigma_db); }
};

// Deterministic per-draw Gaussian stream.
//
// The stream for draw d is an mt19937_64 engine seeded with a splitmix64
// mix of (seed, d). Normals come from the Box-Muller transform applied to
// uniforms built directly from the top 53 engine bits, so the sequence
// depends only on (seed, draw index, position) and not on any library's
// distribution internals. Draws may therefore run on any thread, in any
// order, with identical results.
class GaussianStream {
 public:
  GaussianStream(std::uint64_t seed, std::uint64_t draw_index);
  double next();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// One distorted copy of the pattern: v -> v * (1 + g), samples visited in
// row-major order. Negative results are kept; clamping would bias the mean.
EirpPattern perturb_pattern(const EirpPattern& p, const RippleSpec& spec, int draw_index);

// Per-theta_fov mean, sample standard deviation (divisor draws-1) and the
// 95% confidence interval mean +/- 1.962 * sigma_hat, all in linear mW.
struct CvrpCI {
  std::vector<double> theta_fov_deg;
  std::vector<double> mean_mw;
  std::vector<double> sigma_hat_mw;
  std::vector<double> lower_mw;
  std::vector<double> upper_mw;
};

// Monte Carlo propagation of the ripple model through the CVRP sweep.
// Runs draws in parallel across n_threads (0 = hardware concurrency);
// results are identical for any thread count.
CvrpCI monte_carlo_cvrp(const EirpPattern& p, const RippleSpec& spec, int n_threads = 0);

}  // namespace cvrp
