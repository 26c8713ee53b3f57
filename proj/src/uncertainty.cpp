#include "cvrp/uncertainty.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace cvrp {

double sigma_lin(double sigma_db) {
  if (sigma_db < 0.0) {
    throw std::invalid_argument("ripple severity must be non-negative");
  }
  return 23.0 * sigma_db / 100.0;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

GaussianStream::GaussianStream(std::uint64_t seed, std::uint64_t draw_index)
    : engine_(splitmix64(splitmix64(seed) ^ (draw_index + 0x51a2b3c4d5e6f708ull))) {}

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // (0,1] and [0,1) uniforms from the top 53 bits.
  const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * kPi * u2;
  spare_ = r * std::sin(a);
  has_spare_ = true;
  return r * std::cos(a);
}

EirpPattern perturb_pattern(const EirpPattern& p, const RippleSpec& spec, int draw_index) {
  const double sig = spec.sigma_lin();
  GaussianStream g(spec.seed, static_cast<std::uint64_t>(draw_index));
  EirpPattern out = p;
  for (double& v : out.values) {
    v = v * (1.0 + sig * g.next());
  }
  return out;
}

namespace {

// One draw of the CVRP sweep without materializing the perturbed pattern.
// Consumes the Gaussian stream in the same row-major order as
// perturb_pattern and accumulates in the same order as cvrp_trace, so the
// results are bit-identical to the explicit perturb-then-trace path.
void cvrp_draw(const EirpPattern& p, double sig, std::uint64_t seed, int draw_index,
               const std::vector<int>& limits, const std::vector<double>& areas,
               double* out) {
  GaussianStream g(seed, static_cast<std::uint64_t>(draw_index));
  const int rows = p.grid.rows(), cols = p.grid.cols();
  std::vector<double> rs(static_cast<std::size_t>(rows));
  double pole = 0.0;
  for (int i = 0; i < rows; ++i) {
    const double* v = &p.values[static_cast<std::size_t>(i) * cols];
    double row = 0.0;
    if (i == 0) {
      pole = v[0] * (1.0 + sig * g.next());
      row = pole;
      for (int j = 1; j < cols; ++j) row += v[j] * (1.0 + sig * g.next());
    } else {
      for (int j = 0; j < cols; ++j) row += v[j] * (1.0 + sig * g.next());
    }
    rs[i] = row * std::sin(deg2rad(p.grid.theta_deg(i)));
  }
  const double cell = p.grid.dphi_rad() * p.grid.dtheta_rad();
  for (std::size_t k = 0; k < limits.size(); ++k) {
    if (limits[k] == 0) {
      out[k] = pole;
      continue;
    }
    double acc = 0.0;
    for (int i = 1; i <= limits[k]; ++i) acc += rs[i];
    out[k] = cell * acc / areas[k];
  }
}

}  // namespace

CvrpCI monte_carlo_cvrp(const EirpPattern& p, const RippleSpec& spec, int n_threads) {
  if (spec.draws < 2) {
    throw std::invalid_argument("Monte Carlo needs at least 2 draws");
  }
  const double sig = spec.sigma_lin();
  const std::vector<double> fovs = fov_sweep();
  const std::size_t nf = fovs.size();

  if (sig == 0.0) {
    // degenerate: every draw reproduces the pattern, so the interval is a point
    const CvrpTrace tr = cvrp_trace(p);
    CvrpCI ci;
    ci.theta_fov_deg = tr.theta_fov_deg;
    ci.mean_mw = tr.cvrp_mw;
    ci.sigma_hat_mw.assign(nf, 0.0);
    ci.lower_mw = tr.cvrp_mw;
    ci.upper_mw = tr.cvrp_mw;
    return ci;
  }

  std::vector<int> limits(nf);
  std::vector<double> areas(nf);
  for (std::size_t k = 0; k < nf; ++k) {
    if (fovs[k] == 0.0) {
      limits[k] = 0;
      areas[k] = 0.0;
      continue;
    }
    const FovMask mask = FovMask::cap(fovs[k]);
    limits[k] = std::min(mask_ring_limit(p.grid, mask), p.grid.n_theta - 1);
    areas[k] = cap_area(p.grid, mask);
  }

  std::vector<double> draws(static_cast<std::size_t>(spec.draws) * nf);
  int workers = n_threads > 0 ? n_threads : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > spec.draws) workers = spec.draws;

  auto run_chunk = [&](int begin, int end) {
    for (int d = begin; d < end; ++d) {
      cvrp_draw(p, sig, spec.seed, d, limits, areas, &draws[static_cast<std::size_t>(d) * nf]);
    }
  };
  if (workers == 1) {
    run_chunk(0, spec.draws);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (spec.draws + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int begin = w * chunk;
      const int end = std::min(spec.draws, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_chunk, begin, end);
    }
    for (auto& t : pool) t.join();
  }

  CvrpCI ci;
  ci.theta_fov_deg = fovs;
  ci.mean_mw.resize(nf);
  ci.sigma_hat_mw.resize(nf);
  ci.lower_mw.resize(nf);
  ci.upper_mw.resize(nf);
  for (std::size_t k = 0; k < nf; ++k) {
    double sum = 0.0;
    for (int d = 0; d < spec.draws; ++d) sum += draws[static_cast<std::size_t>(d) * nf + k];
    const double mean = sum / spec.draws;
    double ss = 0.0;
    for (int d = 0; d < spec.draws; ++d) {
      const double dx = draws[static_cast<std::size_t>(d) * nf + k] - mean;
      ss += dx * dx;
    }
    const double sd = std::sqrt(ss / (spec.draws - 1));
    ci.mean_mw[k] = mean;
    ci.sigma_hat_mw[k] = sd;
    ci.lower_mw[k] = mean - kTScore95 * sd;
    ci.upper_mw[k] = mean + kTScore95 * sd;
  }
  return ci;
}

}  // namespace cvrp
