#include "cvrp/metrics.hpp"

namespace cvrp {

std::vector<double> fov_sweep() {
  std::vector<double> fovs;
  fovs.reserve(19);
  for (int f = 0; f <= 180; f += 10) fovs.push_back(f);
  return fovs;
}

double cvrp(const EirpPattern& p, const FovMask& mask) {
  // A cap that holds no quadrature ring degenerates to the pole sample,
  // matching the theta_fov -> 0 limit.
  if (mask.theta_fov_deg == 0.0 || mask_ring_limit(p.grid, mask) == 0) {
    return p.at(0, 0);
  }
  return quadrature_sum(p, mask) / cap_area(p.grid, mask);
}

double prp(const EirpPattern& p, const FovMask& mask) {
  return quadrature_sum(p, mask) / cap_area(p.grid, FovMask::cap(180.0));
}

CvrpTrace cvrp_trace(const EirpPattern& p) {
  CvrpTrace tr;
  tr.theta_fov_deg = fov_sweep();
  tr.cvrp_mw.reserve(tr.theta_fov_deg.size());

  // Single pass: cumulative masked sums reuse the per-ring sums so every
  // entry matches an independent cvrp() call bit for bit.
  const std::vector<double> rs = ring_weighted_sums(p);
  for (double fov : tr.theta_fov_deg) {
    const FovMask mask = FovMask::cap(fov);
    if (fov == 0.0 || mask_ring_limit(p.grid, mask) == 0) {
      tr.cvrp_mw.push_back(p.at(0, 0));
      continue;
    }
    const int limit = std::min(mask_ring_limit(p.grid, mask), p.grid.n_theta - 1);
    double acc = 0.0;
    for (int i = 1; i <= limit; ++i) acc += rs[i];
    const double q = p.grid.dphi_rad() * p.grid.dtheta_rad() * acc;
    tr.cvrp_mw.push_back(q / cap_area(p.grid, mask));
  }
  return tr;
}

}  // namespace cvrp
