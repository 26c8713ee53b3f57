#include "cvrp/spherical.hpp"

#include <cmath>

namespace cvrp {

int mask_ring_limit(const AngularGrid& grid, const FovMask& mask) {
  const int limit = static_cast<int>(std::floor(mask.theta_fov_deg / grid.dtheta_deg + 1e-9));
  return limit < 0 ? 0 : limit;
}

std::vector<double> ring_weighted_sums(const EirpPattern& p) {
  const int rows = p.grid.rows(), cols = p.grid.cols();
  std::vector<double> out(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    double row = 0.0;
    const double* v = &p.values[static_cast<std::size_t>(i) * cols];
    for (int j = 0; j < cols; ++j) row += v[j];
    out[i] = row * std::sin(deg2rad(p.grid.theta_deg(i)));
  }
  return out;
}

double quadrature_sum(const EirpPattern& p, const FovMask& mask) {
  const std::vector<double> rs = ring_weighted_sums(p);
  const int limit = std::min(mask_ring_limit(p.grid, mask), p.grid.n_theta - 1);
  double acc = 0.0;
  for (int i = 1; i <= limit; ++i) acc += rs[i];
  return p.grid.dphi_rad() * p.grid.dtheta_rad() * acc;
}

double cap_area(const AngularGrid& grid, const FovMask& mask) {
  const int limit = std::min(mask_ring_limit(grid, mask), grid.n_theta - 1);
  double acc = 0.0;
  for (int i = 1; i <= limit; ++i) {
    acc += std::sin(deg2rad(grid.theta_deg(i))) * grid.cols();
  }
  return grid.dphi_rad() * grid.dtheta_rad() * acc;
}

double bilinear_sample(const EirpPattern& p, const Direction& d) {
  const AngularGrid& g = p.grid;
  const int N = g.n_theta, M = g.n_phi;

  // Coordinates within 1e-9 cells of a node snap onto it, so directions
  // that are nodes up to round-off (e.g. after a vector round trip) return
  // the node value exactly.
  double ti = d.theta_deg / g.dtheta_deg;
  if (std::abs(ti - std::round(ti)) < 1e-9) ti = std::round(ti);
  if (ti < 0.0) ti = 0.0;
  if (ti > N) ti = N;
  int i0 = static_cast<int>(ti);
  if (i0 >= N) i0 = N - 1;
  const double ft = ti - i0;

  double phi = std::fmod(d.phi_deg, 360.0);
  if (phi < 0.0) phi += 360.0;
  double pj = phi / g.dphi_deg;
  if (std::abs(pj - std::round(pj)) < 1e-9) pj = std::round(pj);
  int j0 = static_cast<int>(pj) % M;
  const double fp = pj - static_cast<int>(pj);
  const int j1 = (j0 + 1) % M;

  const double v00 = p.at(i0, j0), v01 = p.at(i0, j1);
  const double v10 = p.at(i0 + 1, j0), v11 = p.at(i0 + 1, j1);
  return (1.0 - ft) * ((1.0 - fp) * v00 + fp * v01) +
         ft * ((1.0 - fp) * v10 + fp * v11);
}

EirpPattern rotate_pattern_postproc(const EirpPattern& p, const Rotation& rot) {
  const Mat3 R = rotation_matrix(rot);
  EirpPattern out = EirpPattern::zeros(p.grid, p.trp_dbm);
  const int rows = p.grid.rows(), cols = p.grid.cols();
  for (int i = 0; i < rows; ++i) {
    const int jmax = (i == 0 || i == p.grid.n_theta) ? 1 : cols;
    for (int j = 0; j < jmax; ++j) {
      const Vec3 u = direction_to_vector({p.grid.theta_deg(i), p.grid.phi_deg(j)});
      const Vec3 src = R.apply_transposed(u);  // R^-1 u
      out.at(i, j) = bilinear_sample(p, vector_to_direction(src));
    }
    if (jmax == 1) {
      for (int j = 1; j < cols; ++j) out.at(i, j) = out.at(i, 0);
    }
  }
  return out;
}

}  // namespace cvrp
