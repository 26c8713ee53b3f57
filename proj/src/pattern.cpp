#include "cvrp/pattern.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cvrp/spherical.hpp"

namespace cvrp {

EirpPattern EirpPattern::zeros(const AngularGrid& grid, double trp_dbm) {
  EirpPattern p;
  p.grid = grid;
  p.trp_dbm = trp_dbm;
  p.values.assign(static_cast<std::size_t>(grid.rows()) * grid.cols(), 0.0);
  return p;
}

EirpPattern EirpPattern::isotropic(const AngularGrid& grid, double trp_dbm) {
  EirpPattern p = zeros(grid, trp_dbm);
  const double mw = dbm_to_mw(trp_dbm);
  for (double& v : p.values) v = mw;
  return p;
}

double ElementPattern::response(const Vec3& u, const Vec3& normal, const Vec3& tangent) const {
  if (isotropic) return 1.0;
  const double u1 = u.dot(normal);
  if (u1 <= 0.0) return 0.0;
  if (cos_exponent_a == 1.0 && cos_exponent_b == 1.0) return u1;
  const double u2 = u.dot(tangent);
  const double h = std::sqrt(u1 * u1 + u2 * u2);
  if (h == 0.0) return 0.0;
  const double cos_az = u1 / h;  // azimuth-like angle about the boresight
  const double cos_el = h;       // elevation-like angle out of the az plane
  return std::pow(cos_az, cos_exponent_a) * std::pow(cos_el, cos_exponent_b);
}

ExcitationWeights uniform_weights(std::size_t n_elements) {
  ExcitationWeights w;
  w.weights.assign(n_elements, std::complex<double>(1.0, 0.0));
  return w;
}

ExcitationWeights steering_weights(const ArrayGeometry& geom, const Direction& steer) {
  const Vec3 u = direction_to_vector(steer);
  ExcitationWeights w;
  w.weights.reserve(geom.size());
  for (const Vec3& r : geom.positions) {
    w.weights.push_back(std::polar(1.0, -2.0 * kPi * r.dot(u)));
  }
  return w;
}

ExcitationWeights apply_failures(const ExcitationWeights& w, const std::set<int>& failed) {
  ExcitationWeights out = w;
  for (int idx : failed) {
    if (idx < 1 || idx > static_cast<int>(w.weights.size())) {
      throw std::invalid_argument("failed element index " + std::to_string(idx) +
                                  " outside [1, " + std::to_string(w.weights.size()) + "]");
    }
    out.weights[idx - 1] = 0.0;
    out.failed_set.insert(idx);
  }
  return out;
}

double trp_after_failures(double trp_base_dbm, int n_el, int n_fe) {
  if (n_el <= 0 || n_fe < 0 || n_fe >= n_el) {
    throw std::domain_error("failed element count must satisfy 0 <= n_fe < n_el");
  }
  return trp_base_dbm + 10.0 * std::log10(static_cast<double>(n_el - n_fe) / n_el);
}

EirpPattern synthesize_eirp(const ArrayGeometry& geom, const ExcitationWeights& w,
                            const ElementPattern& ep, const AngularGrid& grid,
                            double trp_dbm) {
  if (geom.size() != w.weights.size()) {
    throw std::invalid_argument("weight count does not match element count");
  }
  if (!std::isfinite(trp_dbm)) {
    throw std::invalid_argument("trp_dbm must be finite");
  }
  double wsum = 0.0;
  for (const auto& c : w.weights) wsum += std::abs(c);
  if (wsum == 0.0) {
    throw std::domain_error("all excitation weights are zero; pattern cannot be normalized");
  }

  EirpPattern p = EirpPattern::zeros(grid, trp_dbm);
  const std::size_t n_el = geom.size();
  const int rows = grid.rows(), cols = grid.cols();
  for (int i = 0; i < rows; ++i) {
    // Both pole rows hold a single direction; compute once and replicate.
    const int jmax = (i == 0 || i == grid.n_theta) ? 1 : cols;
    for (int j = 0; j < jmax; ++j) {
      const Vec3 u = direction_to_vector({grid.theta_deg(i), grid.phi_deg(j)});
      std::complex<double> acc = 0.0;
      for (std::size_t n = 0; n < n_el; ++n) {
        const double f = ep.response(u, geom.normals[n], geom.tangents[n]);
        if (f == 0.0) continue;
        const std::complex<double> wn = w.weights[n];
        if (wn == std::complex<double>(0.0, 0.0)) continue;
        acc += wn * f * std::polar(1.0, 2.0 * kPi * geom.positions[n].dot(u));
      }
      p.at(i, j) = std::norm(acc);
    }
    if (jmax == 1) {
      for (int j = 1; j < cols; ++j) p.at(i, j) = p.at(i, 0);
    }
  }
  normalize_to_trp(p);
  return p;
}

void normalize_to_trp(EirpPattern& p) {
  const FovMask full = FovMask::cap(180.0);
  const double q = quadrature_sum(p, full);
  if (!(q > 0.0)) {
    throw std::domain_error("degenerate pattern: full-sphere quadrature is not positive");
  }
  const double scale = dbm_to_mw(p.trp_dbm) * cap_area(p.grid, full) / q;
  for (double& v : p.values) v *= scale;
}

}  // namespace cvrp
