#pragma once

#include <complex>
#include <set>
#include <vector>

#include "cvrp/geometry.hpp"
#include "cvrp/grid.hpp"

namespace cvrp {

// Total-EIRP samples (linear milliwatts) on an AngularGrid, row-major with
// theta varying slowest. trp_dbm is the total radiated power the pattern
// was normalized to; see synthesize_eirp for the closure guarantee.
struct EirpPattern {
  AngularGrid grid;
  std::vector<double> values;
  double trp_dbm = 0.0;

  double& at(int i, int j) { return values[static_cast<std::size_t>(i) * grid.cols() + j]; }
  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * grid.cols() + j]; }

  static EirpPattern zeros(const AngularGrid& grid, double trp_dbm);
  // Constant pattern whose every sample equals the TRP in mW (0 dBi everywhere).
  static EirpPattern isotropic(const AngularGrid& grid, double trp_dbm);
};

// Cosine element response cos^a(az) * cos^b(el) in the element local frame
// (boresight = normal, az around the tangent plane), zero at and behind the
// element plane. Exponents [1,1] reduce to the dot product with the normal.
struct ElementPattern {
  double cos_exponent_a = 1.0;
  double cos_exponent_b = 1.0;
  bool isotropic = false;

  static ElementPattern cosine(double a = 1.0, double b = 1.0) { return {a, b, false}; }
  static ElementPattern ideal_isotropic() { return {0.0, 0.0, true}; }

  double response(const Vec3& u, const Vec3& normal, const Vec3& tangent) const;
};

struct ExcitationWeights {
  std::vector<std::complex<double>> weights;
  std::set<int> failed_set;  // 1-based element indices
};

ExcitationWeights uniform_weights(std::size_t n_elements);

// Conjugate phase weights pointing the main lobe at the given direction:
// w_n = exp(-j*2*pi*(r_n . u_steer)) with r_n in wavelengths.
ExcitationWeights steering_weights(const ArrayGeometry& geom, const Direction& steer);

// Zero the listed 1-based element weights (on-off failure model).
ExcitationWeights apply_failures(const ExcitationWeights& w, const std::set<int>& failed);

// TRP after turning off n_fe of n_el elements, proportional power loss:
// trp_base + 10*log10((n_el - n_fe)/n_el). Throws if n_fe >= n_el.
double trp_after_failures(double trp_base_dbm, int n_el, int n_fe);

// Coherent field synthesis |sum_n w_n f_n(u) exp(+j*2*pi*(r_n . u))|^2 on the
// grid, scaled so that the discrete full-sphere quadrature equals the TRP
// (cvrp at theta_fov=180 returns trp_dbm in mW exactly).
EirpPattern synthesize_eirp(const ArrayGeometry& geom, const ExcitationWeights& w,
                            const ElementPattern& ep, const AngularGrid& grid,
                            double trp_dbm);

// Rescale so the discrete full-sphere quadrature matches trp_dbm again.
// Used after resampling operations that disturb the closure.
void normalize_to_trp(EirpPattern& p);

}  // namespace cvrp
