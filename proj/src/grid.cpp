#include "cvrp/grid.hpp"

#include <cmath>
#include <string>

namespace cvrp {

namespace {

int exact_divisions(double span_deg, double step_deg, const char* what) {
  if (!(step_deg > 0.0)) {
    throw std::invalid_argument(std::string(what) + " step must be positive");
  }
  const double q = span_deg / step_deg;
  const int n = static_cast<int>(std::lround(q));
  if (n < 1 || std::abs(q - n) > 1e-9) {
    throw std::invalid_argument(std::string(what) + " span of " +
                                std::to_string(span_deg) +
                                " degrees is not an integer multiple of step " +
                                std::to_string(step_deg));
  }
  return n;
}

}  // namespace

AngularGrid AngularGrid::make(double dtheta_deg, double dphi_deg) {
  AngularGrid g;
  g.dtheta_deg = dtheta_deg;
  g.dphi_deg = dphi_deg;
  g.n_theta = exact_divisions(180.0, dtheta_deg, "theta");
  g.n_phi = exact_divisions(360.0, dphi_deg, "phi");
  return g;
}

FovMask FovMask::cap(double theta_fov_deg) {
  if (theta_fov_deg < 0.0 || theta_fov_deg > 180.0) {
    throw std::invalid_argument("theta_fov must lie in [0, 180] degrees");
  }
  return {theta_fov_deg, 360.0};
}

}  // namespace cvrp
