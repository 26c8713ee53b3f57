#pragma once

#include <stdexcept>

#include "cvrp/units.hpp"

namespace cvrp {

// Regular theta/phi grid: theta_i = i*dtheta for i = 0..N (both poles kept),
// phi_j = j*dphi for j = 0..M-1 (periodic). 180 and 360 must be integer
// multiples of the step sizes.
struct AngularGrid {
  double dtheta_deg = 0.0;
  double dphi_deg = 0.0;
  int n_theta = 0;  // N = 180/dtheta
  int n_phi = 0;    // M = 360/dphi

  static AngularGrid make(double dtheta_deg, double dphi_deg);
  static AngularGrid from_resolution(double res_deg) { return make(res_deg, res_deg); }

  int rows() const { return n_theta + 1; }
  int cols() const { return n_phi; }
  double theta_deg(int i) const { return i * dtheta_deg; }
  double phi_deg(int j) const { return j * dphi_deg; }
  double dtheta_rad() const { return deg2rad(dtheta_deg); }
  double dphi_rad() const { return deg2rad(dphi_deg); }

  bool operator==(const AngularGrid& o) const {
    return dtheta_deg == o.dtheta_deg && dphi_deg == o.dphi_deg;
  }
};

// Spherical cap [0, theta_fov] x full azimuth. phi_fov is fixed at 360 in
// this toolkit; the field is kept explicit so masks are self-describing.
struct FovMask {
  double theta_fov_deg = 180.0;
  double phi_fov_deg = 360.0;

  static FovMask cap(double theta_fov_deg);
};

}  // namespace cvrp
