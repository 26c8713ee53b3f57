#pragma once

#include <vector>

#include "cvrp/spherical.hpp"

namespace cvrp {

// The study sweep: 0, 10, ..., 180 degrees (19 values).
std::vector<double> fov_sweep();

struct CvrpTrace {
  std::vector<double> theta_fov_deg;
  std::vector<double> cvrp_mw;
};

// Constrained-view radiated power: quadrature over the cap divided by the
// cap area. theta_fov = 0 degenerates to the +z pole sample; theta_fov = 180
// equals the pattern TRP by normalization closure.
double cvrp(const EirpPattern& p, const FovMask& mask);

// Partial radiated power: same quadrature normalized by the full sphere, so
// prp = cvrp * A_cap / A_sphere and both meet at the TRP for theta_fov = 180.
double prp(const EirpPattern& p, const FovMask& mask);

CvrpTrace cvrp_trace(const EirpPattern& p);

}  // namespace cvrp
