#pragma once

#include <vector>

#include "cvrp/pattern.hpp"

namespace cvrp {

// Largest ring index i with theta_i <= theta_fov (boundary ring included);
// 0 means the mask holds no rings. Poles (i = 0 and i = N) never contribute.
int mask_ring_limit(const AngularGrid& grid, const FovMask& mask);

// Per-ring sums s_i = sin(theta_i) * sum_j values(i, j) for i = 0..N.
std::vector<double> ring_weighted_sums(const EirpPattern& p);

// Masked quadrature dphi*dtheta * sum_{i=1}^{N-1} sum_j v(i,j) sin(theta_i)
// over rings with theta_i <= theta_fov, in mW*sr. Rows accumulate in
// ascending ring order.
double quadrature_sum(const EirpPattern& p, const FovMask& mask);

// The same quadrature applied to the unit pattern: the discrete area of the
// cap, in steradians. Tends to 2*pi*(1 - cos(theta_fov)) as the grid refines
// and equals the discrete full-sphere area at 180 degrees.
double cap_area(const AngularGrid& grid, const FovMask& mask);

// Bilinear interpolation on linear mW values; phi wraps periodically.
// Directions on a grid node return that node's value.
double bilinear_sample(const EirpPattern& p, const Direction& d);

// Resample the pattern under a rigid rotation: output(u) = p(R^-1 u) at every
// grid direction, bilinear in linear mW. Grid and trp metadata carry over
// unchanged; output values stay inside [min, max] of the source.
EirpPattern rotate_pattern_postproc(const EirpPattern& p, const Rotation& rot);

}  // namespace cvrp
