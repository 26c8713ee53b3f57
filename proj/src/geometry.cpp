#include "cvrp/geometry.hpp"

#include <cmath>

namespace cvrp {

Vec3 direction_to_vector(const Direction& d) {
  const double t = deg2rad(d.theta_deg);
  const double p = deg2rad(d.phi_deg);
  return {std::sin(t) * std::cos(p), std::sin(t) * std::sin(p), std::cos(t)};
}

Direction vector_to_direction(const Vec3& v) {
  const double n = v.norm();
  double z = n > 0.0 ? v.z / n : 1.0;
  if (z > 1.0) z = 1.0;
  if (z < -1.0) z = -1.0;
  const double theta = rad2deg(std::acos(z));
  double phi = rad2deg(std::atan2(v.y, v.x));
  if (phi < 0.0) phi += 360.0;
  if (phi >= 360.0) phi -= 360.0;
  return {theta, phi};
}

Mat3 rotation_matrix(const Rotation& r) {
  const double a = deg2rad(r.angle_deg);
  const double c = std::cos(a), s = std::sin(a);
  Mat3 R;
  switch (r.axis) {
    case Axis::X:
      R.m = {{{1, 0, 0}, {0, c, -s}, {0, s, c}}};
      break;
    case Axis::Y:
      // positive angle tips +z toward +x
      R.m = {{{c, 0, s}, {0, 1, 0}, {-s, 0, c}}};
      break;
    case Axis::Z:
      R.m = {{{c, -s, 0}, {s, c, 0}, {0, 0, 1}}};
      break;
  }
  return R;
}

ArrayGeometry build_ura() {
  ArrayGeometry g;
  g.rows = 2;
  g.cols = 8;
  g.spacing_wl = 0.5;
  g.positions.reserve(16);
  g.normals.reserve(16);
  g.tangents.reserve(16);
  for (int k = 0; k < g.rows * g.cols; ++k) {
    const int col = k / g.rows;
    const int row = k % g.rows;
    const double x = (col - (g.cols - 1) / 2.0) * g.spacing_wl;
    const double y = (row - (g.rows - 1) / 2.0) * g.spacing_wl;
    g.positions.push_back({x, y, 0.0});
    g.normals.push_back({0.0, 0.0, 1.0});
    g.tangents.push_back({1.0, 0.0, 0.0});
  }
  return g;
}

ArrayGeometry rotate_geometry(const ArrayGeometry& geom, const Rotation& rot) {
  const Mat3 R = rotation_matrix(rot);
  ArrayGeometry out = geom;
  for (std::size_t n = 0; n < geom.size(); ++n) {
    out.positions[n] = R.apply(geom.positions[n]);
    out.normals[n] = R.apply(geom.normals[n]);
    out.tangents[n] = R.apply(geom.tangents[n]);
  }
  return out;
}

}  // namespace cvrp
