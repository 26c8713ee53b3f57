#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "cvrp/units.hpp"

namespace cvrp {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm() const { return std::sqrt(dot(*this)); }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

// Polar angle from +z in [0, 180], azimuth from +x in [0, 360).
struct Direction {
  double theta_deg = 0.0;
  double phi_deg = 0.0;
};

Vec3 direction_to_vector(const Direction& d);
Direction vector_to_direction(const Vec3& v);

enum class Axis { X, Y, Z };

// Rigid rotation about a coordinate axis. A positive angle about Y tips
// +z toward +x (the sense used for steering compensation and depointing).
// X and Z follow the same algebraic pattern (y->z and x->y respectively).
struct Rotation {
  Axis axis = Axis::Y;
  double angle_deg = 0.0;

  Rotation inverse() const { return {axis, -angle_deg}; }
};

struct Mat3 {
  std::array<std::array<double, 3>, 3> m{};

  Vec3 apply(const Vec3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
            m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }
  // For orthonormal matrices the transpose is the inverse.
  Vec3 apply_transposed(const Vec3& v) const {
    return {m[0][0] * v.x + m[1][0] * v.y + m[2][0] * v.z,
            m[0][1] * v.x + m[1][1] * v.y + m[2][1] * v.z,
            m[0][2] * v.x + m[1][2] * v.y + m[2][2] * v.z};
  }
};

Mat3 rotation_matrix(const Rotation& r);

// Planar lattice of radiating elements. Positions are in wavelengths.
// Each element carries its boresight normal and an in-plane tangent that
// fixes the local frame used by the element pattern.
struct ArrayGeometry {
  std::vector<Vec3> positions;
  std::vector<Vec3> normals;
  std::vector<Vec3> tangents;
  int rows = 2;
  int cols = 8;
  double spacing_wl = 0.5;

  std::size_t size() const { return positions.size(); }
};

// 2x8 lattice at half-wavelength spacing, centered on the origin in the
// xy-plane, normals along +z. Elements are indexed 1..16 column-major with
// two elements per column: 1,2 form column one (lowest x), 15,16 column
// eight. Columns run along x, the two rows along y.
ArrayGeometry build_ura();

ArrayGeometry rotate_geometry(const ArrayGeometry& geom, const Rotation& rot);

}  // namespace cvrp
