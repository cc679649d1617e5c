#pragma once

#include <cmath>

namespace hrcv {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr bool operator==(Vec3, Vec3) = default;

  constexpr double operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
};

inline double norm(Vec3 v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }
inline double distance(Vec3 a, Vec3 b) { return norm(a - b); }

/// Axis-aligned box in meters, min <= max per axis. Degenerate (point or
/// flat) boxes are valid geometry; layouts additionally require volume.
struct Box {
  Vec3 min, max;

  constexpr Vec3 center() const { return 0.5 * (min + max); }
  constexpr Vec3 extent() const { return max - min; }
  constexpr bool well_formed() const { return min.x <= max.x && min.y <= max.y && min.z <= max.z; }
  friend constexpr bool operator==(const Box&, const Box&) = default;
};

}  // namespace hrcv
