// Copyright 2026 The pnpsubdiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>

#include "pnp/error.hpp"

namespace pnp {

struct Vec3 {
  double x = 0, y = 0, z = 0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3& operator+=(const Vec3& o) {
    x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Vec3& operator-=(const Vec3& o) {
    x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Vec3& operator*=(double s) {
    x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
  friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
  friend constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
  friend constexpr Vec3 operator/(Vec3 a, double s) { return a *= 1.0 / s; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }
inline bool is_finite(const Vec3& v) {
  return std::isfinite(v.x) && std::isfinite(v.y) && std::isfinite(v.z);
}

// Angle in [0, pi] between two nonzero vectors; atan2 form stays accurate
// near 0 and pi where acos loses digits.
inline double angle_between(const Vec3& a, const Vec3& b) {
  return std::atan2(norm(cross(a, b)), dot(a, b));
}

/// Unit-length direction. Construction either normalizes or checks.
class UnitVec3 {
 public:
  static constexpr double kUnitTolerance = 1e-9;

  constexpr UnitVec3() : v_{0, 0, 1} {}

  /// Normalizes `v`; throws VanishingNormal for a (near) zero vector.
  static UnitVec3 normalized(const Vec3& v);
  /// Accepts `v` as-is if its norm is within kUnitTolerance of 1.
  static UnitVec3 checked(const Vec3& v);

  constexpr const Vec3& vec() const { return v_; }
  constexpr operator const Vec3&() const { return v_; }  // NOLINT
  constexpr double x() const { return v_.x; }
  constexpr double y() const { return v_.y; }
  constexpr double z() const { return v_.z; }

  UnitVec3 operator-() const { return UnitVec3(-v_); }
  friend constexpr bool operator==(const UnitVec3&, const UnitVec3&) = default;

 private:
  explicit constexpr UnitVec3(const Vec3& v) : v_(v) {}
  Vec3 v_;
};

/// Point-normal pair.
struct Pnp {
  Vec3 point;
  UnitVec3 normal;
};

struct Plane {
  Vec3 origin;
  UnitVec3 normal;

  double signed_distance(const Vec3& p) const { return dot(p - origin, normal); }
  Vec3 project(const Vec3& p) const {
    return p - signed_distance(p) * normal.vec();
  }
};

/// Absolute thresholds used by the averaging code. `scaled` multiplies the
/// length-valued entries for meshes whose coordinates are far from unit
/// scale; angle thresholds are scale free.
struct Tolerances {
  double angle = 1e-9;          // theta below this takes the linear branch
  double antipodal = 1e-9;      // theta above pi - this is rejected
  double coincident = 1e-12;    // |p1 - p0| below this takes the linear branch
  double in_plane = 1e-9;       // carrier membership, points and normals
  double cross_relative = 1e-12;

  Tolerances scaled(double length_scale) const {
    Tolerances t = *this;
    t.coincident *= length_scale;
    t.in_plane *= length_scale;
    return t;
  }
};

/// Normalized u x v.
UnitVec3 z_dir(const Vec3& u, const Vec3& v, const Tolerances& tol = {});

/// Rotates n0 by w * angle(n0, n1) toward n1. Any real w is accepted.
UnitVec3 geodesic_avg(const UnitVec3& n0, const UnitVec3& n1, double w,
                      const Tolerances& tol = {});

/// The planar circle average of two pairs lying in `carrier`.
///
/// The point moves along the auxiliary arc through p0 and p1 whose central
/// angle equals the angle theta between the normals, to central angle
/// w * theta from p0. The arc is traversed in the rotation sense that
/// carries n0 to n1 about the carrier normal, which fixes the side of the
/// chord it bulges to. The normal is geodesic_avg(n0, n1, w).
Pnp circle_avg_2d(const Pnp& p0, const Pnp& p1, double w, const Plane& carrier,
                  const Tolerances& tol = {});

/// Arc point for chord `p0 -> p1` with central angle `theta`, bulging along
/// the unit vector `bulge` (orthogonal to the chord), at fraction `w`.
/// Used by circle_avg_2d once the carrier frame is fixed; exposed for the
/// 3D construction and for tests.
Vec3 arc_point(const Vec3& p0, const Vec3& p1, double theta, const Vec3& bulge,
               double w);

}  // namespace pnp
