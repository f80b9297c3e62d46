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

#include "pnp/geom.hpp"

#include <numbers>
#include <string>

namespace pnp {

UnitVec3 UnitVec3::normalized(const Vec3& v) {
  const double n = norm(v);
  if (!(n > 0) || !std::isfinite(n)) {
    throw Error(ErrorKind::VanishingNormal, "cannot normalize a zero vector");
  }
  return UnitVec3(v / n);
}

UnitVec3 UnitVec3::checked(const Vec3& v) {
  const double n = norm(v);
  if (!std::isfinite(n) || std::abs(n - 1.0) > kUnitTolerance) {
    throw Error(ErrorKind::InvalidArgument,
                "vector of norm " + std::to_string(n) + " is not unit length");
  }
  return UnitVec3(v);
}

UnitVec3 z_dir(const Vec3& u, const Vec3& v, const Tolerances& tol) {
  const Vec3 c = cross(u, v);
  const double cn = norm(c);
  if (!(cn > tol.cross_relative * norm(u) * norm(v))) {
    throw Error(ErrorKind::DegenerateCross, "vectors are parallel or zero");
  }
  return UnitVec3::normalized(c);
}

UnitVec3 geodesic_avg(const UnitVec3& n0, const UnitVec3& n1, double w,
                      const Tolerances& tol) {
  const double sin_theta = norm(cross(n0, n1));
  const double cos_theta = dot(n0, n1);
  const double theta = std::atan2(sin_theta, cos_theta);
  if (theta > std::numbers::pi - tol.antipodal) {
    throw Error(ErrorKind::AntipodalNormals,
                "geodesic average of opposite normals is undefined");
  }
  if (w == 0.0 || sin_theta == 0.0) return n0;
  if (w == 1.0) return n1;

  // Unit tangent at n0 pointing toward n1 on the great circle.
  const Vec3 tangent = (n1.vec() - cos_theta * n0.vec()) / sin_theta;
  const double a = w * theta;
  return UnitVec3::normalized(std::cos(a) * n0.vec() + std::sin(a) * tangent);
}

Vec3 arc_point(const Vec3& p0, const Vec3& p1, double theta, const Vec3& bulge,
               double w) {
  // p_w = p0 + c1 (p1 - p0) + c2 |p1 - p0| bulge; both coefficients are the
  // half-angle forms of the chord/arc relations, free of the 1/theta radius
  // that would cancel for small theta.
  const Vec3 chord = p1 - p0;
  const double s = std::sin(0.5 * theta);
  const double head = std::sin(0.5 * theta * w);
  const double tail = 0.5 * theta * (1.0 - w);
  const double c1 = head * std::cos(tail) / s;
  const double c2 = head * std::sin(tail) / s;
  return p0 + c1 * chord + (c2 * norm(chord)) * bulge;
}

Pnp circle_avg_2d(const Pnp& p0, const Pnp& p1, double w, const Plane& carrier,
                  const Tolerances& tol) {
  const Vec3& nc = carrier.normal;
  if (std::abs(carrier.signed_distance(p0.point)) > tol.in_plane ||
      std::abs(carrier.signed_distance(p1.point)) > tol.in_plane ||
      std::abs(dot(p0.normal, nc)) > tol.in_plane ||
      std::abs(dot(p1.normal, nc)) > tol.in_plane) {
    throw Error(ErrorKind::NotInCarrier,
                "point-normal pairs do not lie in the carrier plane");
  }

  const UnitVec3 normal = geodesic_avg(p0.normal, p1.normal, w, tol);
  const double theta = angle_between(p0.normal, p1.normal);
  const Vec3 chord = p1.point - p0.point;
  const double length = norm(chord);

  if (theta < tol.angle) {
    return {(1.0 - w) * p0.point + w * p1.point, normal};
  }
  if (length < tol.coincident) {
    return {p0.point, normal};
  }

  const double orientation = dot(cross(p0.normal, p1.normal), nc) >= 0 ? 1 : -1;
  const Vec3 bulge = orientation * UnitVec3::normalized(cross(chord, nc)).vec();
  return {arc_point(p0.point, p1.point, theta, bulge, w), normal};
}

}  // namespace pnp
