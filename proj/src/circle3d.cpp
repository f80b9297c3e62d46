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

#include "pnp/circle3d.hpp"

#include <algorithm>
#include <numbers>

namespace pnp {

namespace {

void check_not_antipodal(double theta, const Tolerances& tol) {
  if (theta > std::numbers::pi - tol.antipodal) {
    throw Error(ErrorKind::AntipodalNormals,
                "circle average of pairs with opposite normals is undefined");
  }
}

}  // namespace

AvgContext make_context(const Pnp& p0, const Pnp& p1, const Tolerances& tol) {
  AvgContext ctx;
  ctx.theta = angle_between(p0.normal, p1.normal);
  check_not_antipodal(ctx.theta, tol);
  if (ctx.theta < tol.angle) {
    throw Error(ErrorKind::UndefinedTheta,
                "normals are parallel; the averaging planes are undefined");
  }
  ctx.z = UnitVec3::normalized(cross(p0.normal, p1.normal));
  const Vec3 d = p1.point - p0.point;
  ctx.hbar_signed = dot(d, ctx.z);
  ctx.hbar = std::abs(ctx.hbar_signed);
  ctx.pi0 = Plane{p0.point, ctx.z};
  ctx.phi = norm(d) > 0 ? angle_between(ctx.z, d) : 0.0;
  return ctx;
}

Pnp circle_avg_3d(const Pnp& p0, const Pnp& p1, double w,
                  const Tolerances& tol) {
  return circle_avg_3d_in_frame(p0, p1, w, p0.normal, tol);
}

Pnp circle_avg_3d_in_frame(const Pnp& p0, const Pnp& p1, double w,
                           const Vec3& frame_hint, const Tolerances& tol) {
  const double theta = angle_between(p0.normal, p1.normal);
  check_not_antipodal(theta, tol);
  const UnitVec3 normal = geodesic_avg(p0.normal, p1.normal, w, tol);
  if (theta < tol.angle) {
    return {chord_point(p0.point, p1.point, w), normal};
  }

  const Vec3 z = UnitVec3::normalized(cross(p0.normal, p1.normal));
  const Vec3 d = p1.point - p0.point;
  const double hbar_signed = dot(d, z);
  const Vec3 d_star = d - hbar_signed * z;  // p1 projected on pi0, minus p0

  // In-plane frame (e1, e2, z), right handed.
  Vec3 e1 = frame_hint - dot(frame_hint, z) * z;
  const double e1_norm = norm(e1);
  e1 = e1_norm > tol.cross_relative ? e1 / e1_norm : p0.normal.vec();
  const Vec3 e2 = cross(z, e1);

  // Planar circle average with p0 at the origin. The normals turn
  // counterclockwise in this frame, so the arc bulges to the right of the
  // chord.
  const double cx = dot(d_star, e1);
  const double cy = dot(d_star, e2);
  const double length = std::hypot(cx, cy);
  double qx = 0, qy = 0;
  if (length >= tol.coincident) {
    const double s = std::sin(0.5 * theta);
    const double head = std::sin(0.5 * theta * w);
    const double tail = 0.5 * theta * (1.0 - w);
    const double along = head * std::cos(tail) / s;
    const double across = head * std::sin(tail) / s;
    // chord (cx, cy) rotated by -90 degrees has the same length as the chord
    qx = along * cx + across * cy;
    qy = along * cy - across * cx;
  }
  const Vec3 point = p0.point + qx * e1 + qy * e2 + (w * hbar_signed) * z;
  return {point, normal};
}

double deviation_from_chord(const Pnp& p0, const Pnp& p1, double w,
                            const Tolerances& tol) {
  const AvgContext ctx = make_context(p0, p1, tol);
  const double projected = distance(p0.point, p1.point) * std::sin(ctx.phi);
  const double ratio = std::sin(0.5 * ctx.theta * w) / std::sin(0.5 * ctx.theta);
  const double beta = 0.5 * ctx.theta * (1.0 - w);
  // Cosine theorem for sides (projected * w) and (projected * ratio) with
  // included angle beta, written as a sum of squares to avoid cancellation.
  const double a = ratio * std::cos(beta) - w;
  const double b = ratio * std::sin(beta);
  return projected * std::hypot(a, b);
}

std::vector<Vec3> helix_trace(const Pnp& p0, const Pnp& p1, int samples,
                              const Tolerances& tol) {
  if (samples < 2) {
    throw Error(ErrorKind::InvalidArgument, "helix_trace needs at least 2 samples");
  }
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    const double w = static_cast<double>(i) / (samples - 1);
    out.push_back(circle_avg_3d(p0, p1, w, tol).point);
  }
  return out;
}

}  // namespace pnp
