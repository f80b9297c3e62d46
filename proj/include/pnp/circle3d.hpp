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

#include <vector>

#include "pnp/geom.hpp"

namespace pnp {

/// Working quantities of the 3D circle average for a pair (P0, P1).
struct AvgContext {
  UnitVec3 z;              // normalized n0 x n1
  double hbar = 0;         // distance between the parallel planes through p0, p1
  double hbar_signed = 0;  // (p1 - p0) . z
  Plane pi0;               // plane through p0 with normal z
  double theta = 0;        // angle between the normals, [0, pi)
  double phi = 0;          // angle between n0 x n1 and p1 - p0, [0, pi]
};

/// Throws UndefinedTheta when the normals are parallel (z undefined) and
/// AntipodalNormals when they are opposite.
AvgContext make_context(const Pnp& p0, const Pnp& p1, const Tolerances& tol = {});

/// Weighted circle average of two point-normal pairs in 3D.
///
/// p1 is projected along z = z(n0, n1) onto the plane through p0, the planar
/// circle average is taken there, and the result is lifted back along z by
/// w * (p1 - p0) . z. For parallel normals the point is the affine average.
/// Any real w is accepted; weights outside [0, 1] extrapolate along the
/// same helix.
Pnp circle_avg_3d(const Pnp& p0, const Pnp& p1, double w,
                  const Tolerances& tol = {});

/// Same construction, with the planar step carried out in 2D coordinates of
/// the orthonormal frame whose first axis is `frame_hint` projected into the
/// plane. The result does not depend on the hint up to rounding.
Pnp circle_avg_3d_in_frame(const Pnp& p0, const Pnp& p1, double w,
                           const Vec3& frame_hint, const Tolerances& tol = {});

/// Intersection of segment [p0, p1] with the plane at fraction w between the
/// two parallel planes: (1 - w) p0 + w p1.
constexpr Vec3 chord_point(const Vec3& p0, const Vec3& p1, double w) {
  return (1.0 - w) * p0 + w * p1;
}

/// Closed-form distance between the circle-average point and chord_point,
/// from the cosine theorem in the plane at fraction w, using
/// |p0^ p1^| = |p0 p1| sin(phi). Throws UndefinedTheta for parallel normals.
double deviation_from_chord(const Pnp& p0, const Pnp& p1, double w,
                            const Tolerances& tol = {});

/// Points of circle_avg_3d at `samples` evenly spaced weights in [0, 1].
std::vector<Vec3> helix_trace(const Pnp& p0, const Pnp& p1, int samples,
                              const Tolerances& tol = {});

}  // namespace pnp
