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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pnp/mesh.hpp"
#include "pnp/mesh_io.hpp"

namespace pnp {

/// Per-edge angle (radians) between the two sides of the edge.
///
/// Triangles: angle between the normals of the two incident faces. Quads:
/// from the edge midpoint, l and r point to the midpoints of the opposite
/// edges in the two faces; the angle is taken between l x e and e x r, so a
/// flat configuration measures zero.
std::vector<double> dihedral_angles(const Mesh& mesh, Execution exec = Execution::Parallel);

/// Angle-deficit curvature per vertex, (2 pi - sum of wedge angles) / A_p,
/// where A_p = 1/6 sum |p v_i| |p v_{i+1}| sin(gamma_i). Throws ZeroArea.
std::vector<double> curvature(const Mesh& mesh, Execution exec = Execution::Parallel);

/// 2 pi minus the wedge angle sum at each vertex.
std::vector<double> angle_deficits(const Mesh& mesh);

/// Spread of curvature over each vertex and its one-ring.
std::vector<double> zeta(const Mesh& mesh, const std::vector<double>& curvature);

/// Mean angle (degrees) between the stored normals and the naive normals of
/// the same mesh.
double normal_deviation_deg(const Mesh& mesh, Execution exec = Execution::Parallel);

struct MetricsReport {
  std::vector<double> dihedral_rad;
  std::vector<double> curvature;
  std::vector<double> zeta;
  double psi_deg = 0;
  double zeta_star = 0;
  std::optional<double> xi_deg;

  /// {"psi_deg", "zeta_star", "xi_deg"} and, with `arrays`, the per-element
  /// vectors under "dihedral_rad", "curvature" and "zeta".
  std::string to_json(bool arrays = false) const;
};

/// psi and zeta* (and xi when requested; needs stored normals).
MetricsReport compute_metrics(const Mesh& mesh, bool with_xi = false,
                              Execution exec = Execution::Parallel);

/// Curvature colour ramp: zero is white, positive values run yellow to red
/// up to `hi`, negative values cyan to blue down to `lo`; values beyond the
/// range are clamped. Requires lo < hi.
class CurvatureRamp {
 public:
  CurvatureRamp(double lo, double hi);
  Rgb operator()(double k) const;

 private:
  double lo_, hi_;
};

/// Pairs of faces that share no vertex and intersect (brute force with a
/// bounding-box prefilter).
std::vector<std::pair<std::int32_t, std::int32_t>> self_intersections(
    const Mesh& mesh, std::size_t max_pairs = 1);

/// Segment/triangle and triangle/triangle predicates used above.
bool segment_hits_triangle(const Vec3& s0, const Vec3& s1, const Vec3& a, const Vec3& b,
                           const Vec3& c);
bool triangles_intersect(const Vec3& a0, const Vec3& a1, const Vec3& a2, const Vec3& b0,
                         const Vec3& b1, const Vec3& b2);

}  // namespace pnp
