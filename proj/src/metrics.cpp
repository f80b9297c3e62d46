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

#include "pnp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"

namespace pnp {

namespace {

constexpr double kDegrees = 180.0 / std::numbers::pi;

Vec3 triangle_normal(const Mesh& mesh, std::int32_t f) {
  const auto fv = mesh.topology().face(static_cast<std::size_t>(f));
  const auto at = [&](std::size_t c) { return mesh.vertices()[static_cast<std::size_t>(fv[c])]; };
  const Vec3 n = cross(at(1) - at(0), at(2) - at(0));
  if (!(norm(n) > 0)) {
    throw Error(ErrorKind::DegenerateFace, "face " + std::to_string(f) + " has zero area");
  }
  return n;
}

double quad_edge_angle(const Mesh& mesh, const Edge& e) {
  const auto& t = mesh.topology();
  const auto p = mesh.vertices();
  const auto at = [&](std::int32_t i) { return p[static_cast<std::size_t>(i)]; };
  const auto opposite_mid = [&](std::int32_t f, std::int32_t from) {
    const auto fv = t.face(static_cast<std::size_t>(f));
    const auto c = static_cast<std::size_t>(t.corner_of(static_cast<std::size_t>(f), from));
    return 0.5 * (at(fv[(c + 2) % 4]) + at(fv[(c + 3) % 4]));
  };
  const Vec3 mid = 0.5 * (at(e.a) + at(e.b));
  const Vec3 dir = at(e.b) - at(e.a);
  const Vec3 left = opposite_mid(e.face_ab, e.a) - mid;
  const Vec3 right = opposite_mid(e.face_ba, e.b) - mid;
  const Vec3 n_left = cross(left, dir);
  const Vec3 n_right = cross(dir, right);
  if (!(norm(n_left) > 0) || !(norm(n_right) > 0)) {
    throw Error(ErrorKind::DegenerateFace,
                "edge (" + std::to_string(e.a) + ", " + std::to_string(e.b) + ") has a degenerate side");
  }
  return angle_between(n_left, n_right);
}

}  // namespace

std::vector<double> dihedral_angles(const Mesh& mesh, Execution exec) {
  const auto edges = mesh.topology().edges();
  std::vector<double> out(edges.size());
  for_each_index(out.size(), exec, [&](std::size_t i) {
    const Edge& e = edges[i];
    out[i] = mesh.arity() == 3
                 ? angle_between(triangle_normal(mesh, e.face_ab), triangle_normal(mesh, e.face_ba))
                 : quad_edge_angle(mesh, e);
  });
  return out;
}

std::vector<double> angle_deficits(const Mesh& mesh) {
  std::vector<double> out(mesh.num_vertices());
  for (std::size_t v = 0; v < out.size(); ++v) {
    double sum = 0;
    for (std::size_t i = 0; i < mesh.topology().valence(v); ++i) sum += wedge_at(mesh, v, i).angle();
    out[v] = 2.0 * std::numbers::pi - sum;
  }
  return out;
}

std::vector<double> curvature(const Mesh& mesh, Execution exec) {
  std::vector<double> out(mesh.num_vertices());
  for_each_index(out.size(), exec, [&](std::size_t v) {
    double angle_sum = 0, area = 0;
    for (std::size_t i = 0; i < mesh.topology().valence(v); ++i) {
      const Wedge w = wedge_at(mesh, v, i);
      const double gamma = w.angle();
      angle_sum += gamma;
      area += norm(w.to_first) * norm(w.to_second) * std::sin(gamma);
    }
    area /= 6.0;
    if (!(area > 1e-15)) {
      throw Error(ErrorKind::ZeroArea, "vertex " + std::to_string(v) + " has a zero-area cell");
    }
    out[v] = (2.0 * std::numbers::pi - angle_sum) / area;
  });
  return out;
}

std::vector<double> zeta(const Mesh& mesh, const std::vector<double>& k) {
  std::vector<double> out(mesh.num_vertices());
  for (std::size_t v = 0; v < out.size(); ++v) {
    double lo = k[v], hi = k[v];
    for (std::int32_t r : mesh.topology().ring(v)) {
      lo = std::min(lo, k[static_cast<std::size_t>(r)]);
      hi = std::max(hi, k[static_cast<std::size_t>(r)]);
    }
    out[v] = std::abs(hi - lo);
  }
  return out;
}

double normal_deviation_deg(const Mesh& mesh, Execution exec) {
  if (!mesh.has_normals()) {
    throw Error(ErrorKind::MissingNormals, "normal deviation needs stored normals");
  }
  const std::vector<UnitVec3> naive = naive_normals(mesh, exec);
  const auto stored = mesh.normals();
  double sum = 0;
  for (std::size_t v = 0; v < naive.size(); ++v) sum += angle_between(stored[v], naive[v]);
  return sum / static_cast<double>(naive.size()) * kDegrees;
}

MetricsReport compute_metrics(const Mesh& mesh, bool with_xi, Execution exec) {
  MetricsReport r;
  r.dihedral_rad = dihedral_angles(mesh, exec);
  r.curvature = curvature(mesh, exec);
  r.zeta = zeta(mesh, r.curvature);
  r.psi_deg = *std::max_element(r.dihedral_rad.begin(), r.dihedral_rad.end()) * kDegrees;
  r.zeta_star = *std::max_element(r.zeta.begin(), r.zeta.end());
  if (with_xi) r.xi_deg = normal_deviation_deg(mesh, exec);
  return r;
}

std::string MetricsReport::to_json(bool arrays) const {
  nlohmann::ordered_json j;
  j["psi_deg"] = psi_deg;
  j["zeta_star"] = zeta_star;
  j["xi_deg"] = xi_deg ? nlohmann::ordered_json(*xi_deg) : nlohmann::ordered_json(nullptr);
  if (arrays) {
    j["dihedral_rad"] = dihedral_rad;
    j["curvature"] = curvature;
    j["zeta"] = zeta;
  }
  return j.dump(2) + "\n";
}

CurvatureRamp::CurvatureRamp(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error(ErrorKind::InvalidArgument, "colour range needs lo < hi");
  }
}

Rgb CurvatureRamp::operator()(double k) const {
  const auto mix = [](Rgb a, Rgb b, double t) {
    Rgb out;
    for (int i = 0; i < 3; ++i) out[i] = static_cast<std::uint8_t>(std::lround(a[i] + (b[i] - a[i]) * t));
    return out;
  };
  const double scale = std::max(std::abs(lo_), std::abs(hi_));
  if (std::abs(k) <= 1e-9 * scale) return {255, 255, 255};
  if (k > 0) {
    const double t = hi_ > 0 ? std::clamp(k / hi_, 0.0, 1.0) : 1.0;
    return mix({255, 255, 0}, {255, 0, 0}, t);
  }
  const double t = lo_ < 0 ? std::clamp(k / lo_, 0.0, 1.0) : 1.0;
  return mix({0, 255, 255}, {0, 0, 255}, t);
}

bool segment_hits_triangle(const Vec3& s0, const Vec3& s1, const Vec3& a, const Vec3& b,
                           const Vec3& c) {
  // Moller-Trumbore restricted to the segment, boundaries included.
  const Vec3 dir = s1 - s0;
  const Vec3 e1 = b - a, e2 = c - a;
  const Vec3 h = cross(dir, e2);
  const double det = dot(e1, h);
  const double scale = norm(dir) * norm(e1) * norm(e2);
  if (std::abs(det) <= 1e-14 * scale) return false;  // parallel or coplanar
  const double inv = 1.0 / det;
  const Vec3 s = s0 - a;
  const double u = inv * dot(s, h);
  if (u < 0.0 || u > 1.0) return false;
  const Vec3 q = cross(s, e1);
  const double v = inv * dot(dir, q);
  if (v < 0.0 || u + v > 1.0) return false;
  const double t = inv * dot(e2, q);
  return t >= 0.0 && t <= 1.0;
}

bool triangles_intersect(const Vec3& a0, const Vec3& a1, const Vec3& a2, const Vec3& b0,
                         const Vec3& b1, const Vec3& b2) {
  return segment_hits_triangle(a0, a1, b0, b1, b2) || segment_hits_triangle(a1, a2, b0, b1, b2) ||
         segment_hits_triangle(a2, a0, b0, b1, b2) || segment_hits_triangle(b0, b1, a0, a1, a2) ||
         segment_hits_triangle(b1, b2, a0, a1, a2) || segment_hits_triangle(b2, b0, a0, a1, a2);
}

std::vector<std::pair<std::int32_t, std::int32_t>> self_intersections(const Mesh& mesh,
                                                                      std::size_t max_pairs) {
  const auto& t = mesh.topology();
  const auto p = mesh.vertices();
  struct Box {
    Vec3 lo, hi;
    std::int32_t face;
  };
  std::vector<Box> boxes(mesh.num_faces());
  for (std::size_t f = 0; f < boxes.size(); ++f) {
    Box& b = boxes[f];
    b.face = static_cast<std::int32_t>(f);
    b.lo = b.hi = p[static_cast<std::size_t>(t.face(f)[0])];
    for (std::int32_t v : t.face(f)) {
      const Vec3& q = p[static_cast<std::size_t>(v)];
      b.lo = {std::min(b.lo.x, q.x), std::min(b.lo.y, q.y), std::min(b.lo.z, q.z)};
      b.hi = {std::max(b.hi.x, q.x), std::max(b.hi.y, q.y), std::max(b.hi.z, q.z)};
    }
  }
  std::sort(boxes.begin(), boxes.end(), [](const Box& a, const Box& b) {
    return a.lo.x != b.lo.x ? a.lo.x < b.lo.x : a.face < b.face;
  });

  // Quads are split along the 0-2 diagonal.
  const auto triangles = [&](std::int32_t f) {
    const auto fv = t.face(static_cast<std::size_t>(f));
    std::vector<std::array<Vec3, 3>> out;
    const auto at = [&](std::size_t c) { return p[static_cast<std::size_t>(fv[c])]; };
    out.push_back({at(0), at(1), at(2)});
    if (fv.size() == 4) out.push_back({at(0), at(2), at(3)});
    return out;
  };
  const auto share_vertex = [&](std::int32_t f, std::int32_t g) {
    for (std::int32_t a : t.face(static_cast<std::size_t>(f))) {
      for (std::int32_t b : t.face(static_cast<std::size_t>(g))) {
        if (a == b) return true;
      }
    }
    return false;
  };

  std::vector<std::pair<std::int32_t, std::int32_t>> hits;
  for (std::size_t i = 0; i < boxes.size() && hits.size() < max_pairs; ++i) {
    for (std::size_t j = i + 1; j < boxes.size() && boxes[j].lo.x <= boxes[i].hi.x; ++j) {
      const Box& a = boxes[i];
      const Box& b = boxes[j];
      if (a.lo.y > b.hi.y || b.lo.y > a.hi.y || a.lo.z > b.hi.z || b.lo.z > a.hi.z) continue;
      if (share_vertex(a.face, b.face)) continue;
      bool hit = false;
      for (const auto& ta : triangles(a.face)) {
        for (const auto& tb : triangles(b.face)) {
          hit = hit || triangles_intersect(ta[0], ta[1], ta[2], tb[0], tb[1], tb[2]);
        }
      }
      if (hit) {
        hits.emplace_back(std::min(a.face, b.face), std::max(a.face, b.face));
        if (hits.size() >= max_pairs) break;
      }
    }
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

}  // namespace pnp
