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

#include "pnp/mesh.hpp"

#include <string>

namespace pnp {

namespace {

std::uint64_t halfedge_key(std::int32_t a, std::int32_t b) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

std::string pair_name(std::int32_t a, std::int32_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

Topology::Topology(std::size_t num_vertices, std::vector<std::int32_t> faces, int arity)
    : num_vertices_(num_vertices), arity_(arity), faces_(std::move(faces)) {
  if (arity_ != 3 && arity_ != 4) {
    throw Error(ErrorKind::InvalidArgument,
                "face arity " + std::to_string(arity_) + " is not supported");
  }
  const auto n = static_cast<std::size_t>(arity_);
  if (faces_.empty() || faces_.size() % n != 0) {
    throw Error(ErrorKind::InvalidArgument, "face index list is empty or not a multiple of the arity");
  }
  const std::size_t num_faces = faces_.size() / n;

  std::vector<std::size_t> incident(num_vertices_, 0);
  for (std::size_t f = 0; f < num_faces; ++f) {
    const auto fv = face(f);
    for (std::size_t c = 0; c < n; ++c) {
      if (fv[c] < 0 || static_cast<std::size_t>(fv[c]) >= num_vertices_) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "face " + std::to_string(f) + " references vertex " + std::to_string(fv[c]));
      }
      for (std::size_t d = c + 1; d < n; ++d) {
        if (fv[c] == fv[d]) {
          throw Error(ErrorKind::NonManifold,
                      "face " + std::to_string(f) + " repeats vertex " + std::to_string(fv[c]));
        }
      }
      ++incident[static_cast<std::size_t>(fv[c])];
    }
  }
  for (std::size_t v = 0; v < num_vertices_; ++v) {
    if (incident[v] == 0) {
      throw Error(ErrorKind::NonManifold, "vertex " + std::to_string(v) + " is not used by any face");
    }
  }

  halfedges_.reserve(faces_.size());
  for (std::size_t f = 0; f < num_faces; ++f) {
    const auto fv = face(f);
    for (std::size_t c = 0; c < n; ++c) {
      const std::int32_t a = fv[c], b = fv[(c + 1) % n];
      const auto [it, inserted] =
          halfedges_.emplace(halfedge_key(a, b), HalfEdgeSlot{static_cast<std::int32_t>(f), -1});
      if (!inserted) {
        throw Error(ErrorKind::NonManifold,
                    "directed edge " + pair_name(a, b) +
                        " appears twice (non-manifold edge or inconsistent orientation)");
      }
    }
  }

  edges_.reserve(faces_.size() / 2);
  for (std::size_t f = 0; f < num_faces; ++f) {
    const auto fv = face(f);
    for (std::size_t c = 0; c < n; ++c) {
      const std::int32_t a = fv[c], b = fv[(c + 1) % n];
      const auto twin = halfedges_.find(halfedge_key(b, a));
      if (twin == halfedges_.end()) {
        throw Error(ErrorKind::OpenBoundary, "edge " + pair_name(a, b) + " has only one incident face");
      }
      if (a < b) {
        const auto id = static_cast<std::int32_t>(edges_.size());
        edges_.push_back({a, b, static_cast<std::int32_t>(f), twin->second.face});
        halfedges_.at(halfedge_key(a, b)).edge = id;
        twin->second.edge = id;
      }
    }
  }

  // One-rings: walk from any incident face to the face across the edge
  // p -> prev(p), which continues the counterclockwise fan.
  std::vector<std::int32_t> start_face(num_vertices_, -1);
  for (std::size_t f = 0; f < num_faces; ++f) {
    for (std::int32_t v : face(f)) {
      if (start_face[static_cast<std::size_t>(v)] < 0) {
        start_face[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(f);
      }
    }
  }
  ring_offsets_.assign(num_vertices_ + 1, 0);
  for (std::size_t v = 0; v < num_vertices_; ++v) ring_offsets_[v + 1] = ring_offsets_[v] + incident[v];
  ring_vertices_.resize(ring_offsets_.back());
  ring_faces_.resize(ring_offsets_.back());

  for (std::size_t v = 0; v < num_vertices_; ++v) {
    const auto p = static_cast<std::int32_t>(v);
    std::int32_t f = start_face[v];
    std::size_t count = 0;
    do {
      if (count == incident[v]) {
        throw Error(ErrorKind::NonManifold, "vertex " + std::to_string(v) + " has a non-manifold fan");
      }
      const auto fv = face(static_cast<std::size_t>(f));
      const int c = corner_of(static_cast<std::size_t>(f), p);
      const std::int32_t next = fv[(static_cast<std::size_t>(c) + 1) % n];
      const std::int32_t prev = fv[(static_cast<std::size_t>(c) + n - 1) % n];
      ring_vertices_[ring_offsets_[v] + count] = next;
      ring_faces_[ring_offsets_[v] + count] = f;
      ++count;
      f = face_of_halfedge(p, prev);
    } while (f != start_face[v]);
    if (count != incident[v]) {
      throw Error(ErrorKind::NonManifold,
                  "vertex " + std::to_string(v) + " joins several fans (non-manifold vertex)");
    }
  }
}

const Topology::HalfEdgeSlot* Topology::find_halfedge(std::int32_t a, std::int32_t b) const {
  const auto it = halfedges_.find(halfedge_key(a, b));
  return it == halfedges_.end() ? nullptr : &it->second;
}

std::int32_t Topology::edge_index(std::int32_t a, std::int32_t b) const {
  const HalfEdgeSlot* slot = find_halfedge(a, b);
  return slot ? slot->edge : -1;
}

std::int32_t Topology::face_of_halfedge(std::int32_t a, std::int32_t b) const {
  const HalfEdgeSlot* slot = find_halfedge(a, b);
  return slot ? slot->face : -1;
}

int Topology::corner_of(std::size_t f, std::int32_t v) const {
  const auto fv = face(f);
  for (std::size_t c = 0; c < fv.size(); ++c) {
    if (fv[c] == v) return static_cast<int>(c);
  }
  return -1;
}

Mesh::Mesh(std::vector<Vec3> vertices, std::vector<std::int32_t> faces, int arity,
           std::optional<std::vector<UnitVec3>> normals)
    : topology_(std::make_shared<const Topology>(vertices.size(), std::move(faces), arity)),
      vertices_(std::move(vertices)),
      normals_(std::move(normals)) {
  validate_geometry();
}

Mesh::Mesh(std::shared_ptr<const Topology> topology, std::vector<Vec3> vertices,
           std::optional<std::vector<UnitVec3>> normals)
    : topology_(std::move(topology)), vertices_(std::move(vertices)), normals_(std::move(normals)) {
  validate_geometry();
}

void Mesh::validate_geometry() const {
  if (vertices_.size() != topology_->num_vertices()) {
    throw Error(ErrorKind::InvalidArgument, "vertex count does not match topology");
  }
  for (const Vec3& p : vertices_) {
    if (!is_finite(p)) throw Error(ErrorKind::InvalidArgument, "non-finite vertex coordinate");
  }
  if (normals_ && normals_->size() != vertices_.size()) {
    throw Error(ErrorKind::InvalidArgument, "normal count does not match vertex count");
  }
}

Mesh Mesh::from_polygons(std::vector<Vec3> vertices,
                         const std::vector<std::vector<std::int32_t>>& faces,
                         std::optional<std::vector<UnitVec3>> normals) {
  if (faces.empty()) throw Error(ErrorKind::InvalidArgument, "mesh has no faces");
  const std::size_t arity = faces.front().size();
  std::vector<std::int32_t> flat;
  flat.reserve(faces.size() * arity);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (faces[f].size() != arity) {
      throw Error(ErrorKind::MixedFaceArity,
                  "face " + std::to_string(f) + " has " + std::to_string(faces[f].size()) +
                      " corners, expected " + std::to_string(arity));
    }
    flat.insert(flat.end(), faces[f].begin(), faces[f].end());
  }
  return Mesh(std::move(vertices), std::move(flat), static_cast<int>(arity), std::move(normals));
}

std::vector<Pnp> Mesh::pnps() const {
  if (!normals_) throw Error(ErrorKind::MissingNormals, "mesh has no vertex normals");
  std::vector<Pnp> out(vertices_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {vertices_[i], (*normals_)[i]};
  return out;
}

Mesh Mesh::with_normals(std::vector<UnitVec3> normals) const {
  return Mesh(topology_, vertices_, std::move(normals));
}

Mesh Mesh::without_normals() const { return Mesh(topology_, vertices_); }

Wedge wedge_at(const Mesh& mesh, std::size_t v, std::size_t i) {
  const auto ring = mesh.topology().ring(v);
  const Vec3& p = mesh.vertices()[v];
  const auto first = static_cast<std::size_t>(ring[i]);
  const auto second = static_cast<std::size_t>(ring[(i + 1) % ring.size()]);
  return {mesh.vertices()[first] - p, mesh.vertices()[second] - p};
}

UnitVec3 naive_normal_at(const Mesh& mesh, std::size_t v) {
  const std::size_t k = mesh.topology().valence(v);
  Vec3 sum;
  double total_angle = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Wedge w = wedge_at(mesh, v, i);
    const Vec3 c = cross(w.to_first, w.to_second);
    const double cn = norm(c);
    if (!(cn > 1e-12 * norm(w.to_first) * norm(w.to_second))) {
      throw Error(ErrorKind::DegenerateCorner,
                  "vertex " + std::to_string(v) + " has a degenerate corner in wedge " +
                      std::to_string(i));
    }
    const double gamma = std::atan2(cn, dot(w.to_first, w.to_second));
    sum += (gamma / cn) * c;
    total_angle += gamma;
  }
  sum = sum / total_angle;
  if (!(norm(sum) > 1e-12)) {
    throw Error(ErrorKind::VanishingNormal,
                "wedge normals cancel at vertex " + std::to_string(v));
  }
  return UnitVec3::normalized(sum);
}

std::vector<UnitVec3> naive_normals(const Mesh& mesh, Execution exec) {
  std::vector<UnitVec3> out(mesh.num_vertices());
  for_each_index(out.size(), exec, [&](std::size_t v) { out[v] = naive_normal_at(mesh, v); });
  return out;
}

}  // namespace pnp
