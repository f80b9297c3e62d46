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

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "pnp/geom.hpp"
#include "pnp/parallel.hpp"

namespace pnp {

struct Edge {
  std::int32_t a = 0, b = 0;  // a < b
  std::int32_t face_ab = 0;   // face holding the directed edge a -> b
  std::int32_t face_ba = 0;   // face holding b -> a
};

/// Connectivity of a closed, consistently oriented 2-manifold whose faces all
/// have the same arity (3 or 4). Shared between meshes that differ only in
/// geometry.
class Topology {
 public:
  /// Validates and builds adjacency. Throws MixedFaceArity, NonManifold,
  /// OpenBoundary or IndexOutOfRange.
  Topology(std::size_t num_vertices, std::vector<std::int32_t> faces, int arity);

  int arity() const { return arity_; }
  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_faces() const { return faces_.size() / static_cast<std::size_t>(arity_); }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const std::int32_t> face_indices() const { return faces_; }
  std::span<const std::int32_t> face(std::size_t f) const {
    return std::span(faces_).subspan(f * static_cast<std::size_t>(arity_),
                                     static_cast<std::size_t>(arity_));
  }
  std::span<const Edge> edges() const { return edges_; }

  /// Neighbors of v in counterclockwise order around the outward side. Face
  /// ring_faces(v)[i] is the wedge between ring(v)[i] and ring(v)[i + 1].
  std::span<const std::int32_t> ring(std::size_t v) const {
    return std::span(ring_vertices_).subspan(ring_offsets_[v], ring_offsets_[v + 1] - ring_offsets_[v]);
  }
  std::span<const std::int32_t> ring_faces(std::size_t v) const {
    return std::span(ring_faces_).subspan(ring_offsets_[v], ring_offsets_[v + 1] - ring_offsets_[v]);
  }
  std::size_t valence(std::size_t v) const { return ring_offsets_[v + 1] - ring_offsets_[v]; }

  /// Index of the undirected edge {a, b}, or -1.
  std::int32_t edge_index(std::int32_t a, std::int32_t b) const;
  /// Face holding the directed edge a -> b, or -1.
  std::int32_t face_of_halfedge(std::int32_t a, std::int32_t b) const;
  /// Position of v in face f, or -1.
  int corner_of(std::size_t f, std::int32_t v) const;

 private:
  struct HalfEdgeSlot {
    std::int32_t face = -1;
    std::int32_t edge = -1;
  };
  const HalfEdgeSlot* find_halfedge(std::int32_t a, std::int32_t b) const;

  std::size_t num_vertices_;
  int arity_;
  std::vector<std::int32_t> faces_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> ring_offsets_;
  std::vector<std::int32_t> ring_vertices_;
  std::vector<std::int32_t> ring_faces_;
  std::unordered_map<std::uint64_t, HalfEdgeSlot> halfedges_;  // key (a << 32) | b
};

/// Vertex positions, optional per-vertex unit normals, and shared topology.
class Mesh {
 public:
  Mesh(std::vector<Vec3> vertices, std::vector<std::int32_t> faces, int arity,
       std::optional<std::vector<UnitVec3>> normals = std::nullopt);
  /// Accepts faces of any arity and reports MixedFaceArity for mixtures.
  static Mesh from_polygons(std::vector<Vec3> vertices,
                            const std::vector<std::vector<std::int32_t>>& faces,
                            std::optional<std::vector<UnitVec3>> normals = std::nullopt);
  Mesh(std::shared_ptr<const Topology> topology, std::vector<Vec3> vertices,
       std::optional<std::vector<UnitVec3>> normals = std::nullopt);

  const Topology& topology() const { return *topology_; }
  const std::shared_ptr<const Topology>& shared_topology() const { return topology_; }
  int arity() const { return topology_->arity(); }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_faces() const { return topology_->num_faces(); }
  std::size_t num_edges() const { return topology_->num_edges(); }

  std::span<const Vec3> vertices() const { return vertices_; }
  bool has_normals() const { return normals_.has_value(); }
  /// Empty span when the mesh carries no normals.
  std::span<const UnitVec3> normals() const {
    return normals_ ? std::span<const UnitVec3>(*normals_) : std::span<const UnitVec3>();
  }
  std::vector<Pnp> pnps() const;

  Mesh with_normals(std::vector<UnitVec3> normals) const;
  Mesh without_normals() const;

 private:
  void validate_geometry() const;

  std::shared_ptr<const Topology> topology_;
  std::vector<Vec3> vertices_;
  std::optional<std::vector<UnitVec3>> normals_;
};

/// Corner wedge at a vertex: the two ring neighbors bounding one face.
struct Wedge {
  Vec3 to_first;   // v_i - p
  Vec3 to_second;  // v_{i+1} - p
  double angle() const { return angle_between(to_first, to_second); }
};

/// Wedge i around vertex v, between ring(v)[i] and ring(v)[i + 1].
Wedge wedge_at(const Mesh& mesh, std::size_t v, std::size_t i);

/// Angle-weighted average of the unit wedge normals around each vertex.
/// Throws DegenerateCorner for a zero-area wedge and VanishingNormal when the
/// weighted sum has (near) zero length.
std::vector<UnitVec3> naive_normals(const Mesh& mesh, Execution exec = Execution::Parallel);
UnitVec3 naive_normal_at(const Mesh& mesh, std::size_t v);

}  // namespace pnp
