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

#include "shapes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>
#include <utility>

namespace pnp::testing {
namespace {

using Faces = std::vector<std::int32_t>;

// Reverses every face whose Newell normal points towards `center`. Only valid
// for meshes that are star-shaped about `center`.
void orient_outward(const std::vector<Vec3>& vertices, Faces& faces, int arity, const Vec3& center) {
  for (std::size_t f = 0; f < faces.size(); f += static_cast<std::size_t>(arity)) {
    Vec3 newell{}, centroid{};
    for (int i = 0; i < arity; ++i) {
      const Vec3& a = vertices[static_cast<std::size_t>(faces[f + static_cast<std::size_t>(i)])];
      const Vec3& b =
          vertices[static_cast<std::size_t>(faces[f + static_cast<std::size_t>((i + 1) % arity)])];
      newell += cross(a, b);
      centroid += a;
    }
    centroid = centroid / static_cast<double>(arity);
    if (dot(newell, centroid - center) < 0) {
      std::reverse(faces.begin() + static_cast<std::ptrdiff_t>(f),
                   faces.begin() + static_cast<std::ptrdiff_t>(f) + arity);
    }
  }
}

Faces split_quads(const Faces& quads) {
  Faces tris;
  tris.reserve(quads.size() / 4 * 6);
  for (std::size_t f = 0; f < quads.size(); f += 4) {
    tris.insert(tris.end(), {quads[f], quads[f + 1], quads[f + 2]});
    tris.insert(tris.end(), {quads[f], quads[f + 2], quads[f + 3]});
  }
  return tris;
}

struct IcoData {
  std::vector<Vec3> vertices;
  Faces faces;
};

IcoData icosahedron_data() {
  const double g = std::numbers::phi;
  IcoData d;
  d.vertices = {{-1, g, 0}, {1, g, 0}, {-1, -g, 0}, {1, -g, 0}, {0, -1, g},  {0, 1, g},
                {0, -1, -g}, {0, 1, -g}, {g, 0, -1}, {g, 0, 1},  {-g, 0, -1}, {-g, 0, 1}};
  for (Vec3& v : d.vertices) v = v / norm(v);
  d.faces = {0, 11, 5, 0, 5,  1,  0, 1, 7, 0, 7,  10, 0, 10, 11, 1, 5, 9, 5, 11,
             4, 11, 10, 2, 10, 7, 6,  7, 1, 8, 3, 9,  4,  3, 4, 2,  3, 2, 6, 3,
             6, 8,  3, 8, 9,  4, 9, 5,  2, 4, 11, 6, 2,  10, 8, 6, 7, 9, 8, 1};
  orient_outward(d.vertices, d.faces, 3, Vec3{});
  return d;
}

IcoData ico_sphere_data(int levels) {
  IcoData d = icosahedron_data();
  for (int level = 0; level < levels; ++level) {
    std::map<std::pair<std::int32_t, std::int32_t>, std::int32_t> mids;
    auto mid = [&](std::int32_t a, std::int32_t b) {
      auto key = std::minmax(a, b);
      auto [it, inserted] = mids.try_emplace(key, static_cast<std::int32_t>(d.vertices.size()));
      if (inserted) {
        const Vec3 m = d.vertices[static_cast<std::size_t>(a)] + d.vertices[static_cast<std::size_t>(b)];
        d.vertices.push_back(m / norm(m));
      }
      return it->second;
    };
    Faces next;
    next.reserve(d.faces.size() * 4);
    for (std::size_t f = 0; f < d.faces.size(); f += 3) {
      const std::int32_t a = d.faces[f], b = d.faces[f + 1], c = d.faces[f + 2];
      const std::int32_t ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
      next.insert(next.end(), {a, ab, ca, b, bc, ab, c, ca, bc, ab, bc, ca});
    }
    d.faces = std::move(next);
  }
  return d;
}

std::vector<Vec3> box_grid_vertices(int n, Faces& faces) {
  const int m = n + 1;
  std::map<int, std::int32_t> ids;
  std::vector<Vec3> vertices;
  auto id = [&](int i, int j, int k) {
    auto [it, inserted] = ids.try_emplace((i * m + j) * m + k, static_cast<std::int32_t>(vertices.size()));
    if (inserted) {
      vertices.push_back(Vec3{2.0 * i / n - 1.0, 2.0 * j / n - 1.0, 2.0 * k / n - 1.0});
    }
    return it->second;
  };
  for (int axis = 0; axis < 3; ++axis) {
    for (int side : {0, n}) {
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          auto corner = [&](int du, int dv) {
            int c[3];
            c[axis] = side;
            c[(axis + 1) % 3] = u + du;
            c[(axis + 2) % 3] = v + dv;
            return id(c[0], c[1], c[2]);
          };
          faces.insert(faces.end(), {corner(0, 0), corner(1, 0), corner(1, 1), corner(0, 1)});
        }
      }
    }
  }
  orient_outward(vertices, faces, 4, Vec3{});
  return vertices;
}

}  // namespace

Mesh cube() {
  std::vector<Vec3> v = {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0},
                         {0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}};
  Faces f = {0, 3, 2, 1, 4, 5, 6, 7, 0, 1, 5, 4, 2, 3, 7, 6, 0, 4, 7, 3, 1, 2, 6, 5};
  orient_outward(v, f, 4, Vec3{0.5, 0.5, 0.5});
  return Mesh(std::move(v), std::move(f), 4);
}

Mesh tetrahedron() {
  std::vector<Vec3> v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  Faces f = {0, 1, 2, 0, 3, 1, 0, 2, 3, 1, 3, 2};
  orient_outward(v, f, 3, Vec3{});
  return Mesh(std::move(v), std::move(f), 3);
}

Mesh octahedron() {
  const double h = 1.0 / std::numbers::sqrt2;
  std::vector<Vec3> v = {{h, 0, 0}, {-h, 0, 0}, {0, h, 0}, {0, -h, 0}, {0, 0, h}, {0, 0, -h}};
  Faces f;
  for (std::int32_t x : {0, 1}) {
    for (std::int32_t y : {2, 3}) {
      for (std::int32_t z : {4, 5}) f.insert(f.end(), {x, y, z});
    }
  }
  orient_outward(v, f, 3, Vec3{});
  return Mesh(std::move(v), std::move(f), 3);
}

Mesh icosahedron() {
  IcoData d = icosahedron_data();
  return Mesh(std::move(d.vertices), std::move(d.faces), 3);
}

Mesh box_grid(int n) {
  Faces faces;
  std::vector<Vec3> vertices = box_grid_vertices(n, faces);
  return Mesh(std::move(vertices), std::move(faces), 4);
}

Mesh quad_sphere(int n) {
  Faces faces;
  std::vector<Vec3> vertices = box_grid_vertices(n, faces);
  for (Vec3& v : vertices) v = v / norm(v);
  return Mesh(std::move(vertices), std::move(faces), 4);
}

Mesh ico_sphere(int levels) {
  IcoData d = ico_sphere_data(levels);
  return Mesh(std::move(d.vertices), std::move(d.faces), 3);
}

Mesh torus(int rings, int sides, double major, double minor, bool triangles) {
  std::vector<Vec3> vertices;
  vertices.reserve(static_cast<std::size_t>(rings * sides));
  for (int i = 0; i < rings; ++i) {
    const double u = 2 * std::numbers::pi * i / rings;
    for (int j = 0; j < sides; ++j) {
      const double v = 2 * std::numbers::pi * j / sides;
      const double r = major + minor * std::cos(v);
      vertices.push_back(Vec3{r * std::cos(u), r * std::sin(u), minor * std::sin(v)});
    }
  }
  auto id = [&](int i, int j) { return static_cast<std::int32_t>((i % rings) * sides + (j % sides)); };
  Faces quads;
  for (int i = 0; i < rings; ++i) {
    for (int j = 0; j < sides; ++j) {
      quads.insert(quads.end(), {id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  if (triangles) return Mesh(std::move(vertices), split_quads(quads), 3);
  return Mesh(std::move(vertices), std::move(quads), 4);
}

Mesh flat_pillow(int n, bool triangles) {
  const int m = n + 1;
  std::vector<Vec3> vertices;
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) vertices.push_back(Vec3{double(i) / n, double(j) / n, 0});
  }
  std::vector<std::int32_t> bottom(static_cast<std::size_t>(m * m));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      const auto top = static_cast<std::int32_t>(j * m + i);
      const bool border = i == 0 || j == 0 || i == n || j == n;
      if (border) {
        bottom[static_cast<std::size_t>(top)] = top;
      } else {
        bottom[static_cast<std::size_t>(top)] = static_cast<std::int32_t>(vertices.size());
        vertices.push_back(vertices[static_cast<std::size_t>(top)]);
      }
    }
  }
  auto lo = [&](std::int32_t t) { return bottom[static_cast<std::size_t>(t)]; };
  Faces quads;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      auto a = static_cast<std::int32_t>(j * m + i), b = a + 1, c = a + 1 + m, d = a + m;
      // split_quads cuts along the first corner's diagonal. A diagonal between two
      // border vertices would be shared by both sheets, so rotate the quad to
      // start at a corner with an interior vertex on its diagonal.
      if (triangles && lo(a) == a && lo(c) == c) {
        std::tie(a, b, c, d) = std::tuple(b, c, d, a);
      }
      quads.insert(quads.end(), {a, b, c, d});
      quads.insert(quads.end(), {lo(a), lo(d), lo(c), lo(b)});
    }
  }
  if (triangles) return Mesh(std::move(vertices), split_quads(quads), 3);
  return Mesh(std::move(vertices), std::move(quads), 4);
}

Mesh tube(int sides) {
  // A thin tube, radius 0.2 and length 4, whose rings crowd at both ends so
  // that edges along the axis are either 0.02 or about 4 long.
  const double radius = 0.2;
  const std::vector<double> heights = {0.0, 0.02, 4.0, 4.02};
  std::vector<Vec3> vertices;
  for (double z : heights) {
    for (int j = 0; j < sides; ++j) {
      const double a = 2 * std::numbers::pi * j / sides;
      vertices.push_back(Vec3{radius * std::cos(a), radius * std::sin(a), z});
    }
  }
  const auto bottom = static_cast<std::int32_t>(vertices.size());
  vertices.push_back(Vec3{0, 0, heights.front() - 0.1});
  const auto top = static_cast<std::int32_t>(vertices.size());
  vertices.push_back(Vec3{0, 0, heights.back() + 0.1});

  const int rings = static_cast<int>(heights.size());
  auto id = [&](int k, int j) { return static_cast<std::int32_t>(k * sides + (j % sides)); };
  Faces quads;
  for (int k = 0; k + 1 < rings; ++k) {
    for (int j = 0; j < sides; ++j) {
      quads.insert(quads.end(), {id(k, j), id(k, j + 1), id(k + 1, j + 1), id(k + 1, j)});
    }
  }
  Faces f = split_quads(quads);
  for (int j = 0; j < sides; ++j) {
    f.insert(f.end(), {bottom, id(0, j + 1), id(0, j)});
    f.insert(f.end(), {top, id(rings - 1, j), id(rings - 1, j + 1)});
  }
  orient_outward(vertices, f, 3, Vec3{0, 0, 0.5 * (heights.front() + heights.back())});
  return Mesh(std::move(vertices), std::move(f), 3);
}

Mesh bumpy_sphere(int levels, double amplitude) {
  IcoData d = ico_sphere_data(levels);
  for (Vec3& v : d.vertices) {
    const double r = 1 + amplitude * std::sin(3 * v.x) * std::sin(2 * v.y + 0.5) * std::cos(v.z);
    v = r * v;
  }
  return Mesh(std::move(d.vertices), std::move(d.faces), 3);
}

Mesh with_radial_normals(const Mesh& mesh) {
  std::vector<UnitVec3> normals;
  normals.reserve(mesh.num_vertices());
  for (const Vec3& p : mesh.vertices()) normals.push_back(UnitVec3::normalized(p));
  return mesh.with_normals(std::move(normals));
}

Mesh with_constant_normals(const Mesh& mesh, const UnitVec3& n) {
  return mesh.with_normals(std::vector<UnitVec3>(mesh.num_vertices(), n));
}

Vec3 Rigid::rotate(const Vec3& v) const {
  return Vec3{r[0][0] * v.x + r[0][1] * v.y + r[0][2] * v.z,
              r[1][0] * v.x + r[1][1] * v.y + r[1][2] * v.z,
              r[2][0] * v.x + r[2][1] * v.y + r[2][2] * v.z};
}

Vec3 Rigid::apply(const Vec3& p) const { return rotate(p) + t; }

Rigid random_rigid(std::mt19937_64& rng, double translation) {
  std::normal_distribution<double> gauss;
  double w = gauss(rng), x = gauss(rng), y = gauss(rng), z = gauss(rng);
  const double len = std::sqrt(w * w + x * x + y * y + z * z);
  w /= len, x /= len, y /= len, z /= len;
  Rigid out{};
  out.r[0][0] = 1 - 2 * (y * y + z * z);
  out.r[0][1] = 2 * (x * y - w * z);
  out.r[0][2] = 2 * (x * z + w * y);
  out.r[1][0] = 2 * (x * y + w * z);
  out.r[1][1] = 1 - 2 * (x * x + z * z);
  out.r[1][2] = 2 * (y * z - w * x);
  out.r[2][0] = 2 * (x * z - w * y);
  out.r[2][1] = 2 * (y * z + w * x);
  out.r[2][2] = 1 - 2 * (x * x + y * y);
  out.t = Vec3{uniform(rng, -translation, translation), uniform(rng, -translation, translation),
               uniform(rng, -translation, translation)};
  return out;
}

Mesh transformed(const Mesh& mesh, const Rigid& rigid) {
  std::vector<Vec3> vertices;
  vertices.reserve(mesh.num_vertices());
  for (const Vec3& p : mesh.vertices()) vertices.push_back(rigid.apply(p));
  std::optional<std::vector<UnitVec3>> normals;
  if (mesh.has_normals()) {
    normals.emplace();
    for (const UnitVec3& n : mesh.normals()) normals->push_back(UnitVec3::normalized(rigid.rotate(n)));
  }
  return Mesh(mesh.shared_topology(), std::move(vertices), std::move(normals));
}

Mesh scaled(const Mesh& mesh, double s) {
  std::vector<Vec3> vertices;
  vertices.reserve(mesh.num_vertices());
  for (const Vec3& p : mesh.vertices()) vertices.push_back(s * p);
  std::optional<std::vector<UnitVec3>> normals;
  if (mesh.has_normals()) normals.emplace(mesh.normals().begin(), mesh.normals().end());
  return Mesh(mesh.shared_topology(), std::move(vertices), std::move(normals));
}

UnitVec3 random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    const Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
    if (norm(v) > 1e-3) return UnitVec3::normalized(v);
  }
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double max_distance(std::span<const Vec3> a, std::span<const Vec3> b) {
  double worst = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) worst = std::max(worst, distance(a[i], b[i]));
  return a.size() == b.size() ? worst : INFINITY;
}

double max_angle(std::span<const UnitVec3> a, std::span<const UnitVec3> b) {
  double worst = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    worst = std::max(worst, angle_between(a[i], b[i]));
  }
  return a.size() == b.size() ? worst : INFINITY;
}

}  // namespace pnp::testing
