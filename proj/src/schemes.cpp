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

#include "pnp/schemes.hpp"

#include <array>
#include <cctype>
#include <numbers>

#include "pnp/circle3d.hpp"

namespace pnp {

std::string name(SchemeKind kind) {
  std::string base;
  switch (kind.base) {
    case Scheme::CatmullClark: base = "CC"; break;
    case Scheme::Loop: base = "LP"; break;
    case Scheme::Kobbelt4: base = "K4"; break;
    case Scheme::Butterfly: base = "BY"; break;
  }
  return kind.mode == Mode::Modified ? "M" + base : base;
}

std::optional<Scheme> parse_scheme(std::string_view text) {
  std::string lower(text);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "cc") return Scheme::CatmullClark;
  if (lower == "lp") return Scheme::Loop;
  if (lower == "k4") return Scheme::Kobbelt4;
  if (lower == "by") return Scheme::Butterfly;
  return std::nullopt;
}

int required_arity(Scheme scheme) {
  return scheme == Scheme::CatmullClark || scheme == Scheme::Kobbelt4 ? 4 : 3;
}

bool is_interpolatory(Scheme scheme) {
  return scheme == Scheme::Kobbelt4 || scheme == Scheme::Butterfly;
}

namespace {

using Terms = std::vector<StencilTerm>;

constexpr std::array<double, 4> kFourPoint = {-1.0 / 16, 9.0 / 16, 9.0 / 16, -1.0 / 16};

void add_face(Terms& terms, const Topology& t, std::int32_t f, double weight) {
  const auto fv = t.face(static_cast<std::size_t>(f));
  const double share = weight / static_cast<double>(fv.size());
  for (std::int32_t v : fv) terms.push_back({v, share});
}

// Vertex of triangle f other than a and b.
std::int32_t third_vertex(const Topology& t, std::int32_t f, std::int32_t a, std::int32_t b) {
  for (std::int32_t v : t.face(static_cast<std::size_t>(f))) {
    if (v != a && v != b) return v;
  }
  return -1;
}

// Vertex reached by continuing straight through a valence-4 vertex.
std::int32_t straight(const Topology& t, std::int32_t from, std::int32_t through) {
  const auto ring = t.ring(static_cast<std::size_t>(through));
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (ring[i] == from) return ring[(i + 2) % 4];
  }
  return -1;
}

// Corner of the quad diagonally opposite face f across its corner v
// (valence-4 v).
std::int32_t diagonal(const Topology& t, std::int32_t v, std::int32_t f) {
  const auto faces = t.ring_faces(static_cast<std::size_t>(v));
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i] == f) {
      const auto g = static_cast<std::size_t>(faces[(i + 2) % 4]);
      const int c = t.corner_of(g, v);
      return t.face(g)[(static_cast<std::size_t>(c) + 2) % 4];
    }
  }
  return -1;
}

Stencil catmull_clark_edge(const Topology& t, const Edge& e) {
  Terms terms{{e.a, 0.25}, {e.b, 0.25}};
  add_face(terms, t, e.face_ab, 0.25);
  add_face(terms, t, e.face_ba, 0.25);
  return Stencil::merged(std::move(terms));
}

Stencil catmull_clark_vertex(const Topology& t, std::int32_t v) {
  const auto ring = t.ring(static_cast<std::size_t>(v));
  const auto faces = t.ring_faces(static_cast<std::size_t>(v));
  const double k = static_cast<double>(ring.size());
  // (Q + 2R + (k - 3) P) / k with Q the mean face point and R the mean edge
  // midpoint.
  Terms terms{{v, (k - 3.0) / k + 1.0 / k}};
  for (std::size_t i = 0; i < ring.size(); ++i) {
    terms.push_back({ring[i], 1.0 / (k * k)});
    add_face(terms, t, faces[i], 1.0 / (k * k));
  }
  return Stencil::merged(std::move(terms));
}

Stencil loop_edge(const Topology& t, const Edge& e) {
  return Stencil::merged({{e.a, 3.0 / 8},
                          {e.b, 3.0 / 8},
                          {third_vertex(t, e.face_ab, e.a, e.b), 1.0 / 8},
                          {third_vertex(t, e.face_ba, e.a, e.b), 1.0 / 8}});
}

Stencil loop_vertex(const Topology& t, std::int32_t v) {
  const auto ring = t.ring(static_cast<std::size_t>(v));
  const double k = static_cast<double>(ring.size());
  const double c = 3.0 / 8 + 0.25 * std::cos(2.0 * std::numbers::pi / k);
  const double beta = (5.0 / 8 - c * c) / k;
  Terms terms{{v, 1.0 - k * beta}};
  for (std::int32_t r : ring) terms.push_back({r, beta});
  return Stencil::merged(std::move(terms));
}

Stencil butterfly_edge(const Topology& t, const Edge& e) {
  // face_ab = (a, b, c), face_ba = (b, a, d); wings lie across the remaining
  // edges of both triangles.
  const std::int32_t a = e.a, b = e.b;
  const std::int32_t c = third_vertex(t, e.face_ab, a, b);
  const std::int32_t d = third_vertex(t, e.face_ba, a, b);
  const auto wing = [&](std::int32_t from, std::int32_t to) {
    const std::int32_t f = t.face_of_halfedge(from, to);
    return third_vertex(t, f, from, to);
  };
  return Stencil::merged({{a, 0.5},
                          {b, 0.5},
                          {c, 1.0 / 8},
                          {d, 1.0 / 8},
                          {wing(c, b), -1.0 / 16},
                          {wing(a, c), -1.0 / 16},
                          {wing(d, a), -1.0 / 16},
                          {wing(b, d), -1.0 / 16}});
}

Stencil kobbelt_edge(const Topology& t, const Edge& e) {
  if (t.valence(static_cast<std::size_t>(e.a)) != 4 ||
      t.valence(static_cast<std::size_t>(e.b)) != 4) {
    return Stencil::merged({{e.a, 0.5}, {e.b, 0.5}});
  }
  return Stencil::merged({{straight(t, e.b, e.a), kFourPoint[0]},
                          {e.a, kFourPoint[1]},
                          {e.b, kFourPoint[2]},
                          {straight(t, e.a, e.b), kFourPoint[3]}});
}

Stencil kobbelt_face(const Topology& t, std::int32_t f) {
  const auto fv = t.face(static_cast<std::size_t>(f));
  for (std::int32_t v : fv) {
    if (t.valence(static_cast<std::size_t>(v)) != 4) {
      Terms terms;
      add_face(terms, t, f, 1.0);
      return Stencil::merged(std::move(terms));
    }
  }
  // 4x4 grid; i runs along fv[0] -> fv[1], j along fv[0] -> fv[3].
  const std::int32_t v0 = fv[0], v1 = fv[1], v2 = fv[2], v3 = fv[3];
  std::int32_t grid[4][4];
  grid[1][1] = v0;
  grid[2][1] = v1;
  grid[2][2] = v2;
  grid[1][2] = v3;
  grid[0][1] = straight(t, v1, v0);
  grid[3][1] = straight(t, v0, v1);
  grid[0][2] = straight(t, v2, v3);
  grid[3][2] = straight(t, v3, v2);
  grid[1][0] = straight(t, v3, v0);
  grid[2][0] = straight(t, v2, v1);
  grid[1][3] = straight(t, v0, v3);
  grid[2][3] = straight(t, v1, v2);
  grid[0][0] = diagonal(t, v0, f);
  grid[3][0] = diagonal(t, v1, f);
  grid[3][3] = diagonal(t, v2, f);
  grid[0][3] = diagonal(t, v3, f);
  Terms terms;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) terms.push_back({grid[i][j], kFourPoint[i] * kFourPoint[j]});
  }
  return Stencil::merged(std::move(terms));
}

std::vector<std::int32_t> split_faces(const Topology& t) {
  const auto num_v = static_cast<std::int32_t>(t.num_vertices());
  const auto num_e = static_cast<std::int32_t>(t.num_edges());
  std::vector<std::int32_t> out;
  const auto mid = [&](std::int32_t a, std::int32_t b) { return num_v + t.edge_index(a, b); };
  if (t.arity() == 4) {
    out.reserve(t.num_faces() * 16);
    for (std::size_t f = 0; f < t.num_faces(); ++f) {
      const auto fv = t.face(f);
      const std::int32_t center = num_v + num_e + static_cast<std::int32_t>(f);
      for (std::size_t c = 0; c < 4; ++c) {
        const std::int32_t v = fv[c], next = fv[(c + 1) % 4], prev = fv[(c + 3) % 4];
        out.insert(out.end(), {v, mid(v, next), center, mid(prev, v)});
      }
    }
  } else {
    out.reserve(t.num_faces() * 12);
    for (std::size_t f = 0; f < t.num_faces(); ++f) {
      const auto fv = t.face(f);
      const std::int32_t a = fv[0], b = fv[1], c = fv[2];
      const std::int32_t ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
      out.insert(out.end(), {a, ab, ca, b, bc, ab, c, ca, bc, ab, bc, ca});
    }
  }
  return out;
}

}  // namespace

RefinementStep build_refinement(const Topology& topology, Scheme scheme, Execution exec) {
  if (topology.arity() != required_arity(scheme)) {
    throw Error(ErrorKind::ArityMismatch,
                name({scheme, Mode::Linear}) + " needs faces with " +
                    std::to_string(required_arity(scheme)) + " corners, mesh has " +
                    std::to_string(topology.arity()));
  }
  const std::size_t num_v = topology.num_vertices();
  const std::size_t num_e = topology.num_edges();
  const std::size_t num_f = topology.arity() == 4 ? topology.num_faces() : 0;

  RefinementStep step;
  step.arity = topology.arity();
  step.stencils.resize(num_v + num_e + num_f);
  for_each_index(step.stencils.size(), exec, [&](std::size_t i) {
    Stencil& out = step.stencils[i];
    if (i < num_v) {
      const auto v = static_cast<std::int32_t>(i);
      switch (scheme) {
        case Scheme::CatmullClark: out = catmull_clark_vertex(topology, v); break;
        case Scheme::Loop: out = loop_vertex(topology, v); break;
        case Scheme::Kobbelt4:
        case Scheme::Butterfly: out = Stencil::identity(v); break;
      }
    } else if (i < num_v + num_e) {
      const Edge& e = topology.edges()[i - num_v];
      switch (scheme) {
        case Scheme::CatmullClark: out = catmull_clark_edge(topology, e); break;
        case Scheme::Loop: out = loop_edge(topology, e); break;
        case Scheme::Kobbelt4: out = kobbelt_edge(topology, e); break;
        case Scheme::Butterfly: out = butterfly_edge(topology, e); break;
      }
    } else {
      const auto f = static_cast<std::int32_t>(i - num_v - num_e);
      if (scheme == Scheme::Kobbelt4) {
        out = kobbelt_face(topology, f);
      } else {
        Terms terms;
        add_face(terms, topology, f, 1.0);
        out = Stencil::merged(std::move(terms));
      }
    }
  });
  step.faces = split_faces(topology);
  return step;
}

namespace {

std::vector<Pnp> evaluate_modified(const RefinementStep& step, std::span<const Pnp> input,
                                   Execution exec, const Tolerances& tol) {
  std::vector<Pnp> out(step.stencils.size());
  for_each_index(out.size(), exec, [&](std::size_t i) {
    const AvgPlan plan = compile(step.stencils[i]);
    std::size_t at = 0;
    try {
      out[i] = evaluate<Pnp>(plan, input, [&](const Pnp& a, const Pnp& b, double w) {
        Pnp r = circle_avg_3d(a, b, w, tol);
        ++at;
        return r;
      });
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::AntipodalNormals) throw;
      const std::int32_t right = plan.steps[at].index;
      const std::string left = at == 0 ? "input vertex " + std::to_string(plan.first)
                                       : "partial average ending at step " + std::to_string(at);
      throw Error(ErrorKind::AntipodalNormals,
                  "output vertex " + std::to_string(i) + ": opposite normals when averaging " +
                      left + " with input vertex " + std::to_string(right));
    }
  });
  return out;
}

std::vector<Vec3> evaluate_linear(const RefinementStep& step, std::span<const Vec3> input,
                                  Execution exec) {
  std::vector<Vec3> out(step.stencils.size());
  for_each_index(out.size(), exec,
                 [&](std::size_t i) { out[i] = weighted_sum(step.stencils[i], input); });
  return out;
}

Mesh refine_level(const Mesh& mesh, SchemeKind kind, Execution exec, const Tolerances& tol,
                  bool attach_normals) {
  if (kind.mode == Mode::Modified && !mesh.has_normals()) {
    throw Error(ErrorKind::MissingNormals, name(kind) + " refines point-normal pairs; mesh has no normals");
  }
  RefinementStep step = build_refinement(mesh.topology(), kind.base, exec);
  auto topology = std::make_shared<const Topology>(step.stencils.size(), std::move(step.faces), step.arity);

  if (kind.mode == Mode::Modified) {
    const std::vector<Pnp> pnps = evaluate_modified(step, mesh.pnps(), exec, tol);
    std::vector<Vec3> points(pnps.size());
    std::vector<UnitVec3> normals(pnps.size());
    for (std::size_t i = 0; i < pnps.size(); ++i) {
      points[i] = pnps[i].point;
      normals[i] = pnps[i].normal;
    }
    return Mesh(std::move(topology), std::move(points), std::move(normals));
  }
  Mesh out(std::move(topology), evaluate_linear(step, mesh.vertices(), exec));
  if (!attach_normals) return out;
  try {
    return out.with_normals(naive_normals(out, exec));
  } catch (const Error& e) {
    // Display normals only; a folded or flat-sheet result keeps none.
    if (e.kind() != ErrorKind::DegenerateCorner && e.kind() != ErrorKind::VanishingNormal) throw;
    return out;
  }
}

}  // namespace

Mesh refine_once(const Mesh& mesh, SchemeKind kind, Execution exec, const Tolerances& tol) {
  return refine_level(mesh, kind, exec, tol, true);
}

Mesh refine(const Mesh& mesh, SchemeKind kind, int iterations, Execution exec,
            const Tolerances& tol) {
  if (iterations < 0) throw Error(ErrorKind::InvalidArgument, "iteration count must be >= 0");
  Mesh current = mesh;
  for (int i = 0; i < iterations; ++i) {
    current = refine_level(current, kind, exec, tol, i + 1 == iterations);
  }
  return current;
}

}  // namespace pnp
