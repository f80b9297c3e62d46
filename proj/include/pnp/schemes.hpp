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
#include <string_view>
#include <vector>

#include "pnp/avgplan.hpp"
#include "pnp/mesh.hpp"

namespace pnp {

enum class Scheme { CatmullClark, Loop, Kobbelt4, Butterfly };
enum class Mode { Linear, Modified };

struct SchemeKind {
  Scheme base = Scheme::Loop;
  Mode mode = Mode::Linear;

  friend bool operator==(const SchemeKind&, const SchemeKind&) = default;
};

/// "CC", "LP", "K4", "BY", with an "M" prefix for modified mode.
std::string name(SchemeKind kind);
/// Accepts cc, lp, k4, by (case-insensitive).
std::optional<Scheme> parse_scheme(std::string_view text);
int required_arity(Scheme scheme);
bool is_interpolatory(Scheme scheme);

/// One level of refinement expressed over the input mesh: the output vertex
/// ids are [old vertices | edge points | face points (quad schemes)], each
/// with an affine stencil over input vertex ids, plus the output faces.
struct RefinementStep {
  std::vector<Stencil> stencils;
  std::vector<std::int32_t> faces;
  int arity = 3;
};

/// Stencils and connectivity for one level. Throws ArityMismatch.
RefinementStep build_refinement(const Topology& topology, Scheme scheme,
                                Execution exec = Execution::Parallel);

/// One refinement level.
///
/// Linear mode applies each stencil as a weighted sum of positions and
/// attaches naive normals of the result. Modified mode compiles each stencil
/// into a chain of binary averages and evaluates it on the input
/// point-normal pairs with the 3D circle average.
Mesh refine_once(const Mesh& mesh, SchemeKind kind, Execution exec = Execution::Parallel,
                 const Tolerances& tol = {});

/// `iterations` levels of refine_once; zero returns the input unchanged.
/// Linear mode only computes naive normals for the final level.
Mesh refine(const Mesh& mesh, SchemeKind kind, int iterations,
            Execution exec = Execution::Parallel, const Tolerances& tol = {});

}  // namespace pnp
