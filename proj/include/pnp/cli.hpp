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

#include <iosfwd>
#include <string>
#include <vector>

#include "pnp/geom.hpp"
#include "pnp/schemes.hpp"

namespace pnp {

/// Parameters of a normal-morph run: initial normals slide from `n_star`
/// to the naive normals with weights i / (steps - 1).
struct MorphSpec {
  UnitVec3 n_star;
  int steps = 11;
  int iterations = 4;
  Scheme scheme = Scheme::Loop;
};

struct MorphStep {
  double mu = 0;
  Mesh refined;
  double xi_deg = 0;
};

std::vector<MorphStep> run_morph(const Mesh& mesh, const MorphSpec& spec,
                                 Execution exec = Execution::Parallel);

/// Entry point of the `pnpsubdiv` tool. `args` excludes the program name.
/// Returns the process exit code: 0 ok, 2 usage, 3 parse or io,
/// 4 topology, 5 numeric degeneracy.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pnp
