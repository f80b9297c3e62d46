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

#include <stdexcept>
#include <string>
#include <string_view>

namespace pnp {

enum class ErrorKind {
  // numeric degeneracies
  DegenerateCross,
  AntipodalNormals,
  NotInCarrier,
  UndefinedTheta,
  DegenerateCorner,
  VanishingNormal,
  DegenerateFace,
  ZeroArea,
  WeightsNotAffine,
  ZeroWeight,
  // topology
  NonManifold,
  MixedFaceArity,
  OpenBoundary,
  ArityMismatch,
  MissingNormals,
  IndexOutOfRange,
  // input
  ParseError,
  Io,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Process exit code used by the command-line tool for each error family:
// 2 usage, 3 parse/io, 4 topology, 5 numeric degeneracy.
int exit_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pnp
