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

#include "pnp/error.hpp"

namespace pnp {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateCross: return "DegenerateCross";
    case ErrorKind::AntipodalNormals: return "AntipodalNormals";
    case ErrorKind::NotInCarrier: return "NotInCarrier";
    case ErrorKind::UndefinedTheta: return "UndefinedTheta";
    case ErrorKind::DegenerateCorner: return "DegenerateCorner";
    case ErrorKind::VanishingNormal: return "VanishingNormal";
    case ErrorKind::DegenerateFace: return "DegenerateFace";
    case ErrorKind::ZeroArea: return "ZeroArea";
    case ErrorKind::WeightsNotAffine: return "WeightsNotAffine";
    case ErrorKind::ZeroWeight: return "ZeroWeight";
    case ErrorKind::NonManifold: return "NonManifold";
    case ErrorKind::MixedFaceArity: return "MixedFaceArity";
    case ErrorKind::OpenBoundary: return "OpenBoundary";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::MissingNormals: return "MissingNormals";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Io: return "Io";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
      return 2;
    case ErrorKind::ParseError:
    case ErrorKind::Io:
      return 3;
    case ErrorKind::NonManifold:
    case ErrorKind::MixedFaceArity:
    case ErrorKind::OpenBoundary:
    case ErrorKind::ArityMismatch:
    case ErrorKind::MissingNormals:
    case ErrorKind::IndexOutOfRange:
      return 4;
    default:
      return 5;
  }
}

}  // namespace pnp
