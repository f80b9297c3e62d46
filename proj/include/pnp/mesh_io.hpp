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

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "pnp/mesh.hpp"

namespace pnp {

/// Reads the OBJ subset `v`, `vn` and `f` (forms `i`, `i/t`, `i/t/n`,
/// `i//n`; 1-based or negative relative indices). Other records are
/// ignored. Every vertex gets at most one normal; normals within 1e-6 of
/// unit length are renormalized, others rejected. Errors carry the line
/// number.
Mesh parse_obj(std::string_view text);
Mesh load_obj(const std::filesystem::path& path);

/// Writes `v`, `vn` (when present) and `f v//v` records. Coordinates use the
/// shortest decimal form that reads back to the same double.
std::string format_obj(const Mesh& mesh);
void save_obj(const Mesh& mesh, const std::filesystem::path& path);

using Rgb = std::array<std::uint8_t, 3>;

enum class PlyFormat { Ascii, BinaryLittleEndian };

std::string format_ply(const Mesh& mesh, std::span<const Rgb> colors, PlyFormat format);
void save_ply(const Mesh& mesh, std::span<const Rgb> colors, const std::filesystem::path& path,
              PlyFormat format = PlyFormat::BinaryLittleEndian);

/// Writes to a sibling temporary file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
std::string read_file(const std::filesystem::path& path);

}  // namespace pnp
