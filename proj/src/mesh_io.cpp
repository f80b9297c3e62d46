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

#include "pnp/mesh_io.hpp"

#include <bit>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace pnp {

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

double parse_double(std::string_view tok, std::size_t line) {
  double value = 0;
  const char* begin = tok.data();
  if (!tok.empty() && tok.front() == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
    parse_fail(line, "invalid number '" + std::string(tok) + "'");
  }
  return value;
}

// Resolves a 1-based or negative (relative) OBJ index into [0, count).
std::int32_t parse_index(std::string_view tok, std::size_t count, std::size_t line,
                         const char* what) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value == 0) {
    parse_fail(line, std::string("invalid ") + what + " index '" + std::string(tok) + "'");
  }
  const long long resolved = value > 0 ? value - 1 : static_cast<long long>(count) + value;
  if (resolved < 0 || resolved >= static_cast<long long>(count)) {
    parse_fail(line, std::string(what) + " index " + std::to_string(value) + " out of range");
  }
  return static_cast<std::int32_t>(resolved);
}

void append_number(std::string& out, double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, ptr);
}

template <typename T>
void append_le(std::string& out, T value) {
  std::array<char, sizeof(T)> bytes;
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) {
    std::reverse(bytes.begin(), bytes.end());
  }
  out.append(bytes.data(), bytes.size());
}

}  // namespace

Mesh parse_obj(std::string_view text) {
  std::vector<Vec3> positions;
  std::vector<Vec3> raw_normals;
  std::vector<std::size_t> normal_lines;
  std::vector<std::int32_t> faces;
  std::vector<std::int32_t> corner_normals;  // -1 when a corner has none
  std::size_t arity = 0;
  std::size_t first_face_line = 0;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = split_ws(line);
    if (tok.empty()) continue;

    if (tok[0] == "v") {
      if (tok.size() < 4) parse_fail(line_no, "vertex needs three coordinates");
      positions.push_back({parse_double(tok[1], line_no), parse_double(tok[2], line_no),
                           parse_double(tok[3], line_no)});
    } else if (tok[0] == "vn") {
      if (tok.size() < 4) parse_fail(line_no, "normal needs three coordinates");
      raw_normals.push_back({parse_double(tok[1], line_no), parse_double(tok[2], line_no),
                             parse_double(tok[3], line_no)});
      normal_lines.push_back(line_no);
    } else if (tok[0] == "f") {
      const std::size_t n = tok.size() - 1;
      if (n != 3 && n != 4) {
        parse_fail(line_no, "faces must have 3 or 4 corners, found " + std::to_string(n));
      }
      if (arity == 0) {
        arity = n;
        first_face_line = line_no;
      } else if (arity != n) {
        throw Error(ErrorKind::MixedFaceArity,
                    "line " + std::to_string(line_no) + ": face with " + std::to_string(n) +
                        " corners in a mesh whose first face (line " +
                        std::to_string(first_face_line) + ") has " + std::to_string(arity));
      }
      for (std::size_t c = 1; c <= n; ++c) {
        const std::string_view corner = tok[c];
        const std::size_t s1 = corner.find('/');
        faces.push_back(parse_index(corner.substr(0, s1), positions.size(), line_no, "vertex"));
        std::int32_t normal = -1;
        if (s1 != std::string_view::npos) {
          const std::size_t s2 = corner.find('/', s1 + 1);
          if (s2 != std::string_view::npos && s2 + 1 < corner.size()) {
            normal = parse_index(corner.substr(s2 + 1), raw_normals.size(), line_no, "normal");
          }
        }
        corner_normals.push_back(normal);
      }
    }
  }
  if (faces.empty()) throw Error(ErrorKind::ParseError, "no faces found");

  // Per-vertex normal assignment; corners of one vertex must agree.
  std::vector<std::int32_t> assigned(positions.size(), -1);
  bool any_refs = false;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const std::int32_t k = corner_normals[i];
    if (k < 0) continue;
    any_refs = true;
    std::int32_t& slot = assigned[static_cast<std::size_t>(faces[i])];
    if (slot < 0) {
      slot = k;
    } else if (slot != k && raw_normals[static_cast<std::size_t>(slot)] !=
                                raw_normals[static_cast<std::size_t>(k)]) {
      parse_fail(normal_lines[static_cast<std::size_t>(k)],
                 "vertex " + std::to_string(faces[i] + 1) + " has more than one normal");
    }
  }
  if (!any_refs && raw_normals.size() == positions.size()) {
    for (std::size_t v = 0; v < assigned.size(); ++v) assigned[v] = static_cast<std::int32_t>(v);
    any_refs = !assigned.empty();
  }

  std::optional<std::vector<UnitVec3>> normals;
  if (any_refs) {
    normals.emplace();
    normals->reserve(positions.size());
    for (std::size_t v = 0; v < positions.size(); ++v) {
      if (assigned[v] < 0) {
        throw Error(ErrorKind::ParseError, "vertex " + std::to_string(v + 1) + " has no normal");
      }
      const auto k = static_cast<std::size_t>(assigned[v]);
      const double len = norm(raw_normals[k]);
      if (!(std::abs(len - 1.0) <= 1e-6)) {
        parse_fail(normal_lines[k], "normal of length " + std::to_string(len) + " is not unit");
      }
      // Already-unit normals are kept bit for bit so that files round-trip.
      normals->push_back(std::abs(len - 1.0) <= 1e-14
                             ? UnitVec3::checked(raw_normals[k])
                             : UnitVec3::normalized(raw_normals[k]));
    }
  }
  return Mesh(std::move(positions), std::move(faces), static_cast<int>(arity), std::move(normals));
}

Mesh load_obj(const std::filesystem::path& path) { return parse_obj(read_file(path)); }

std::string format_obj(const Mesh& mesh) {
  std::string out = "# pnpsubdiv\n";
  out.reserve(mesh.num_vertices() * 80 + mesh.num_faces() * 32);
  const auto record = [&out](const char* tag, const Vec3& v) {
    out += tag;
    for (double c : {v.x, v.y, v.z}) {
      out += ' ';
      append_number(out, c);
    }
    out += '\n';
  };
  for (const Vec3& p : mesh.vertices()) record("v", p);
  for (const UnitVec3& n : mesh.normals()) record("vn", n);
  const bool with_normals = mesh.has_normals();
  for (std::size_t f = 0; f < mesh.num_faces(); ++f) {
    out += 'f';
    for (std::int32_t v : mesh.topology().face(f)) {
      const std::string idx = std::to_string(v + 1);
      out += ' ';
      out += idx;
      if (with_normals) {
        out += "//";
        out += idx;
      }
    }
    out += '\n';
  }
  return out;
}

void save_obj(const Mesh& mesh, const std::filesystem::path& path) {
  write_file_atomic(path, format_obj(mesh));
}

std::string format_ply(const Mesh& mesh, std::span<const Rgb> colors, PlyFormat format) {
  if (colors.size() != mesh.num_vertices()) {
    throw Error(ErrorKind::InvalidArgument, "one color per vertex is required");
  }
  std::ostringstream header;
  header << "ply\n"
         << (format == PlyFormat::Ascii ? "format ascii 1.0\n" : "format binary_little_endian 1.0\n")
         << "comment pnpsubdiv\n"
         << "element vertex " << mesh.num_vertices() << "\n"
         << "property float x\nproperty float y\nproperty float z\n"
         << "property uchar red\nproperty uchar green\nproperty uchar blue\n"
         << "element face " << mesh.num_faces() << "\n"
         << "property list uchar int vertex_indices\n"
         << "end_header\n";
  std::string out = header.str();

  const auto positions = mesh.vertices();
  if (format == PlyFormat::Ascii) {
    for (std::size_t v = 0; v < positions.size(); ++v) {
      for (double c : {positions[v].x, positions[v].y, positions[v].z}) {
        append_number(out, static_cast<double>(static_cast<float>(c)));
        out += ' ';
      }
      out += std::to_string(colors[v][0]) + ' ' + std::to_string(colors[v][1]) + ' ' +
             std::to_string(colors[v][2]) + '\n';
    }
    for (std::size_t f = 0; f < mesh.num_faces(); ++f) {
      out += std::to_string(mesh.arity());
      for (std::int32_t v : mesh.topology().face(f)) out += ' ' + std::to_string(v);
      out += '\n';
    }
  } else {
    for (std::size_t v = 0; v < positions.size(); ++v) {
      append_le(out, static_cast<float>(positions[v].x));
      append_le(out, static_cast<float>(positions[v].y));
      append_le(out, static_cast<float>(positions[v].z));
      for (std::uint8_t c : colors[v]) append_le(out, c);
    }
    for (std::size_t f = 0; f < mesh.num_faces(); ++f) {
      append_le(out, static_cast<std::uint8_t>(mesh.arity()));
      for (std::int32_t v : mesh.topology().face(f)) append_le(out, v);
    }
  }
  return out;
}

void save_ply(const Mesh& mesh, std::span<const Rgb> colors, const std::filesystem::path& path,
              PlyFormat format) {
  write_file_atomic(path, format_ply(mesh, colors, format));
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot open " + tmp.string() + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorKind::Io, "write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorKind::Io, "cannot move output into place at " + path.string());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace pnp
