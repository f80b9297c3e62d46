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

#include <doctest.h>

#include <filesystem>
#include <random>
#include <string>

#include "pnp/error.hpp"
#include "pnp/mesh_io.hpp"
#include "shapes.hpp"

using namespace pnp;
namespace t = pnp::testing;
namespace fs = std::filesystem;

namespace {

const char* kCubeObj = R"(# unit cube
v 0 0 0
v 1 0 0
v 1 1 0
v 0 1 0
v 0 0 1
v 1 0 1
v 1 1 1
v 0 1 1
f 1 4 3 2
f 5 6 7 8
f 1 2 6 5
f 3 4 8 7
f 1 5 8 4
f 2 3 7 6
)";

std::string tetra_with(const std::string& normal_block, const std::string& faces) {
  return "v 1 1 1\nv 1 -1 -1\nv -1 1 -1\nv -1 -1 1\n" + normal_block + faces;
}

const std::string kTetraFacesWithNormals = "f 1//1 2//2 3//3\nf 1//1 4//4 2//2\nf 1//1 3//3 4//4\nf 2//2 4//4 3//3\n";

std::pair<ErrorKind, std::string> error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return {e.kind(), e.what()};
  }
  FAIL("no pnp::Error thrown");
  return {ErrorKind::InvalidArgument, ""};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(PNP_TEST_TMPDIR) / "mesh_io";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("parse a cube") {
  const Mesh cube = parse_obj(kCubeObj);
  CHECK(cube.num_vertices() == 8);
  CHECK(cube.num_edges() == 12);
  CHECK(cube.arity() == 4);
  CHECK_FALSE(cube.has_normals());
  for (std::size_t v = 0; v < 8; ++v) CHECK(cube.topology().valence(v) == 3);
}

TEST_CASE("face corner forms and negative indices") {
  const std::string text =
      "v 1 1 1\nv 1 -1 -1\nv -1 1 -1\nv -1 -1 1\nvt 0 0\n"
      "f 1/1 2/1 3/1\nf -4 -1 -3\nf 1/1/ 3 4\nf 2 4 3\n";
  const Mesh m = parse_obj(text);
  CHECK(m.num_faces() == 4);
  CHECK(m.topology().face(1)[1] == 3);
}

TEST_CASE("normals are read, renormalized, or rejected") {
  const Mesh m = parse_obj(tetra_with("vn 0.5773502692 0.5773502692 0.5773502692\nvn 0.5773505 -0.5773502692 -0.5773502692\n"
                                      "vn -0.5773502692 0.5773502692 -0.5773502692\nvn -0.5773502692 -0.5773502692 0.5773502692\n",
                                      kTetraFacesWithNormals));
  REQUIRE(m.has_normals());
  for (const UnitVec3& n : m.normals()) CHECK(norm(n) == doctest::Approx(1).epsilon(1e-15));

  const auto [kind, what] = error_of([] {
    parse_obj(tetra_with("vn 0 0 1\nvn 0 0 1.1\nvn 0 0 1\nvn 0 0 1\n", kTetraFacesWithNormals));
  });
  CHECK(kind == ErrorKind::ParseError);
  CHECK(what.find("line 6") != std::string::npos);

  // Without face references, one vn per v is taken in order.
  const Mesh aligned = parse_obj(tetra_with("vn 0 0 1\nvn 0 1 0\nvn 1 0 0\nvn 0 0 -1\n",
                                            "f 1 2 3\nf 1 4 2\nf 1 3 4\nf 2 4 3\n"));
  REQUIRE(aligned.has_normals());
  CHECK(aligned.normals()[1].y() == 1);

  const auto conflict = error_of([] {
    parse_obj(tetra_with("vn 0 0 1\nvn 0 1 0\nvn 1 0 0\nvn 0 0 -1\nvn 0 -1 0\n",
                         "f 1//1 2//2 3//3\nf 1//5 4//4 2//2\nf 1//1 3//3 4//4\nf 2//2 4//4 3//3\n"));
  });
  CHECK(conflict.first == ErrorKind::ParseError);

  const auto partial = error_of([] {
    parse_obj(tetra_with("vn 0 0 1\n", "f 1//1 2 3\nf 1//1 4 2\nf 1//1 3 4\nf 2 4 3\n"));
  });
  CHECK(partial.first == ErrorKind::ParseError);
}

TEST_CASE("parse errors carry line numbers") {
  const auto mixed = error_of([] {
    parse_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\nv 0 0 1\nf 1 2 3\nf 1 2 3 4\n");
  });
  CHECK(mixed.first == ErrorKind::MixedFaceArity);
  CHECK(mixed.second.find("line 6") != std::string::npos);

  const auto number = error_of([] { parse_obj("v 0 0 0\nv 1 zero 0\n"); });
  CHECK(number.first == ErrorKind::ParseError);
  CHECK(number.second.find("line 2") != std::string::npos);

  const auto range = error_of([] { parse_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 7\n"); });
  CHECK(range.first == ErrorKind::ParseError);
  CHECK(range.second.find("line 4") != std::string::npos);

  CHECK(error_of([] { parse_obj("v 0 0 0\nf 1 1 1 1 1\n"); }).first == ErrorKind::ParseError);
  CHECK(error_of([] { parse_obj("v 0 0 0\n"); }).first == ErrorKind::ParseError);
  CHECK(error_of([] { parse_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n"); }).first == ErrorKind::OpenBoundary);
  CHECK(error_of([] { (void)load_obj(scratch("does_not_exist.obj")); }).first == ErrorKind::Io);
}

TEST_CASE("OBJ round trip is exact") {
  std::mt19937_64 rng(51);
  const Mesh m = t::transformed(t::with_radial_normals(t::bumpy_sphere(2, 0.3)), t::random_rigid(rng));
  const fs::path path = scratch("round_trip.obj");
  save_obj(m, path);
  const Mesh back = load_obj(path);
  REQUIRE(back.num_vertices() == m.num_vertices());
  CHECK(t::max_distance(back.vertices(), m.vertices()) == 0);
  CHECK(t::max_angle(back.normals(), m.normals()) < 1e-15);
  CHECK(std::ranges::equal(back.topology().face_indices(), m.topology().face_indices()));
  CHECK(format_obj(back) == format_obj(m));

  const Mesh plain = t::cube();
  CHECK(format_obj(parse_obj(format_obj(plain))) == format_obj(plain));
  CHECK(format_obj(plain).find("vn") == std::string::npos);
}

TEST_CASE("PLY export") {
  const Mesh m = t::tetrahedron();
  const std::vector<Rgb> colors(4, Rgb{255, 128, 0});
  const std::string ascii = format_ply(m, colors, PlyFormat::Ascii);
  CHECK(ascii.rfind("ply\nformat ascii 1.0\n", 0) == 0);
  CHECK(ascii.find("element vertex 4") != std::string::npos);
  CHECK(ascii.find("element face 4") != std::string::npos);
  CHECK(ascii.find("255 128 0") != std::string::npos);
  CHECK(ascii.find("3 0 ") != std::string::npos);

  const std::string binary = format_ply(m, colors, PlyFormat::BinaryLittleEndian);
  CHECK(binary.rfind("ply\nformat binary_little_endian 1.0\n", 0) == 0);
  const std::size_t header = binary.find("end_header\n") + std::string("end_header\n").size();
  // 4 vertices of 3 floats + 3 bytes, 4 faces of 1 byte + 3 ints.
  CHECK(binary.size() - header == 4 * (12 + 3) + 4 * (1 + 12));

  CHECK(error_of([&] { format_ply(m, std::vector<Rgb>(3), PlyFormat::Ascii); }).first == ErrorKind::InvalidArgument);

  const fs::path path = scratch("tet.ply");
  save_ply(m, colors, path);
  CHECK(read_file(path) == binary);
}

TEST_CASE("atomic writes leave no temporaries") {
  const fs::path path = scratch("atomic.txt");
  write_file_atomic(path, "first");
  write_file_atomic(path, "second");
  CHECK(read_file(path) == "second");
  for (const auto& entry : fs::directory_iterator(path.parent_path())) {
    CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
  }
}
