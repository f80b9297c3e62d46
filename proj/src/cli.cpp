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

#include "pnp/cli.hpp"

#include <charconv>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pnp/metrics.hpp"
#include "pnp/mesh_io.hpp"

namespace pnp {

namespace {

std::string number(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

Scheme scheme_or_throw(const std::string& text) {
  const auto scheme = parse_scheme(text);
  if (!scheme) {
    throw Error(ErrorKind::InvalidArgument, "unknown scheme '" + text + "' (expected cc, lp, k4 or by)");
  }
  return *scheme;
}

std::vector<double> split_numbers(const std::string& text, char sep, std::size_t expected,
                                  const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) {
    double v = 0;
    const char* begin = part.data();
    if (!part.empty() && part.front() == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw Error(ErrorKind::InvalidArgument, std::string("malformed ") + what + " '" + text + "'");
    }
    out.push_back(v);
  }
  if (out.size() != expected) {
    throw Error(ErrorKind::InvalidArgument, std::string("malformed ") + what + " '" + text + "'");
  }
  return out;
}

Mesh with_input_normals(Mesh mesh, std::ostream& err) {
  if (mesh.has_normals()) return mesh;
  err << "note: input has no normals; using naive vertex normals\n";
  return mesh.with_normals(naive_normals(mesh));
}

struct RefineArgs {
  std::string input, output, scheme;
  bool modified = false;
  int iterations = 4;
};

int cmd_refine(const RefineArgs& a, std::ostream& out, std::ostream& err) {
  const SchemeKind kind{scheme_or_throw(a.scheme), a.modified ? Mode::Modified : Mode::Linear};
  Mesh mesh = load_obj(a.input);
  if (mesh.arity() != required_arity(kind.base)) {
    throw Error(ErrorKind::ArityMismatch, name(kind) + " needs faces with " +
                                              std::to_string(required_arity(kind.base)) + " corners");
  }
  if (kind.mode == Mode::Modified) mesh = with_input_normals(std::move(mesh), err);
  const Mesh refined = refine(mesh, kind, a.iterations);
  if (!refined.has_normals()) err << "warning: naive normals undefined on the result; writing points only\n";
  save_obj(refined, a.output);
  out << name(kind) << " x" << a.iterations << ": " << refined.num_vertices() << " vertices, "
      << refined.num_faces() << " faces -> " << a.output << "\n";
  return 0;
}

int cmd_normals(const std::string& input, const std::string& output, std::ostream& out) {
  const Mesh mesh = load_obj(input);
  save_obj(mesh.with_normals(naive_normals(mesh)), output);
  out << "wrote naive normals for " << mesh.num_vertices() << " vertices -> " << output << "\n";
  return 0;
}

int cmd_metrics(const std::string& input, const std::string& json_path, bool xi, bool arrays,
                std::ostream& out) {
  const Mesh mesh = load_obj(input);
  const std::string json = compute_metrics(mesh, xi).to_json(arrays);
  if (json_path.empty()) {
    out << json;
  } else {
    write_file_atomic(json_path, json);
  }
  return 0;
}

struct MorphArgs {
  std::string input, nstar, scheme = "lp", outdir;
  int steps = 11;
  int iterations = 4;
};

int cmd_morph(const MorphArgs& a, std::ostream& out) {
  const auto n = split_numbers(a.nstar, ',', 3, "--nstar");
  if (a.steps < 2) throw Error(ErrorKind::InvalidArgument, "--steps must be at least 2");
  const MorphSpec spec{UnitVec3::normalized({n[0], n[1], n[2]}), a.steps, a.iterations,
                       scheme_or_throw(a.scheme)};
  const Mesh mesh = load_obj(a.input);
  const auto steps = run_morph(mesh, spec);

  std::filesystem::create_directories(a.outdir);
  const int width = std::max<int>(2, static_cast<int>(std::to_string(a.steps - 1).size()));
  std::string csv = "mu,xi_deg\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    std::ostringstream file;
    file << "morph_" << std::setw(width) << std::setfill('0') << i << ".obj";
    save_obj(steps[i].refined, std::filesystem::path(a.outdir) / file.str());
    csv += number(steps[i].mu) + "," + number(steps[i].xi_deg) + "\n";
    out << "mu=" << number(steps[i].mu) << " xi=" << number(steps[i].xi_deg) << " deg\n";
  }
  write_file_atomic(std::filesystem::path(a.outdir) / "xi.csv", csv);
  return 0;
}

int cmd_colorize(const std::string& input, const std::string& range, const std::string& output,
                 bool ascii, std::ostream& out) {
  const auto r = split_numbers(range, ':', 2, "--range");
  const CurvatureRamp ramp(r[0], r[1]);
  const Mesh mesh = load_obj(input);
  const std::vector<double> k = curvature(mesh);
  std::vector<Rgb> colors(k.size());
  for (std::size_t v = 0; v < k.size(); ++v) colors[v] = ramp(k[v]);
  save_ply(mesh, colors, output, ascii ? PlyFormat::Ascii : PlyFormat::BinaryLittleEndian);
  out << "wrote " << output << "\n";
  return 0;
}

int cmd_compare(const std::string& input, const std::vector<std::string>& schemes, int iterations,
                const std::string& json_path, std::ostream& out, std::ostream& err) {
  if (schemes.empty()) throw Error(ErrorKind::InvalidArgument, "--schemes needs at least one scheme");
  std::vector<Scheme> parsed;
  for (const std::string& s : schemes) parsed.push_back(scheme_or_throw(s));
  const Mesh mesh = with_input_normals(load_obj(input), err);

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  out << std::left << std::setw(8) << "scheme" << std::setw(26) << "psi_deg" << "zeta_star\n";
  for (Scheme s : parsed) {
    for (Mode m : {Mode::Linear, Mode::Modified}) {
      const SchemeKind kind{s, m};
      const MetricsReport r = compute_metrics(refine(mesh, kind, iterations));
      out << std::setw(8) << name(kind) << std::setw(26) << (number(r.psi_deg) + " ") << number(r.zeta_star)
          << "\n";
      rows.push_back({{"scheme", name(kind)}, {"psi_deg", r.psi_deg}, {"zeta_star", r.zeta_star}});
    }
  }
  if (!json_path.empty()) {
    nlohmann::ordered_json j;
    j["iterations"] = iterations;
    j["results"] = rows;
    write_file_atomic(json_path, j.dump(2) + "\n");
  }
  return 0;
}

}  // namespace

std::vector<MorphStep> run_morph(const Mesh& mesh, const MorphSpec& spec, Execution exec) {
  if (spec.steps < 2) throw Error(ErrorKind::InvalidArgument, "morph needs at least 2 steps");
  const std::vector<UnitVec3> naive = naive_normals(mesh, exec);
  std::vector<MorphStep> out;
  out.reserve(static_cast<std::size_t>(spec.steps));
  for (int i = 0; i < spec.steps; ++i) {
    const double mu = static_cast<double>(i) / (spec.steps - 1);
    std::vector<UnitVec3> initial(naive.size());
    for (std::size_t v = 0; v < naive.size(); ++v) {
      try {
        initial[v] = geodesic_avg(spec.n_star, naive[v], mu);
      } catch (const Error& e) {
        throw Error(e.kind(), "n* is opposite to the naive normal at vertex " + std::to_string(v));
      }
    }
    Mesh refined = refine(mesh.with_normals(std::move(initial)), {spec.scheme, Mode::Modified},
                          spec.iterations, exec);
    const double xi = normal_deviation_deg(refined, exec);
    out.push_back({mu, std::move(refined), xi});
  }
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subdivision of point-normal pair meshes with the 3D circle average", "pnpsubdiv"};
  app.require_subcommand(1);

  RefineArgs refine_args;
  auto* refine_cmd = app.add_subcommand("refine", "Refine a mesh with a linear or modified scheme");
  refine_cmd->add_option("--input", refine_args.input, "Input OBJ")->required();
  refine_cmd->add_option("--output", refine_args.output, "Output OBJ")->required();
  refine_cmd->add_option("--scheme", refine_args.scheme, "cc, lp, k4 or by")->required();
  refine_cmd->add_flag("--modified", refine_args.modified, "Use the circle-average variant");
  refine_cmd->add_option("--iters", refine_args.iterations, "Refinement levels")
      ->check(CLI::NonNegativeNumber);

  std::string normals_in, normals_out;
  auto* normals_cmd = app.add_subcommand("normals", "Write naive vertex normals into an OBJ");
  normals_cmd->add_option("--input", normals_in, "Input OBJ")->required();
  normals_cmd->add_option("--output", normals_out, "Output OBJ")->required();

  std::string metrics_in, metrics_json;
  bool metrics_xi = false, metrics_arrays = false;
  auto* metrics_cmd = app.add_subcommand("metrics", "Dihedral and curvature metrics as JSON");
  metrics_cmd->add_option("--input", metrics_in, "Input OBJ")->required();
  metrics_cmd->add_option("--json", metrics_json, "Output JSON (stdout when omitted)");
  metrics_cmd->add_flag("--xi", metrics_xi, "Mean angle between stored and naive normals");
  metrics_cmd->add_flag("--arrays", metrics_arrays, "Include per-edge and per-vertex arrays");

  MorphArgs morph_args;
  auto* morph_cmd = app.add_subcommand("morph", "Morph initial normals from n* to the naive normals");
  morph_cmd->add_option("--input", morph_args.input, "Input OBJ")->required();
  morph_cmd->add_option("--nstar", morph_args.nstar, "Start normal x,y,z")->required();
  morph_cmd->add_option("--steps", morph_args.steps, "Number of normal sets")->check(CLI::Range(2, 1000));
  morph_cmd->add_option("--scheme", morph_args.scheme, "cc, lp, k4 or by");
  morph_cmd->add_option("--iters", morph_args.iterations, "Refinement levels")
      ->check(CLI::NonNegativeNumber);
  morph_cmd->add_option("--outdir", morph_args.outdir, "Output directory")->required();

  std::string color_in, color_range, color_out;
  bool color_ascii = false;
  auto* color_cmd = app.add_subcommand("colorize", "Export a PLY coloured by vertex curvature");
  color_cmd->add_option("--input", color_in, "Input OBJ")->required();
  color_cmd->add_option("--range", color_range, "lo:hi curvature range (use --range=-a:b)")->required();
  color_cmd->add_option("--output", color_out, "Output PLY")->required();
  color_cmd->add_flag("--ascii", color_ascii, "ASCII PLY instead of binary little endian");

  std::string compare_in, compare_json;
  std::vector<std::string> compare_schemes;
  int compare_iters = 4;
  auto* compare_cmd = app.add_subcommand("compare", "psi and zeta* for linear and modified schemes");
  compare_cmd->add_option("--input", compare_in, "Input OBJ")->required();
  compare_cmd->add_option("--schemes", compare_schemes, "Comma separated list")
      ->required()
      ->delimiter(',');
  compare_cmd->add_option("--iters", compare_iters, "Refinement levels")->check(CLI::NonNegativeNumber);
  compare_cmd->add_option("--json", compare_json, "Output JSON");

  std::vector<const char*> argv{"pnpsubdiv"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    if (const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    } else {
      err << app.help();
    }
    return 2;
  }

  try {
    if (*refine_cmd) return cmd_refine(refine_args, out, err);
    if (*normals_cmd) return cmd_normals(normals_in, normals_out, out);
    if (*metrics_cmd) return cmd_metrics(metrics_in, metrics_json, metrics_xi, metrics_arrays, out);
    if (*morph_cmd) return cmd_morph(morph_args, out);
    if (*color_cmd) return cmd_colorize(color_in, color_range, color_out, color_ascii, out);
    if (*compare_cmd) return cmd_compare(compare_in, compare_schemes, compare_iters, compare_json, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(ErrorKind::Io);
  }
  return 2;
}

}  // namespace pnp
