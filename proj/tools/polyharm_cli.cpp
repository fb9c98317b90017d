// Copyright 2026 The polyharm Authors
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

// polyharm: command-line front end.
//
//   polyharm radius --family cor22 --M M1 --p 2
//   polyharm verify --map f1.json --radius 0.01552 --samples 10000 --seed 42
//   polyharm render --map f0.json --out f0.svg [--csv f0.csv]
//   polyharm emit-example f0 [--n-trunc 256] > f0.json
//   polyharm repro
//
// Exit codes: 0 success, 1 usage or input error, 2 reproduction outside
// tolerance, 3 solver failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "polyharm/error.hpp"
#include "polyharm/extremal.hpp"
#include "polyharm/map_io.hpp"
#include "polyharm/radius.hpp"
#include "polyharm/render.hpp"
#include "polyharm/repro.hpp"
#include "polyharm/verify.hpp"

namespace {

using namespace polyharm;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRepro = 2;
constexpr int kExitSolver = 3;

bool g_exact = false;

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, g_exact ? "%.17g" : "%.6g", x);
  return buf;
}

// Accepts a number or one of the worked-example constants M1, M2.
double parse_bound(const std::string& text) {
  if (text == "M1" || text == "m1") return example_M1();
  if (text == "M2" || text == "m2") return example_M2();
  std::size_t used = 0;
  const double value = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("bad number: " + text);
  return value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMalformedDocument, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

int run_radius(const std::string& family_text, const std::string& m_text, int p, bool printed) {
  const auto family = parse_family(family_text);
  if (!family) {
    std::cerr << "unknown family '" << family_text << "'\n";
    return kExitUsage;
  }
  RadiusProblem problem{*family, parse_bound(m_text), p,
                        printed ? Cor32Form::kPrinted : Cor32Form::kGeneral};
  const RadiusResult result = least_root(problem);
  std::cout << "family     " << family_name(problem.family)
            << (problem.family == Family::kCor32 && printed ? " (printed p = 2 polynomial)" : "") << '\n'
            << "M          " << num(problem.M) << '\n';
  if (is_theorem_family(problem.family)) std::cout << "p          " << problem.p << '\n';
  std::cout << "r          " << num(result.r) << '\n'
            << "rho        " << num(result.rho) << '\n'
            << "residual   " << num(result.residual) << '\n'
            << "iterations " << result.iterations << '\n'
            << "bracket    [" << num(result.bracket.first) << ", " << num(result.bracket.second) << "]\n";
  if (problem.family == Family::kSh2009) {
    std::cout << "note       the 4 M r^3 term is read with the same M as the other terms\n";
  }
  return kExitOk;
}

int run_verify(const std::string& path, double radius, std::size_t samples, std::uint64_t seed,
               double rho, std::size_t boundary) {
  const MapDocument doc = parse_map_document(read_file(path));
  auto name = doc.metadata.find("name");
  const VerificationReport report = univalence_scan(
      doc.map, radius, samples, seed, name != doc.metadata.end() ? name->second : path, boundary);
  std::cout << "map                  " << report.map_id << '\n'
            << "radius               " << num(report.radius) << '\n'
            << "samples              " << report.samples << " (seed " << report.seed << ")\n"
            << "pair checks          " << report.pair_checks << '\n'
            << "min pair separation  " << num(report.min_pair_separation) << '\n'
            << "jacobian min         " << num(report.jacobian_min) << " (" << report.jacobian_grid << "x"
            << report.jacobian_grid << " polar grid)\n"
            << "boundary min modulus " << num(report.boundary_min_modulus) << " (" << report.boundary_samples
            << " samples)\n"
            << "max |F| on grid      " << num(report.sup_norm) << '\n'
            << "parseval sum         " << num(report.parseval_sum) << '\n'
            << "verdict              " << verdict_name(report.verdict)
            << (report.verdict == Verdict::kNoCounterexample ? " (falsification only, not a proof)" : "")
            << '\n';
  if (report.counterexample) {
    const auto& c = *report.counterexample;
    std::cout << "collision            z1 = " << num(c.z1.real()) << (c.z1.imag() < 0 ? "" : "+")
              << num(c.z1.imag()) << "i, z2 = " << num(c.z2.real()) << (c.z2.imag() < 0 ? "" : "+")
              << num(c.z2.imag()) << "i, |F(z1)-F(z2)| = " << num(c.image_distance) << '\n';
  }
  if (rho > 0.0) {
    const bool covered = covered_disk_check(doc.map, radius, rho, boundary);
    std::cout << "covered disk         rho = " << num(rho) << ": " << (covered ? "pass" : "fail") << '\n';
  }
  return kExitOk;
}

int run_render(const std::string& path, const std::string& out, std::string csv, const RenderStyle& style) {
  const MapDocument doc = parse_map_document(read_file(path));
  const auto curves = image_curves(doc.map, style);
  auto name = doc.metadata.find("name");
  write_file(out, curves_to_svg(curves, name != doc.metadata.end() ? name->second : path));
  if (csv.empty()) {
    const auto dot = out.find_last_of('.');
    csv = (dot == std::string::npos ? out : out.substr(0, dot)) + ".csv";
  }
  write_file(csv, curves_to_csv(curves));
  std::cerr << "wrote " << out << " and " << csv << '\n';
  return kExitOk;
}

struct NamedMap {
  PolyharmonicMap map;
  Metadata meta;
};

std::optional<NamedMap> build_example(const std::string& which, std::size_t truncation, int ngon) {
  if (which == "f3" || which == "ngon") {
    const int n = which == "f3" ? 3 : ngon;
    return NamedMap{ngon_harmonic({n, truncation}),
                    {{"name", "f" + std::to_string(n)},
                     {"provenance", "regular " + std::to_string(n) + "-gon harmonic map"}}};
  }
  if (which == "f0") return NamedMap{example_F0(truncation), {{"name", "F0"}, {"provenance", "f3 + 17i |z|^2 f3"}}};
  if (which == "f1") {
    return NamedMap{example_F1(truncation).map,
                    {{"name", "F1"}, {"provenance", "(2pi/(3 sqrt3)) f3 + (34 pi i/(3 sqrt3)) |z|^2 f3"}}};
  }
  return std::nullopt;
}

int run_emit(const std::string& which, std::size_t truncation, int ngon, const std::string& out) {
  std::optional<NamedMap> example = build_example(which, truncation, ngon);
  if (!example) {
    std::cerr << "unknown example '" << which << "' (expected f3, f0, f1 or ngon)\n";
    return kExitUsage;
  }
  example->meta["truncation"] = std::to_string(truncation);
  const std::string text = serialize_map(example->map, example->meta);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
  }
  return kExitOk;
}

int run_repro() {
  const ReproTable table = repro_table();
  std::cout << format_repro_table(table, g_exact);
  return table.all_ok() ? kExitOk : kExitRepro;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyharm: truncated polyharmonic maps, coefficient bounds and univalence radii"};
  app.require_subcommand(1);
  app.add_flag("--exact", g_exact, "print full double precision instead of 6 significant digits");

  auto* radius_cmd = app.add_subcommand("radius", "solve a univalence-radius equation");
  std::string family, m_text;
  int p = 1;
  bool printed = false;
  radius_cmd->add_option("--family", family, "thm21|cor22|cor21|thm31|cor32|sh2011|sh2009")->required();
  radius_cmd->add_option("--M", m_text, "bound M > 1 (number, or M1 / M2)")->required();
  radius_cmd->add_option("--p", p, "polyharmonic order")->check(CLI::PositiveNumber);
  radius_cmd->add_flag("--printed", printed, "cor32 only: use the printed p = 2 polynomial");
  radius_cmd->add_flag("--exact", g_exact, "full precision output");

  auto* verify_cmd = app.add_subcommand("verify", "empirical univalence scan of a map document");
  std::string map_path;
  double radius = 0.0, rho = 0.0;
  std::size_t samples = 10000, boundary = kDefaultBoundarySamples;
  std::uint64_t seed = 42;
  verify_cmd->add_option("--map", map_path, "map document (JSON)")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--radius", radius, "scan radius in (0,1)")->required();
  verify_cmd->add_option("--samples", samples, "number of point pairs");
  verify_cmd->add_option("--seed", seed, "SplitMix64 seed");
  verify_cmd->add_option("--rho", rho, "also check that F(D_r) covers D_rho");
  verify_cmd->add_option("--boundary-samples", boundary, "points on |w| = r");
  verify_cmd->add_flag("--exact", g_exact, "full precision output");

  auto* render_cmd = app.add_subcommand("render", "SVG + CSV images of circles and rays");
  std::string out_path, csv_path;
  RenderStyle style;
  render_cmd->add_option("--map", map_path, "map document (JSON)")->required()->check(CLI::ExistingFile);
  render_cmd->add_option("--out", out_path, "SVG output path")->required();
  render_cmd->add_option("--csv", csv_path, "CSV output path (default: SVG path with .csv)");
  render_cmd->add_option("--circles", style.circles)->check(CLI::PositiveNumber);
  render_cmd->add_option("--rays", style.rays)->check(CLI::PositiveNumber);
  render_cmd->add_option("--pts", style.points_per_curve, "points per curve")->check(CLI::PositiveNumber);
  render_cmd->add_option("--outer", style.outer_radius, "outermost circle radius")->check(CLI::Range(0.0, 1.0));

  auto* emit_cmd = app.add_subcommand("emit-example", "write a worked-example map document");
  std::string which, emit_out;
  std::size_t truncation = default_truncation();
  int ngon = 3;
  emit_cmd->add_option("example", which, "f3 | f0 | f1 | ngon")->required();
  emit_cmd->add_option("--n-trunc", truncation, "truncation degree N")->check(CLI::PositiveNumber);
  emit_cmd->add_option("--ngon", ngon, "polygon order for 'ngon'")->check(CLI::Range(3, 1 << 20));
  emit_cmd->add_option("--out", emit_out, "output path (default stdout)");

  auto* repro_cmd = app.add_subcommand("repro", "recompute the worked-example values");
  repro_cmd->add_flag("--exact", g_exact, "full precision output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*radius_cmd) return run_radius(family, m_text, p, printed);
    if (*verify_cmd) return run_verify(map_path, radius, samples, seed, rho, boundary);
    if (*render_cmd) return run_render(map_path, out_path, csv_path, style);
    if (*emit_cmd) return run_emit(which, truncation, ngon, emit_out);
    if (*repro_cmd) return run_repro();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::kNoSignChange:
      case ErrorCode::kSolverTolerance:
      case ErrorCode::kNotMonotone:
      case ErrorCode::kMultimodal:
      case ErrorCode::kInconsistent:
        return kExitSolver;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
