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

// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances are fixed here and nowhere else.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "polyharm/coeff_bounds.hpp"
#include "polyharm/error.hpp"
#include "polyharm/extremal.hpp"
#include "polyharm/map_io.hpp"
#include "polyharm/radius.hpp"
#include "polyharm/repro.hpp"
#include "polyharm/verify.hpp"
#include "test_support.hpp"

namespace {

using namespace polyharm;
using Clock = std::chrono::steady_clock;

// Criterion 1
constexpr double kReproSeconds = 5.0;
// Criterion 2
constexpr double kParsevalCap = 324.0;
constexpr double kSlackFloor = -1e-12;
constexpr std::size_t kParsevalTruncation = 10000;
// Criterion 3
constexpr double kNearZeroR = 1e-12;
constexpr double kNearZeroGap = 1e-9;
constexpr double kRootResidual = 1e-12;
constexpr double kSolverSeconds = 2.0;
constexpr int kMonotoneGrid = 64;
// Criterion 4
constexpr double kOperatorAbs = 1e-10;
constexpr double kFdStep = 1e-5;
constexpr double kFdRel = 1e-6;
constexpr std::size_t kOraclePoints = 100;
constexpr double kOracleRadius = 0.9;
// Criterion 5
constexpr std::size_t kScanSamples = 10000;
constexpr std::uint64_t kScanSeed = 42;
constexpr std::size_t kBoundarySamples = 4096;
// Criterion 6
constexpr double kPrintedRoot = 0.00798;
constexpr double kGeneralRoot = 0.00794;
constexpr double kRootTol = 1e-5;
// Criterion 7
constexpr int kRoundTrips = 1000;

constexpr std::size_t kTruncation = 256;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, x);
  return buf;
}

Outcome published_values() {
  const auto start = Clock::now();
  const ReproTable table = repro_table();
  const double elapsed = seconds_since(start);
  std::string failed;
  for (const char* name : {"r3", "rho3", "r4", "rho4", "r8", "rho8", "r9", "rho9", "m1"}) {
    const ReproRow* row = table.find(name);
    if (!row || row->status != RowStatus::kOk) failed += std::string(" ") + name;
  }
  const bool pass = failed.empty() && elapsed < kReproSeconds;
  return {pass, "9 rows" + (failed.empty() ? std::string(" within tolerance") : " off:" + failed) +
                    ", " + fmt("%.2f s", elapsed)};
}

Outcome coefficient_bounds() {
  const std::vector<double> partial = parseval_partial_sums(example_F0(kParsevalTruncation));
  const bool monotone = std::is_sorted(partial.begin(), partial.end());
  const double total = partial.back();

  double worst = std::numeric_limits<double>::infinity();
  bool consistent = true;
  const auto check = [&](const PolyharmonicMap& map, double M, BoundMode mode) {
    const BoundReport report = verify_theorem11(map, M, mode);
    consistent = consistent && report.consistent();
    for (const auto& record : report.per_bound_slack) worst = std::min(worst, record.slack);
  };
  check(example_F1(kTruncation).map, example_M1(), BoundMode::kIII);
  check(example_F0(kTruncation), 18.0, BoundMode::kI);

  const bool pass = monotone && total <= kParsevalCap && consistent && worst >= kSlackFloor;
  return {pass, "F0 Parseval " + fmt("%.6f", total) + (monotone ? " monotone" : " NOT monotone") +
                    ", min slack " + fmt("%.3e", worst)};
}

Outcome solver_properties() {
  const auto start = Clock::now();
  int cases = 0;
  std::vector<std::string> failures;
  for (Family family : {Family::kThm21, Family::kCor22, Family::kCor21, Family::kThm31, Family::kCor32}) {
    for (double M : {1.1, 2.0, 10.0, example_M1()}) {
      for (int p : {1, 2, 3, 5}) {
        ++cases;
        const RadiusProblem problem{family, M, p};
        std::string why;
        const double near_zero = equation_lhs(problem, kNearZeroR);
        if (!(near_zero >= 1.0 - kNearZeroGap && near_zero <= 1.0)) {
          why += " LHS(1e-12)=1-" + fmt("%.3e", 1.0 - near_zero);
        }
        double previous = near_zero;
        int sign_changes = 0;
        bool decreasing = true;
        for (int i = 1; i <= kMonotoneGrid; ++i) {
          const double value = equation_lhs(problem, i / (kMonotoneGrid + 1.0));
          decreasing = decreasing && value < previous;
          sign_changes += (value < 0.0) != (previous < 0.0);
          previous = value;
        }
        if (!decreasing) why += " not decreasing";
        if (sign_changes != 1) why += " sign changes " + std::to_string(sign_changes);
        try {
          const RadiusResult root = least_root(problem);
          if (!(root.residual <= kRootResidual)) why += " residual " + fmt("%.3e", root.residual);
          if (!(root.rho > 0.0)) why += " rho <= 0";
        } catch (const Error& e) {
          why += std::string(" solver: ") + e.what();
        }
        if (!why.empty()) {
          failures.push_back(std::string(family_name(family)) + " M=" + fmt("%g", M) + " p=" +
                             std::to_string(p) + ":" + why);
        }
      }
    }
  }
  const double elapsed = seconds_since(start);
  std::string detail = std::to_string(cases - static_cast<int>(failures.size())) + "/" + std::to_string(cases) +
                       " cases, " + fmt("%.3f s", elapsed);
  if (!failures.empty()) detail += "; first failure " + failures.front();
  return {failures.empty() && elapsed < kSolverSeconds, detail};
}

Outcome operator_and_derivatives() {
  const std::vector<PolyharmonicMap> maps = {ngon_harmonic({3, kTruncation}), example_F0(kTruncation),
                                             example_F1(kTruncation).map,
                                             testing::random_map(2024, 3, kTruncation)};
  double worst_operator = 0.0, worst_fd = 0.0;
  for (std::size_t m = 0; m < maps.size(); ++m) {
    const PolyharmonicMap lifted = apply_L(maps[m]);
    for (const Complex z : testing::random_disk_points(100 + m, kOraclePoints, kOracleRadius)) {
      const DerivativePair d = eval_derivatives(maps[m], z);
      const Complex pointwise = z * d.fz - std::conj(z) * d.fzbar;
      worst_operator = std::max(worst_operator, std::abs(eval(lifted, z) - pointwise));

      const DerivativePair fd = testing::finite_difference_derivatives(maps[m], z, kFdStep);
      const double scale = std::abs(d.fz) + std::abs(d.fzbar);
      const double err = std::max(std::abs(fd.fz - d.fz), std::abs(fd.fzbar - d.fzbar));
      worst_fd = std::max(worst_fd, err / scale);
    }
  }
  return {worst_operator <= kOperatorAbs && worst_fd <= kFdRel,
          "L oracle max abs " + fmt("%.2e", worst_operator) + ", FD max rel " + fmt("%.2e", worst_fd)};
}

Outcome univalence() {
  const double M1 = example_M1();
  const RadiusResult r3 = least_root({Family::kCor22, M1, 2});
  const RadiusResult r8 = least_root({Family::kCor32, M1, 2, Cor32Form::kPrinted});
  const PolyharmonicMap f1 = example_F1(kTruncation).map;
  const PolyharmonicMap lf1 = apply_L(f1);
  const PolyharmonicMap square = PolyharmonicMap::harmonic({0.0, 1.0}, {0.0, 0.0});

  const bool f1_ok = univalence_scan(f1, r3.r, kScanSamples, kScanSeed).verdict == Verdict::kNoCounterexample;
  const bool lf1_ok = univalence_scan(lf1, r8.r, kScanSamples, kScanSeed).verdict == Verdict::kNoCounterexample;
  const bool square_caught =
      univalence_scan(square, 0.9, kScanSamples, kScanSeed).verdict == Verdict::kCounterexample;
  const bool cover_f1 = covered_disk_check(f1, r3.r, r3.rho, kBoundarySamples);
  const bool cover_lf1 = covered_disk_check(lf1, r8.r, r8.rho, kBoundarySamples);

  const auto mark = [](bool ok) { return ok ? "ok" : "FAILED"; };
  return {f1_ok && lf1_ok && square_caught && cover_f1 && cover_lf1,
          std::string("F1@r3 ") + mark(f1_ok) + ", L(F1)@r8 " + mark(lf1_ok) + ", z^2 caught " +
              mark(square_caught) + ", cover F1 " + mark(cover_f1) + ", cover L(F1) " + mark(cover_lf1)};
}

Outcome inconsistency_row() {
  const ReproTable table = repro_table();
  const ReproRow* row = table.find("cor32_general_vs_printed");
  if (!row || !row->printed) return {false, "row missing"};
  const bool pass = row->status == RowStatus::kInfo && std::abs(row->computed - kGeneralRoot) <= kRootTol &&
                    std::abs(*row->printed - kPrintedRoot) <= kRootTol;
  return {pass, "general " + fmt("%.6g", row->computed) + " vs printed " + fmt("%.6g", *row->printed) +
                    " as " + status_name(row->status)};
}

bool same_bits(double x, double y) { return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y); }

bool bitwise_equal(const PolyharmonicMap& x, const PolyharmonicMap& y) {
  const auto same = [](Complex u, Complex v) { return same_bits(u.real(), v.real()) && same_bits(u.imag(), v.imag()); };
  if (x.order() != y.order() || !same(x.a0(), y.a0())) return false;
  for (std::size_t k = 1; k <= x.order(); ++k) {
    if (x.layer(k).truncation() != y.layer(k).truncation()) return false;
    for (std::size_t n = 1; n <= x.layer(k).truncation(); ++n) {
      if (!same(x.a(n, k), y.a(n, k)) || !same(x.b(n, k), y.b(n, k))) return false;
    }
  }
  return true;
}

Outcome serialization() {
  std::mt19937_64 gen(7);
  const auto finite = [&gen] {
    double x;
    do x = std::bit_cast<double>(gen()); while (!std::isfinite(x));
    return x;
  };
  int exact = 0;
  for (int trial = 0; trial < kRoundTrips; ++trial) {
    std::vector<HarmonicLayer> layers;
    for (std::size_t k = 1 + gen() % 4; k > 0; --k) {
      const std::size_t n = 1 + gen() % 32;
      std::vector<Complex> a(n), b(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (gen() % 2) a[i] = {finite(), finite()};
        if (gen() % 2) b[i] = {finite(), -0.0};
      }
      layers.emplace_back(std::move(a), std::move(b));
    }
    const PolyharmonicMap map({finite(), 0.0}, std::move(layers));
    const Metadata meta = {{"name", "trial " + std::to_string(trial)}};
    const MapDocument doc = parse_map_document(serialize_map(map, meta));
    exact += bitwise_equal(doc.map, map) && doc.metadata == meta;
  }

  const std::string head = R"({"schema_version": 1, "p": 1, "a0": [0, 0], "layers": [)";
  const std::vector<std::pair<std::string, ErrorCode>> malformed = {
      {"[1, 2", ErrorCode::kMalformedDocument},
      {head + R"({"a": [], "b": [], "c": 1}]})", ErrorCode::kUnknownField},
      {head + R"({"a": [[1, 1, 0], [1, 2, 0]], "b": []}]})", ErrorCode::kDuplicateIndex},
      {head + R"({"a": [[2, 1, 0], [1, 2, 0]], "b": []}]})", ErrorCode::kIndexOrder},
      {head + R"({"a": [[0, 1, 0]], "b": []}]})", ErrorCode::kInvalidIndex},
      {head + R"({"a": [[1, 1e309, 0]], "b": []}]})", ErrorCode::kNonFiniteNumber},
      {R"({"schema_version": 1, "p": 2, "a0": [0, 0], "layers": [{"a": [], "b": []}]})",
       ErrorCode::kLayerCountMismatch},
      {R"({"schema_version": 9, "p": 1, "a0": [0, 0], "layers": [{"a": [], "b": []}]})",
       ErrorCode::kUnsupportedSchema},
  };
  int coded = 0;
  for (const auto& [text, code] : malformed) {
    try {
      parse_map_document(text);
    } catch (const Error& e) {
      coded += e.code() == code;
    }
  }
  const bool pass = exact == kRoundTrips && coded == static_cast<int>(malformed.size());
  return {pass, std::to_string(exact) + "/" + std::to_string(kRoundTrips) + " exact round trips, " +
                    std::to_string(coded) + "/" + std::to_string(malformed.size()) + " error codes"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"published-value reproduction", published_values},
      {"coefficient-bound suite", coefficient_bounds},
      {"solver property suite", solver_properties},
      {"operator and derivative oracles", operator_and_derivatives},
      {"univalence falsification suite", univalence},
      {"inconsistency surfacing", inconsistency_row},
      {"serialization", serialization},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failed += !outcome.pass;
    std::printf("%s %zu %s: %s\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
