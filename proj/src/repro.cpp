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

#include "polyharm/repro.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "polyharm/coeff_bounds.hpp"
#include "polyharm/extremal.hpp"
#include "polyharm/radius.hpp"

namespace polyharm {
namespace {

ReproRow compare(std::string name, double computed, double printed, double tolerance) {
  const bool ok = std::abs(computed - printed) <= tolerance;
  return {std::move(name), computed, printed, tolerance, ok ? RowStatus::kOk : RowStatus::kFail, {}};
}

std::string fmt(double x, bool exact) {
  char buf[40];
  std::snprintf(buf, sizeof buf, exact ? "%.17g" : "%.6g", x);
  return buf;
}

}  // namespace

bool ReproTable::all_ok() const {
  return std::none_of(rows.begin(), rows.end(), [](const ReproRow& r) { return r.status == RowStatus::kFail; });
}

const ReproRow* ReproTable::find(const std::string& name) const {
  for (const auto& row : rows) {
    if (row.name == name) return &row;
  }
  return nullptr;
}

std::string status_name(RowStatus status) {
  switch (status) {
    case RowStatus::kOk: return "OK";
    case RowStatus::kFail: return "FAIL";
    case RowStatus::kInfo: return "INFO";
  }
  return "?";
}

ReproTable repro_table() {
  const double M1 = example_M1();
  const double M2 = example_M2();
  ReproTable table;

  const RadiusResult r3 = least_root({Family::kCor22, M1, 2});
  table.rows.push_back(compare("r3", r3.r, 0.01552, 1e-5));
  table.rows.push_back(compare("rho3", r3.rho, 0.00776, 1e-5));

  const RadiusResult r4 = least_root({Family::kSh2011, M2});
  table.rows.push_back(compare("r4", r4.r, 0.00041, 1e-5));
  table.rows.push_back(compare("rho4", r4.rho, 1.12385e-5, 2e-7));

  const RadiusResult r8 = least_root({Family::kCor32, M1, 2, Cor32Form::kPrinted});
  table.rows.push_back(compare("r8", r8.r, 0.00798, 1e-5));
  table.rows.push_back(compare("rho8", r8.rho, 0.00400, 1e-5));

  const RadiusResult r9 = least_root({Family::kSh2009, M2});
  table.rows.push_back(compare("r9", r9.r, 0.00013, 1e-5));
  table.rows.push_back(compare("rho9", r9.rho, 1.48687e-6, 5e-8));

  table.rows.push_back(compare("m1", minimize_m1().m1, 6.05934, 1e-4));

  const PolyharmonicMap f0 = example_F0(kReproParsevalTruncation);
  const std::vector<double> partial = parseval_partial_sums(f0);
  const bool monotone = std::is_sorted(partial.begin(), partial.end());
  const double total = partial.back();
  table.rows.push_back({"f0_parseval", total, 324.0, 0.0,
                        monotone && total <= 324.0 ? RowStatus::kOk : RowStatus::kFail,
                        "upper bound M^2 with M = 18, N = 10000"});

  const RadiusResult general = least_root({Family::kCor32, M1, 2, Cor32Form::kGeneral});
  table.rows.push_back({"cor32_general_vs_printed", general.r, r8.r, 0.0, RowStatus::kInfo,
                        "general L(F) sum at p = 2 reduces to 4r/(1-r)^3; printed polynomial differs"});

  table.notes.push_back(
      "r8/rho8 use the printed p = 2 polynomial (4r-3r^2+3r^3+3r^4-3r^5)/(1-r)^3; the general sum gives "
      "the cor32_general_vs_printed root.");
  table.notes.push_back("sh2009: the 4 M r^3/(1-r)^3 term is read with M = M2 like every other term.");
  return table;
}

std::string format_repro_table(const ReproTable& table, bool exact) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-26s %-24s %-24s %-10s %s\n", "row", "computed", "printed", "tol", "status");
  out << line;
  for (const auto& row : table.rows) {
    std::snprintf(line, sizeof line, "%-26s %-24s %-24s %-10s %s", row.name.c_str(),
                  fmt(row.computed, exact).c_str(), row.printed ? fmt(*row.printed, exact).c_str() : "-",
                  row.tolerance > 0.0 ? fmt(row.tolerance, false).c_str() : "-", status_name(row.status).c_str());
    out << line;
    if (!row.note.empty()) out << "  (" << row.note << ")";
    out << '\n';
  }
  for (const auto& note : table.notes) out << "note: " << note << '\n';
  return out.str();
}

}  // namespace polyharm
