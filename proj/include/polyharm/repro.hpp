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

#ifndef POLYHARM_REPRO_HPP_
#define POLYHARM_REPRO_HPP_

// Recomputes the published worked-example values and sets them beside the
// printed ones.

#include <optional>
#include <string>
#include <vector>

namespace polyharm {

enum class RowStatus { kOk, kFail, kInfo };

struct ReproRow {
  std::string name;
  double computed;
  std::optional<double> printed;  // published value (or bound)
  double tolerance;               // |computed - printed| allowed; 0 for INFO rows
  RowStatus status;
  std::string note;
};

struct ReproTable {
  std::vector<ReproRow> rows;
  std::vector<std::string> notes;

  bool all_ok() const;
  const ReproRow* find(const std::string& name) const;
};

/// Truncation used for the Parseval row.
inline constexpr std::size_t kReproParsevalTruncation = 10000;

/// Solver failures propagate as polyharm::Error.
ReproTable repro_table();

/// Plain-text table; 6 significant digits unless `exact`.
std::string format_repro_table(const ReproTable& table, bool exact);

std::string status_name(RowStatus status);

}  // namespace polyharm

#endif  // POLYHARM_REPRO_HPP_
