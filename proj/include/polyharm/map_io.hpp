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

#ifndef POLYHARM_MAP_IO_HPP_
#define POLYHARM_MAP_IO_HPP_

// JSON map documents, schema_version 1:
//
//   {
//     "schema_version": 1,
//     "p": 2,
//     "a0": [re, im],
//     "layers": [ {"N": 256, "a": [[n, re, im], ...], "b": [[n, re, im], ...]}, ... ],
//     "metadata": {"name": "...", "provenance": "..."}
//   }
//
// Coefficient lists are sparse with strictly increasing n >= 1. "N" is
// optional on input (defaults to the largest listed index, or 1) and always
// written on output so that trailing zero coefficients survive a round trip.
// "metadata" is optional and holds string values only. Any other key is
// rejected.

#include <map>
#include <string>
#include <string_view>

#include "polyharm/series.hpp"

namespace polyharm {

inline constexpr int kMapSchemaVersion = 1;

using Metadata = std::map<std::string, std::string>;

struct MapDocument {
  int schema_version = kMapSchemaVersion;
  PolyharmonicMap map;
  Metadata metadata;
};

/// Throws Error with one of kMalformedDocument, kUnknownField,
/// kDuplicateIndex, kIndexOrder, kInvalidIndex, kNonFiniteNumber,
/// kLayerCountMismatch or kUnsupportedSchema; the message names the JSON
/// pointer of the offending value.
MapDocument parse_map_document(std::string_view text);
PolyharmonicMap parse_map(std::string_view text);

/// Pretty-printed document; numbers use the shortest form that reads back to
/// the same double.
std::string serialize_map(const PolyharmonicMap& map, const Metadata& metadata = {});

}  // namespace polyharm

#endif  // POLYHARM_MAP_IO_HPP_
