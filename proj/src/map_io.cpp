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

#include "polyharm/map_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <span>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "polyharm/error.hpp"

namespace polyharm {
namespace {

using json = nlohmann::json;

[[noreturn]] void fail(ErrorCode code, const std::string& where, const std::string& what) {
  throw Error(code, what + " at " + (where.empty() ? std::string("/") : where));
}

void reject_unknown(const json& object, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) fail(ErrorCode::kUnknownField, where + "/" + key, "unknown field '" + key + "'");
  }
}

const json& require_key(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) fail(ErrorCode::kMalformedDocument, where, std::string("missing field '") + key + "'");
  return *it;
}

double read_real(const json& value, const std::string& where) {
  if (!value.is_number()) fail(ErrorCode::kMalformedDocument, where, "expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) fail(ErrorCode::kNonFiniteNumber, where, "non-finite number");
  return x;
}

std::int64_t read_integer(const json& value, const std::string& where) {
  if (value.is_number_unsigned()) {
    const auto u = value.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(INT64_MAX)) fail(ErrorCode::kInvalidIndex, where, "integer out of range");
    return static_cast<std::int64_t>(u);
  }
  if (value.is_number_integer()) return value.get<std::int64_t>();
  if (value.is_number_float() && !std::isfinite(value.get<double>())) {
    fail(ErrorCode::kNonFiniteNumber, where, "non-finite number");
  }
  fail(ErrorCode::kMalformedDocument, where, "expected an integer");
}

Complex read_complex(const json& value, const std::string& where) {
  if (!value.is_array() || value.size() != 2) fail(ErrorCode::kMalformedDocument, where, "expected [re, im]");
  return {read_real(value[0], where + "/0"), read_real(value[1], where + "/1")};
}

// Sparse [[n, re, im], ...] list; returns (n, value) pairs in order.
std::vector<std::pair<std::size_t, Complex>> read_coefficients(const json& list, const std::string& where) {
  if (!list.is_array()) fail(ErrorCode::kMalformedDocument, where, "expected a list of [n, re, im]");
  std::vector<std::pair<std::size_t, Complex>> out;
  std::int64_t previous = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    const json& entry = list[i];
    if (!entry.is_array() || entry.size() != 3) fail(ErrorCode::kMalformedDocument, at, "expected [n, re, im]");
    const std::int64_t n = read_integer(entry[0], at + "/0");
    if (n < 1) fail(ErrorCode::kInvalidIndex, at + "/0", "index must be >= 1");
    if (n == previous) fail(ErrorCode::kDuplicateIndex, at + "/0", "duplicate index " + std::to_string(n));
    if (n < previous) fail(ErrorCode::kIndexOrder, at + "/0", "indices must be strictly increasing");
    previous = n;
    out.emplace_back(static_cast<std::size_t>(n), Complex{read_real(entry[1], at + "/1"), read_real(entry[2], at + "/2")});
  }
  return out;
}

HarmonicLayer read_layer(const json& layer, const std::string& where) {
  if (!layer.is_object()) fail(ErrorCode::kMalformedDocument, where, "expected a layer object");
  reject_unknown(layer, {"N", "a", "b"}, where);
  const auto a = read_coefficients(require_key(layer, "a", where), where + "/a");
  const auto b = read_coefficients(require_key(layer, "b", where), where + "/b");
  std::size_t largest = 1;
  if (!a.empty()) largest = std::max(largest, a.back().first);
  if (!b.empty()) largest = std::max(largest, b.back().first);
  std::size_t n_trunc = largest;
  if (auto it = layer.find("N"); it != layer.end()) {
    const std::int64_t declared = read_integer(*it, where + "/N");
    if (declared < 1) fail(ErrorCode::kInvalidIndex, where + "/N", "N must be >= 1");
    n_trunc = static_cast<std::size_t>(declared);
    if (largest > n_trunc) fail(ErrorCode::kInvalidIndex, where, "coefficient index exceeds N");
  }
  std::vector<Complex> av(n_trunc), bv(n_trunc);
  for (const auto& [n, c] : a) av[n - 1] = c;
  for (const auto& [n, c] : b) bv[n - 1] = c;
  return HarmonicLayer(std::move(av), std::move(bv));
}

std::string number(double x) { return json(x).dump(); }

// Only +0 may be left implicit; -0 is written so the bits survive a round trip.
bool is_positive_zero(Complex c) {
  return c.real() == 0.0 && c.imag() == 0.0 && !std::signbit(c.real()) && !std::signbit(c.imag());
}

void write_coefficients(std::ostringstream& out, std::span<const Complex> coeffs) {
  out << '[';
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (is_positive_zero(coeffs[i])) continue;
    out << (first ? "\n        " : ",\n        ");
    out << '[' << (i + 1) << ", " << number(coeffs[i].real()) << ", " << number(coeffs[i].imag()) << ']';
    first = false;
  }
  out << (first ? "]" : "\n      ]");
}

}  // namespace

MapDocument parse_map_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kMalformedDocument, std::string("JSON syntax error (byte ") +
                                                   std::to_string(e.byte) + "): " + e.what());
  } catch (const json::out_of_range& e) {
    // The lexer refuses literals such as 1e400 before any tree exists; locate
    // the quoted token for the message.
    if (e.id != 406) throw Error(ErrorCode::kMalformedDocument, e.what());
    const std::string message = e.what();
    const auto open = message.find('\'');
    const auto close = message.rfind('\'');
    std::string where = "unknown offset";
    if (open != std::string::npos && close > open) {
      const auto byte = text.find(message.substr(open + 1, close - open - 1));
      if (byte != std::string_view::npos) where = "byte " + std::to_string(byte);
    }
    throw Error(ErrorCode::kNonFiniteNumber, "number out of double range at " + where);
  }
  if (!doc.is_object()) fail(ErrorCode::kMalformedDocument, "", "document must be an object");
  reject_unknown(doc, {"schema_version", "p", "a0", "layers", "metadata"}, "");

  const std::int64_t version = read_integer(require_key(doc, "schema_version", ""), "/schema_version");
  if (version != kMapSchemaVersion) {
    fail(ErrorCode::kUnsupportedSchema, "/schema_version", "unsupported schema_version " + std::to_string(version));
  }
  const std::int64_t p = read_integer(require_key(doc, "p", ""), "/p");
  if (p < 1) fail(ErrorCode::kLayerCountMismatch, "/p", "p must be >= 1");
  const Complex a0 = read_complex(require_key(doc, "a0", ""), "/a0");

  const json& layers_json = require_key(doc, "layers", "");
  if (!layers_json.is_array()) fail(ErrorCode::kMalformedDocument, "/layers", "expected a list of layers");
  if (layers_json.size() != static_cast<std::size_t>(p)) {
    fail(ErrorCode::kLayerCountMismatch, "/layers",
         "layer count mismatch: p = " + std::to_string(p) + " but " + std::to_string(layers_json.size()) +
             " layers given");
  }
  std::vector<HarmonicLayer> layers;
  for (std::size_t k = 0; k < layers_json.size(); ++k) {
    layers.push_back(read_layer(layers_json[k], "/layers/" + std::to_string(k)));
  }

  Metadata metadata;
  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) fail(ErrorCode::kMalformedDocument, "/metadata", "expected an object");
    for (const auto& [key, value] : it->items()) {
      if (!value.is_string()) fail(ErrorCode::kMalformedDocument, "/metadata/" + key, "expected a string");
      metadata.emplace(key, value.get<std::string>());
    }
  }
  return MapDocument{static_cast<int>(version), PolyharmonicMap(a0, std::move(layers)), std::move(metadata)};
}

PolyharmonicMap parse_map(std::string_view text) { return parse_map_document(text).map; }

std::string serialize_map(const PolyharmonicMap& map, const Metadata& metadata) {
  std::ostringstream out;
  out << "{\n  \"schema_version\": " << kMapSchemaVersion << ",\n";
  out << "  \"p\": " << map.order() << ",\n";
  out << "  \"a0\": [" << number(map.a0().real()) << ", " << number(map.a0().imag()) << "],\n";
  out << "  \"layers\": [";
  for (std::size_t k = 1; k <= map.order(); ++k) {
    const HarmonicLayer& layer = map.layer(k);
    out << (k == 1 ? "\n" : ",\n") << "    {\n";
    out << "      \"N\": " << layer.truncation() << ",\n";
    out << "      \"a\": ";
    write_coefficients(out, layer.analytic());
    out << ",\n      \"b\": ";
    write_coefficients(out, layer.coanalytic());
    out << "\n    }";
  }
  out << "\n  ],\n  \"metadata\": " << json(metadata).dump() << "\n}\n";
  return out.str();
}

}  // namespace polyharm
