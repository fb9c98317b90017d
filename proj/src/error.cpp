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

#include "polyharm/error.hpp"

namespace polyharm {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kInvalidMap: return "invalid map";
    case ErrorCode::kHypothesisNotMet: return "hypothesis not met";
    case ErrorCode::kNoSignChange: return "no sign change";
    case ErrorCode::kSolverTolerance: return "solver tolerance";
    case ErrorCode::kNotMonotone: return "not monotone";
    case ErrorCode::kMultimodal: return "multimodal";
    case ErrorCode::kInconsistent: return "internal inconsistency";
    case ErrorCode::kMalformedDocument: return "malformed document";
    case ErrorCode::kUnknownField: return "unknown field";
    case ErrorCode::kDuplicateIndex: return "duplicate index";
    case ErrorCode::kIndexOrder: return "index order";
    case ErrorCode::kInvalidIndex: return "invalid index";
    case ErrorCode::kNonFiniteNumber: return "non-finite number";
    case ErrorCode::kLayerCountMismatch: return "layer count mismatch";
    case ErrorCode::kUnsupportedSchema: return "unsupported schema version";
  }
  return "unknown";
}

}  // namespace polyharm
