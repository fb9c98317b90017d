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

#ifndef POLYHARM_ERROR_HPP_
#define POLYHARM_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyharm {

enum class ErrorCode {
  kDomain = 1,            // |z| > 1, r outside (0,1), M out of range
  kInvalidMap,            // violated PolyharmonicMap / HarmonicLayer invariant
  kHypothesisNotMet,      // a theorem precondition failed
  kNoSignChange,          // radius equation has no root in the bracket
  kSolverTolerance,       // residual or bracket width not reached
  kNotMonotone,           // pre-scan found the LHS increasing
  kMultimodal,            // m1 scan found more than one trough
  kInconsistent,          // e.g. negative rho at a root
  // Map document errors. Each malformation gets its own code.
  kMalformedDocument = 100,
  kUnknownField,
  kDuplicateIndex,
  kIndexOrder,
  kInvalidIndex,
  kNonFiniteNumber,
  kLayerCountMismatch,
  kUnsupportedSchema,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polyharm

#endif  // POLYHARM_ERROR_HPP_
