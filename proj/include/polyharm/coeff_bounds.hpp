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

#ifndef POLYHARM_COEFF_BOUNDS_HPP_
#define POLYHARM_COEFF_BOUNDS_HPP_

// Coefficient estimates for bounded polyharmonic maps whose same-index
// coefficients across layers pairwise satisfy |arg(x/y)| <= pi/2.

#include <cstddef>
#include <string>
#include <vector>

#include "polyharm/series.hpp"

namespace polyharm {

/// Slack below which a bound counts as violated.
inline constexpr double kBoundSlackTolerance = 1e-12;
/// Absolute tolerance for F(0) = 0, |J_F(0)| = 1 and lambda_F(0) = 1.
inline constexpr double kHypothesisTolerance = 1e-9;

enum class BoundMode { kI, kII, kIII };

struct BoundRecord {
  std::string name;
  double bound;
  double attained;
  double slack;  // bound - attained
};

struct BoundReport {
  BoundMode mode;
  double M;
  std::size_t truncation;
  double parseval_sum;
  bool arg_condition;
  std::vector<BoundRecord> per_bound_slack;

  bool consistent() const;
  const BoundRecord* find(const std::string& name) const;
};

/// Re(x conj(y)) >= 0 for every pair of non-zero same-index coefficients in
/// distinct layers, separately for the a's and the b's. Pairs exactly at
/// pi/2 pass; a relative 1e-12 band absorbs rounding at that boundary.
bool check_arg_condition(const PolyharmonicMap& map);

/// |a0|^2 + sum_k sum_n (|a_{n,k}|^2 + |b_{n,k}|^2), summed in increasing n.
double parseval_sum(const PolyharmonicMap& map);

/// Running Parseval sums over degrees 1..N (entry n-1 includes all
/// coefficients of index <= n in every layer, plus |a0|^2).
std::vector<double> parseval_partial_sums(const PolyharmonicMap& map);

/// sqrt(2) / (sqrt(M^2-1) + sqrt(M^2+1)). Requires M >= 1.
double lambda_0(double M);

/// Threshold between the two branches of lambda_lemma_a.
double lemma_a_threshold();

/// Piecewise lower bound of lambda_F(0) for a harmonic map with J_F(0) = 1
/// and |F| < M: lambda_0(M) up to the threshold, pi/(4M) beyond it.
double lambda_lemma_a(double M);

/// min(sqrt(2M^2-2), 4M/pi).
double T_bound(double M);

/// min(sqrt(2M^2-2), sqrt(M^4-1) * lambda_F(0)).
double T1_bound(double M, double lambda_at_zero);

/// Evaluates the selected part of the coefficient theorem (plus the
/// per-index sum bounds) against the stored coefficients. Throws
/// Error(kHypothesisNotMet) naming the first failed hypothesis.
BoundReport verify_theorem11(const PolyharmonicMap& map, double M, BoundMode mode);

}  // namespace polyharm

#endif  // POLYHARM_COEFF_BOUNDS_HPP_
