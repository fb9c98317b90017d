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

#ifndef POLYHARM_VERIFY_HPP_
#define POLYHARM_VERIFY_HPP_

// Empirical falsification harness. A scan can exhibit a collision (proof of
// non-injectivity up to rounding) but never certify univalence, so the clean
// verdict is "no counterexample".

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "polyharm/kernels.hpp"
#include "polyharm/series.hpp"

namespace polyharm {

inline constexpr double kDefaultSupOuterRadius = 1.0 - 1e-6;
inline constexpr std::size_t kDefaultBoundarySamples = 4096;
/// Relative slack in the covered-disk comparison; absorbs rounding in |w| = r.
inline constexpr double kCoverRelativeTolerance = 1e-12;

enum class Verdict { kNoCounterexample, kCounterexample };

struct VerificationReport {
  std::string map_id;
  double radius;
  std::size_t samples;
  std::uint64_t seed;
  std::size_t pair_checks;       // comparisons above the separation floor
  double min_pair_separation;    // min |F(z1) - F(z2)| over those comparisons
  std::size_t jacobian_grid;     // side of the polar grid on D_r
  double jacobian_min;
  std::size_t boundary_samples;
  double boundary_min_modulus;   // min |F(w) - F(0)| on |w| = radius
  double sup_norm;               // max |F| over the polar grid of D_r
  double parseval_sum;
  Verdict verdict;
  std::optional<kernels::Collision> counterexample;

  bool operator==(const VerificationReport&) const = default;
};

/// Pair sampling with Newton refinement plus a Jacobian grid of side
/// floor(sqrt(samples)). Deterministic for a given (map, r, samples, seed).
VerificationReport univalence_scan(const PolyharmonicMap& map, double r, std::size_t samples,
                                   std::uint64_t seed, std::string map_id = {},
                                   std::size_t boundary_samples = kDefaultBoundarySamples);

/// min over `boundary_samples` equispaced w with |w| = r of |F(w) - F(0)|.
double boundary_min_modulus(const PolyharmonicMap& map, double r, std::size_t boundary_samples);

/// True iff boundary_min_modulus(map, r, boundary_samples) >= rho, up to
/// kCoverRelativeTolerance.
bool covered_disk_check(const PolyharmonicMap& map, double r, double rho,
                        std::size_t boundary_samples);

/// Lower estimate of sup |F| on D from a grid x grid polar lattice with radii
/// up to `outer_radius`. Near |z| = 1 a truncated series overshoots the true
/// map (Gibbs), so claims about the untruncated map need an outer radius
/// where the truncation tail is negligible.
double sup_norm_estimate(const PolyharmonicMap& map, std::size_t grid,
                         double outer_radius = kDefaultSupOuterRadius);

std::string verdict_name(Verdict verdict);

}  // namespace polyharm

#endif  // POLYHARM_VERIFY_HPP_
