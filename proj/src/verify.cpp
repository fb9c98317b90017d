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

#include "polyharm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "polyharm/coeff_bounds.hpp"
#include "polyharm/error.hpp"

namespace polyharm {

VerificationReport univalence_scan(const PolyharmonicMap& map, double r, std::size_t samples,
                                   std::uint64_t seed, std::string map_id,
                                   std::size_t boundary_samples) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::kDomain, "scan radius must lie in (0, 1)");
  const kernels::PairScan pairs = kernels::parallel::pair_scan(map, r, samples, seed);
  const auto side = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(samples))));
  const kernels::GridExtrema grid = kernels::parallel::polar_grid_extrema(map, r, side);

  VerificationReport report;
  report.map_id = std::move(map_id);
  report.radius = r;
  report.samples = samples;
  report.seed = seed;
  report.pair_checks = pairs.compared;
  report.min_pair_separation = pairs.min_separation;
  report.jacobian_grid = side;
  report.jacobian_min = grid.jacobian_min;
  report.boundary_samples = boundary_samples;
  report.boundary_min_modulus = boundary_min_modulus(map, r, boundary_samples);
  report.sup_norm = grid.modulus_max;
  report.parseval_sum = parseval_sum(map);
  report.verdict = pairs.collision ? Verdict::kCounterexample : Verdict::kNoCounterexample;
  report.counterexample = pairs.collision;
  return report;
}

double boundary_min_modulus(const PolyharmonicMap& map, double r, std::size_t boundary_samples) {
  if (boundary_samples == 0) throw Error(ErrorCode::kDomain, "boundary_samples must be >= 1");
  return kernels::parallel::circle_min_distance(map, r, boundary_samples, eval(map, Complex{}));
}

bool covered_disk_check(const PolyharmonicMap& map, double r, double rho,
                        std::size_t boundary_samples) {
  if (!(r > 0.0 && r < 1.0) || !(rho > 0.0)) {
    throw Error(ErrorCode::kDomain, "covered_disk_check needs 0 < r < 1 and rho > 0");
  }
  return boundary_min_modulus(map, r, boundary_samples) >= rho * (1.0 - kCoverRelativeTolerance);
}

double sup_norm_estimate(const PolyharmonicMap& map, std::size_t grid, double outer_radius) {
  return kernels::parallel::polar_max_modulus(map, grid, outer_radius);
}

std::string verdict_name(Verdict verdict) {
  return verdict == Verdict::kCounterexample ? "counterexample" : "no-counterexample";
}

}  // namespace polyharm
