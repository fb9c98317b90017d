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

#include <algorithm>
#include <cmath>
#include <limits>

#include "kernel_points.hpp"
#include "polyharm/error.hpp"
#include "polyharm/kernels.hpp"

namespace polyharm::kernels::serial {

PairScan pair_scan(const PolyharmonicMap& map, double r, std::size_t samples, std::uint64_t seed) {
  PairScan scan;
  scan.pairs = samples;
  scan.min_separation = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    const detail::PairOutcome out = detail::test_pair(map, r, seed, i);
    scan.compared += out.compared;
    scan.min_separation = std::min(scan.min_separation, out.min_separation);
    if (out.collision && !scan.collision) scan.collision = out.collision;
  }
  return scan;
}

GridExtrema polar_grid_extrema(const PolyharmonicMap& map, double r, std::size_t m) {
  GridExtrema result{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t i = 0; i < m; ++i) {
    const double radius = detail::grid_radius(r, i, m);
    for (std::size_t j = 0; j < m; ++j) {
      const Complex z = detail::polar_point(radius, j, m);
      result.jacobian_min = std::min(result.jacobian_min, metrics(map, z).jacobian);
      result.modulus_max = std::max(result.modulus_max, std::abs(eval(map, z)));
    }
  }
  return result;
}

double circle_min_distance(const PolyharmonicMap& map, double r, std::size_t count, Complex center) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < count; ++j) {
    best = std::min(best, std::abs(eval(map, detail::polar_point(r, j, count)) - center));
  }
  return best;
}

double polar_max_modulus(const PolyharmonicMap& map, std::size_t grid, double outer) {
  if (grid < 2) throw Error(ErrorCode::kDomain, "grid must be >= 2");
  double best = 0.0;
  for (std::size_t i = 0; i < grid; ++i) {
    const double radius = outer * static_cast<double>(i) / static_cast<double>(grid - 1);
    for (std::size_t j = 0; j < grid; ++j) {
      best = std::max(best, std::abs(eval(map, detail::polar_point(radius, j, grid))));
    }
  }
  return best;
}

}  // namespace polyharm::kernels::serial
