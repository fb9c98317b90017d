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

#ifndef POLYHARM_KERNELS_HPP_
#define POLYHARM_KERNELS_HPP_

// Data-parallel scan kernels. Every kernel has an OpenMP version (used by the
// library) and a straightforward serial reference kept for testing and
// benchmarking. Reductions are min/max or "lowest index wins", so results do
// not depend on the thread count.

#include <cstddef>
#include <cstdint>
#include <optional>

#include "polyharm/series.hpp"

namespace polyharm::kernels {

/// Pairs closer than this in the domain are not compared.
inline constexpr double kPointSeparationFloor = 1e-10;
/// Image points closer than this count as a collision.
inline constexpr double kCollisionTolerance = 1e-14;

struct Collision {
  std::size_t pair_index;
  Complex z1;
  Complex z2;
  double image_distance;
  bool operator==(const Collision&) const = default;
};

struct PairScan {
  std::size_t pairs = 0;
  std::size_t compared = 0;  // pair checks that passed the separation floor
  double min_separation = 0.0;  // min |F(z1) - F(z2)| over compared checks
  std::optional<Collision> collision;  // lowest pair index

  bool operator==(const PairScan&) const = default;
};

struct GridExtrema {
  double jacobian_min;
  double modulus_max;

  bool operator==(const GridExtrema&) const = default;
};

namespace serial {

/// For each pair i: z1 = disk_point(seed, 2i, r), z2 = disk_point(seed,
/// 2i+1, r). The raw pair is compared, then z2 is pushed by Newton's method
/// towards a preimage of F(z1) inside D_r and compared again.
PairScan pair_scan(const PolyharmonicMap& map, double r, std::size_t samples, std::uint64_t seed);

/// Jacobian minimum and modulus maximum on the polar grid
/// {r i/(m-1) * exp(2 pi i j/m) : 0 <= i, j < m}.
GridExtrema polar_grid_extrema(const PolyharmonicMap& map, double r, std::size_t m);

/// min_j |F(r exp(2 pi i j/count)) - center|.
double circle_min_distance(const PolyharmonicMap& map, double r, std::size_t count, Complex center);

/// max |F| over {outer i/(grid-1) * exp(2 pi i j/grid) : 0 <= i, j < grid},
/// by direct evaluation.
double polar_max_modulus(const PolyharmonicMap& map, std::size_t grid, double outer);

}  // namespace serial

namespace parallel {

PairScan pair_scan(const PolyharmonicMap& map, double r, std::size_t samples, std::uint64_t seed);
GridExtrema polar_grid_extrema(const PolyharmonicMap& map, double r, std::size_t m);
double circle_min_distance(const PolyharmonicMap& map, double r, std::size_t count, Complex center);

/// Same lattice as the serial version; each circle is one inverse FFT of the
/// frequency-folded coefficients, circles are distributed over threads.
double polar_max_modulus(const PolyharmonicMap& map, std::size_t grid, double outer);

}  // namespace parallel

/// Threads the OpenMP kernels will use (1 without OpenMP).
int max_threads();

}  // namespace polyharm::kernels

#endif  // POLYHARM_KERNELS_HPP_
