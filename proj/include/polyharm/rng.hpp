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

#ifndef POLYHARM_RNG_HPP_
#define POLYHARM_RNG_HPP_

// Counter-based SplitMix64. draw(seed, i) is the i-th output (0-based) of the
// reference sequential SplitMix64 generator whose state starts at `seed`:
//
//   state_i = seed + (i + 1) * 0x9E3779B97F4A7C15   (mod 2^64)
//   z = (state_i ^ (state_i >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   out = z ^ (z >> 31)
//
// Random access keeps parallel scans bit-identical to serial ones.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace polyharm::rng {

constexpr std::uint64_t draw(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Uniform in [0, 1) from the top 53 bits.
constexpr double uniform(std::uint64_t seed, std::uint64_t index) {
  return static_cast<double>(draw(seed, index) >> 11) * 0x1.0p-53;
}

/// Area-uniform point of the open disk of radius r, consuming draws
/// 2*slot and 2*slot + 1.
inline std::complex<double> disk_point(std::uint64_t seed, std::uint64_t slot, double r) {
  const double radius = r * std::sqrt(uniform(seed, 2 * slot));
  const double angle = 2.0 * std::numbers::pi * uniform(seed, 2 * slot + 1);
  return std::polar(radius, angle);
}

}  // namespace polyharm::rng

#endif  // POLYHARM_RNG_HPP_
