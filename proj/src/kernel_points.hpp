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

#ifndef POLYHARM_SRC_KERNEL_POINTS_HPP_
#define POLYHARM_SRC_KERNEL_POINTS_HPP_

// Per-item work shared by the serial and OpenMP kernels.

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

#include "polyharm/kernels.hpp"
#include "polyharm/rng.hpp"

namespace polyharm::kernels::detail {

struct PairOutcome {
  std::size_t compared = 0;
  double min_separation = std::numeric_limits<double>::infinity();
  std::optional<Collision> collision;
};

inline void compare(const PolyharmonicMap& map, std::size_t index, Complex z1, Complex f1,
                    Complex z2, PairOutcome& out) {
  if (std::abs(z1 - z2) <= kPointSeparationFloor) return;
  const double distance = std::abs(eval(map, z2) - f1);
  ++out.compared;
  out.min_separation = std::min(out.min_separation, distance);
  if (distance <= kCollisionTolerance && !out.collision) {
    out.collision = Collision{index, z1, z2, distance};
  }
}

// Newton iteration for F(w) = target on the real 2x2 system
// fz dw + fzbar conj(dw) = -(F(w) - target). Gives up when the iterate leaves
// D_r or the Jacobian degenerates.
inline std::optional<Complex> newton_preimage(const PolyharmonicMap& map, Complex start,
                                              Complex target, double r) {
  constexpr int kMaxIterations = 60;
  Complex w = start;
  for (int it = 0; it < kMaxIterations; ++it) {
    const Complex residual = eval(map, w) - target;
    const DerivativePair d = eval_derivatives(map, w);
    const double jacobian = std::norm(d.fz) - std::norm(d.fzbar);
    if (!(std::abs(jacobian) > 1e-300)) return std::nullopt;
    const Complex step = (std::conj(d.fz) * (-residual) - d.fzbar * std::conj(-residual)) / jacobian;
    w += step;
    if (!(std::abs(w) < r)) return std::nullopt;
    if (std::abs(step) <= 1e-16 * std::max(std::abs(w), 1e-3 * r)) break;
  }
  return w;
}

inline PairOutcome test_pair(const PolyharmonicMap& map, double r, std::uint64_t seed,
                             std::size_t index) {
  PairOutcome out;
  const Complex z1 = rng::disk_point(seed, 2 * index, r);
  const Complex z2 = rng::disk_point(seed, 2 * index + 1, r);
  const Complex f1 = eval(map, z1);
  compare(map, index, z1, f1, z2, out);
  if (const auto w = newton_preimage(map, z2, f1, r)) compare(map, index, z1, f1, *w, out);
  return out;
}

// Radii r i/(m-1), i < m: the lattice covers the closed disk D_r.
inline double grid_radius(double r, std::size_t i, std::size_t m) {
  return m < 2 ? 0.0 : r * static_cast<double>(i) / static_cast<double>(m - 1);
}

inline Complex polar_point(double radius, std::size_t j, std::size_t count) {
  return std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(count));
}

}  // namespace polyharm::kernels::detail

#endif  // POLYHARM_SRC_KERNEL_POINTS_HPP_
