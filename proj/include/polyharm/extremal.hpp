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

#ifndef POLYHARM_EXTREMAL_HPP_
#define POLYHARM_EXTREMAL_HPP_

#include <cstddef>

#include "polyharm/series.hpp"

namespace polyharm {

/// Regular n-gon map of the disk with vertices at the n-th roots of unity.
struct NgonSpec {
  int n = 3;
  std::size_t truncation = kDefaultTruncation;
};

/// Harmonic map carrying (n/(pi m)) sin(pi m/n) on a_m for m = 1 (mod n) and
/// on b_m for m = n-1 (mod n); every other coefficient is zero.
PolyharmonicMap ngon_harmonic(const NgonSpec& spec);

/// Closed (logarithmic) form of the same map, used as an independent oracle
/// away from the boundary. Requires |z| < 1.
Complex ngon_closed_form(int n, Complex z);

/// f3 + 17i |z|^2 f3.
PolyharmonicMap example_F0(std::size_t truncation);

struct ExampleF1 {
  PolyharmonicMap map;
  double M1;  // 4 sqrt(3) pi
  double M2;  // 34 pi / (3 sqrt(3))
};

/// (2 pi/(3 sqrt 3)) f3 + (34 pi i/(3 sqrt 3)) |z|^2 f3; lambda_F(0) = 1.
ExampleF1 example_F1(std::size_t truncation);

double example_M1();
double example_M2();

}  // namespace polyharm

#endif  // POLYHARM_EXTREMAL_HPP_
