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

#include "polyharm/extremal.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "polyharm/error.hpp"

namespace polyharm {
namespace {

using std::numbers::pi;

double ngon_coefficient(int n, std::size_t m) {
  const double md = static_cast<double>(m);
  return n / (pi * md) * std::sin(pi * md / n);
}

double f1_scale() { return 2.0 * pi / (3.0 * std::sqrt(3.0)); }

}  // namespace

PolyharmonicMap ngon_harmonic(const NgonSpec& spec) {
  if (spec.n < 3) throw Error(ErrorCode::kDomain, "an n-gon needs n >= 3");
  if (spec.truncation == 0) throw Error(ErrorCode::kInvalidMap, "truncation degree must be >= 1");
  const auto n = static_cast<std::size_t>(spec.n);
  std::vector<Complex> a(spec.truncation), b(spec.truncation);
  for (std::size_t m = 1; m <= spec.truncation; ++m) {
    if (m % n == 1) a[m - 1] = ngon_coefficient(spec.n, m);
    if (m % n == n - 1) b[m - 1] = ngon_coefficient(spec.n, m);
  }
  return PolyharmonicMap::harmonic(std::move(a), std::move(b));
}

Complex ngon_closed_form(int n, Complex z) {
  if (n < 3) throw Error(ErrorCode::kDomain, "an n-gon needs n >= 3");
  if (!(std::abs(z) < 1.0)) throw Error(ErrorCode::kDomain, "closed form needs |z| < 1");
  // (1/pi) sum_k alpha^k arg((z - beta^{2k+1}) / (z - beta^{2k-1})). Inside
  // the disk the subtended angle lies in (pi/n, pi + pi/n), so it is taken
  // in [0, 2 pi) rather than as a principal value.
  Complex sum{};
  for (int k = 0; k < n; ++k) {
    const Complex vertex = std::polar(1.0, 2.0 * pi * k / n);
    const Complex ahead = std::polar(1.0, pi * (2 * k + 1) / n);
    const Complex behind = std::polar(1.0, pi * (2 * k - 1) / n);
    double angle = std::arg((z - ahead) / (z - behind));
    if (angle < 0.0) angle += 2.0 * pi;
    sum += vertex * angle;
  }
  return sum / pi;
}

PolyharmonicMap example_F0(std::size_t truncation) {
  const PolyharmonicMap f3 = ngon_harmonic({3, truncation});
  return combine(1.0, lift_to_layer(f3, 1), Complex(0.0, 17.0), lift_to_layer(f3, 2));
}

double example_M1() { return 4.0 * std::sqrt(3.0) * pi; }
double example_M2() { return 34.0 * pi / (3.0 * std::sqrt(3.0)); }

ExampleF1 example_F1(std::size_t truncation) {
  const PolyharmonicMap f3 = ngon_harmonic({3, truncation});
  const double s = f1_scale();
  PolyharmonicMap map = combine(s, lift_to_layer(f3, 1),
                                Complex(0.0, 34.0 * pi / (3.0 * std::sqrt(3.0))),
                                lift_to_layer(f3, 2));
  return {std::move(map), example_M1(), example_M2()};
}

}  // namespace polyharm
