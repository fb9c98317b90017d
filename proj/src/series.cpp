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

#include "polyharm/series.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <string_view>
#include <utility>

#include "polyharm/error.hpp"

namespace polyharm {
namespace {

// Points built as r*exp(i t) with r == 1 can land a few ulps outside.
constexpr double kUnitDiskSlack = 4 * std::numeric_limits<double>::epsilon();

bool is_finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void check_point(Complex z) {
  if (!is_finite(z)) throw Error(ErrorCode::kDomain, "non-finite evaluation point");
  if (std::abs(z) > 1.0 + kUnitDiskSlack) {
    throw Error(ErrorCode::kDomain, "evaluation point outside the closed unit disk");
  }
}

// sum_{n=1}^{N} c_n w^n
Complex horner(std::span<const Complex> c, Complex w) {
  Complex acc{};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * w + c[i];
  return acc * w;
}

// sum_{n=1}^{N} n c_n w^{n-1}
Complex horner_derivative(std::span<const Complex> c, Complex w) {
  Complex acc{};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * w + static_cast<double>(i + 1) * c[i];
  return acc;
}

}  // namespace

std::size_t default_truncation() {
  const char* env = std::getenv("POLYHARM_TRUNC");
  if (env == nullptr) return kDefaultTruncation;
  std::string_view text(env);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    return kDefaultTruncation;
  }
  return value;
}

HarmonicLayer::HarmonicLayer(std::size_t truncation)
    : a_(truncation), b_(truncation) {
  if (truncation == 0) throw Error(ErrorCode::kInvalidMap, "truncation degree must be >= 1");
}

HarmonicLayer::HarmonicLayer(std::vector<Complex> analytic, std::vector<Complex> coanalytic)
    : a_(std::move(analytic)), b_(std::move(coanalytic)) {
  if (a_.empty() || a_.size() != b_.size()) {
    throw Error(ErrorCode::kInvalidMap,
                "analytic and co-analytic arrays must share a length N >= 1");
  }
  auto finite = [](const std::vector<Complex>& v) { return std::all_of(v.begin(), v.end(), is_finite); };
  if (!finite(a_) || !finite(b_)) throw Error(ErrorCode::kInvalidMap, "non-finite coefficient");
}

PolyharmonicMap::PolyharmonicMap(Complex a0, std::vector<HarmonicLayer> layers)
    : a0_(a0), layers_(std::move(layers)) {
  if (layers_.empty()) throw Error(ErrorCode::kInvalidMap, "order p must be >= 1");
  if (!is_finite(a0_)) throw Error(ErrorCode::kInvalidMap, "non-finite constant term");
}

PolyharmonicMap PolyharmonicMap::harmonic(std::vector<Complex> analytic,
                                          std::vector<Complex> coanalytic) {
  std::vector<HarmonicLayer> layers;
  layers.emplace_back(std::move(analytic), std::move(coanalytic));
  return PolyharmonicMap(Complex{}, std::move(layers));
}

std::size_t PolyharmonicMap::truncation() const {
  std::size_t n = 0;
  for (const auto& layer : layers_) n = std::max(n, layer.truncation());
  return n;
}

Complex PolyharmonicMap::a(std::size_t n, std::size_t k) const {
  return k >= 1 && k <= layers_.size() ? layers_[k - 1].a(n) : Complex{};
}

Complex PolyharmonicMap::b(std::size_t n, std::size_t k) const {
  return k >= 1 && k <= layers_.size() ? layers_[k - 1].b(n) : Complex{};
}

Complex eval(const PolyharmonicMap& map, Complex z) {
  check_point(z);
  const double r2 = std::norm(z);
  Complex sum{};
  double weight = 1.0;  // |z|^{2(k-1)}
  for (const auto& layer : map.layers()) {
    const Complex g = horner(layer.coanalytic(), z);
    sum += weight * (horner(layer.analytic(), z) + std::conj(g));
    weight *= r2;
  }
  return map.a0() + sum;
}

DerivativePair eval_derivatives(const PolyharmonicMap& map, Complex z) {
  check_point(z);
  const double r2 = std::norm(z);
  const Complex zbar = std::conj(z);
  DerivativePair d{};
  double weight = 1.0;        // |z|^{2(k-1)}
  double prev_weight = 0.0;   // |z|^{2(k-2)} for k >= 2
  std::size_t k = 1;
  for (const auto& layer : map.layers()) {
    const Complex dh = horner_derivative(layer.analytic(), z);
    const Complex dg_bar = std::conj(horner_derivative(layer.coanalytic(), z));
    d.fz += weight * dh;
    d.fzbar += weight * dg_bar;
    if (k >= 2) {
      // Product rule on |z|^{2(k-1)} = (z zbar)^{k-1}.
      const Complex g_layer = horner(layer.analytic(), z) + std::conj(horner(layer.coanalytic(), z));
      const double factor = static_cast<double>(k - 1) * prev_weight;
      d.fz += factor * zbar * g_layer;
      d.fzbar += factor * z * g_layer;
    }
    prev_weight = weight;
    weight *= r2;
    ++k;
  }
  return d;
}

Metrics metrics(const PolyharmonicMap& map, Complex z) {
  const DerivativePair d = eval_derivatives(map, z);
  const double p = std::abs(d.fz);
  const double q = std::abs(d.fzbar);
  return Metrics{std::abs(p - q), p + q, (p - q) * (p + q)};
}

PolyharmonicMap apply_L(const PolyharmonicMap& map) {
  std::vector<HarmonicLayer> layers;
  layers.reserve(map.order());
  for (const auto& layer : map.layers()) {
    std::vector<Complex> a(layer.analytic().begin(), layer.analytic().end());
    std::vector<Complex> b(layer.coanalytic().begin(), layer.coanalytic().end());
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double n = static_cast<double>(i + 1);
      a[i] *= n;
      b[i] *= -n;
    }
    layers.emplace_back(std::move(a), std::move(b));
  }
  return PolyharmonicMap(Complex{}, std::move(layers));
}

PolyharmonicMap combine(Complex alpha, const PolyharmonicMap& f, Complex beta,
                        const PolyharmonicMap& g) {
  const std::size_t p = std::max(f.order(), g.order());
  std::vector<HarmonicLayer> layers;
  layers.reserve(p);
  for (std::size_t k = 1; k <= p; ++k) {
    const std::size_t nf = k <= f.order() ? f.layer(k).truncation() : 0;
    const std::size_t ng = k <= g.order() ? g.layer(k).truncation() : 0;
    const std::size_t n_max = std::max(nf, ng);
    std::vector<Complex> a(n_max), b(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
      a[n - 1] = alpha * f.a(n, k) + beta * g.a(n, k);
      // alpha conj(g) = conj(conj(alpha) g)
      b[n - 1] = std::conj(alpha) * f.b(n, k) + std::conj(beta) * g.b(n, k);
    }
    layers.emplace_back(std::move(a), std::move(b));
  }
  return PolyharmonicMap(alpha * f.a0() + beta * g.a0(), std::move(layers));
}

PolyharmonicMap retruncate(const PolyharmonicMap& map, std::size_t truncation) {
  if (truncation == 0) throw Error(ErrorCode::kInvalidMap, "truncation degree must be >= 1");
  std::vector<HarmonicLayer> layers;
  layers.reserve(map.order());
  for (const auto& layer : map.layers()) {
    std::vector<Complex> a(truncation), b(truncation);
    for (std::size_t n = 1; n <= truncation; ++n) {
      a[n - 1] = layer.a(n);
      b[n - 1] = layer.b(n);
    }
    layers.emplace_back(std::move(a), std::move(b));
  }
  return PolyharmonicMap(map.a0(), std::move(layers));
}

PolyharmonicMap lift_to_layer(const PolyharmonicMap& harmonic_map, std::size_t k) {
  if (harmonic_map.order() != 1 || k == 0) {
    throw Error(ErrorCode::kInvalidMap, "lift_to_layer expects a harmonic map and k >= 1");
  }
  // a0 is not part of any layer, so it cannot carry the |z|^{2(k-1)} factor.
  if (k > 1 && harmonic_map.a0() != Complex{}) {
    throw Error(ErrorCode::kInvalidMap, "lift_to_layer needs a zero constant term for k > 1");
  }
  const std::size_t n = harmonic_map.truncation();
  std::vector<HarmonicLayer> layers;
  for (std::size_t j = 1; j < k; ++j) layers.emplace_back(n);
  layers.push_back(harmonic_map.layer(1));
  return PolyharmonicMap(harmonic_map.a0(), std::move(layers));
}

}  // namespace polyharm
