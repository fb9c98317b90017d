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

#ifndef POLYHARM_SERIES_HPP_
#define POLYHARM_SERIES_HPP_

// Truncated polyharmonic mappings
//
//   F(z) = a0 + sum_{k=1..p} |z|^{2(k-1)} (h_k(z) + conj(g_k(z))),
//   h_k(z) = sum_{n=1..N} a_{n,k} z^n,   g_k(z) = sum_{n=1..N} b_{n,k} z^n,
//
// with evaluation, Wirtinger derivatives, the standard distortion metrics and
// the operator L = z d/dz - conj(z) d/dconj(z) as a coefficient transform.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace polyharm {

using Complex = std::complex<double>;

/// Default truncation degree of constructed maps. Overridden by the
/// POLYHARM_TRUNC environment variable when it holds a positive integer.
inline constexpr std::size_t kDefaultTruncation = 256;
std::size_t default_truncation();

/// One harmonic component h + conj(g). Index n = 1..N lives at slot n-1.
class HarmonicLayer {
 public:
  /// All-zero layer of degree N (N >= 1).
  explicit HarmonicLayer(std::size_t truncation);
  HarmonicLayer(std::vector<Complex> analytic, std::vector<Complex> coanalytic);

  std::size_t truncation() const { return a_.size(); }

  /// Coefficients for 1 <= n <= N; zero beyond N.
  Complex a(std::size_t n) const { return n >= 1 && n <= a_.size() ? a_[n - 1] : Complex{}; }
  Complex b(std::size_t n) const { return n >= 1 && n <= b_.size() ? b_[n - 1] : Complex{}; }

  std::span<const Complex> analytic() const { return a_; }
  std::span<const Complex> coanalytic() const { return b_; }

  bool operator==(const HarmonicLayer&) const = default;

 private:
  std::vector<Complex> a_;
  std::vector<Complex> b_;
};

/// Immutable value: a0 plus layers k = 1..p.
class PolyharmonicMap {
 public:
  PolyharmonicMap(Complex a0, std::vector<HarmonicLayer> layers);

  /// p = 1 map h + conj(g) with zero constant term.
  static PolyharmonicMap harmonic(std::vector<Complex> analytic,
                                  std::vector<Complex> coanalytic);

  Complex a0() const { return a0_; }
  std::size_t order() const { return layers_.size(); }
  /// Layer k, 1-based as in the series representation.
  const HarmonicLayer& layer(std::size_t k) const { return layers_.at(k - 1); }
  std::span<const HarmonicLayer> layers() const { return layers_; }
  /// Largest truncation degree over the layers.
  std::size_t truncation() const;

  /// a_{n,k} / b_{n,k}; zero outside the stored range.
  Complex a(std::size_t n, std::size_t k) const;
  Complex b(std::size_t n, std::size_t k) const;

  bool operator==(const PolyharmonicMap&) const = default;

 private:
  Complex a0_;
  std::vector<HarmonicLayer> layers_;
};

struct DerivativePair {
  Complex fz;
  Complex fzbar;
};

struct Metrics {
  double lambda;    // ||F_z| - |F_zbar||
  double Lambda;    // |F_z| + |F_zbar|
  double jacobian;  // |F_z|^2 - |F_zbar|^2
};

/// Throws Error(kDomain) for |z| > 1 or non-finite z.
Complex eval(const PolyharmonicMap& map, Complex z);
DerivativePair eval_derivatives(const PolyharmonicMap& map, Complex z);
Metrics metrics(const PolyharmonicMap& map, Complex z);

/// L(F): a0 -> 0, a_{n,k} -> n a_{n,k}, b_{n,k} -> -n b_{n,k}.
PolyharmonicMap apply_L(const PolyharmonicMap& map);

/// alpha F + beta G, padding the shorter map with zero layers/coefficients.
PolyharmonicMap combine(Complex alpha, const PolyharmonicMap& f, Complex beta,
                        const PolyharmonicMap& g);

/// The same map truncated (or zero-padded) to degree N in every layer.
PolyharmonicMap retruncate(const PolyharmonicMap& map, std::size_t truncation);

/// Moves `map` into layer `k` of an otherwise empty order-k map, i.e.
/// multiplies a harmonic map by |z|^{2(k-1)}.
PolyharmonicMap lift_to_layer(const PolyharmonicMap& harmonic_map, std::size_t k);

}  // namespace polyharm

#endif  // POLYHARM_SERIES_HPP_
