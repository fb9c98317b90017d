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

#include "polyharm/coeff_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "polyharm/error.hpp"

namespace polyharm {
namespace {

constexpr double kArgConditionBand = 1e-12;

void require_m_at_least_one(double M) {
  if (!(M >= 1.0) || !std::isfinite(M)) throw Error(ErrorCode::kDomain, "M must be a finite value >= 1");
}

// Re(x conj(y)) >= 0, up to rounding relative to |x||y|.
bool same_half_plane(Complex x, Complex y) {
  const double inner = (x * std::conj(y)).real();
  return inner >= -kArgConditionBand * std::abs(x) * std::abs(y);
}

template <typename Coeff>
bool pairwise_ok(const PolyharmonicMap& map, Coeff coeff) {
  const std::size_t p = map.order();
  const std::size_t n_max = map.truncation();
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t k1 = 1; k1 <= p; ++k1) {
      const Complex x = coeff(n, k1);
      if (x == Complex{}) continue;
      for (std::size_t k2 = k1 + 1; k2 <= p; ++k2) {
        const Complex y = coeff(n, k2);
        if (y != Complex{} && !same_half_plane(x, y)) return false;
      }
    }
  }
  return true;
}

void add(BoundReport& report, std::string name, double bound, double attained) {
  report.per_bound_slack.push_back({std::move(name), bound, attained, bound - attained});
}

void require(bool ok, const char* hypothesis) {
  if (!ok) throw Error(ErrorCode::kHypothesisNotMet, hypothesis);
}

}  // namespace

bool BoundReport::consistent() const {
  return std::all_of(per_bound_slack.begin(), per_bound_slack.end(),
                     [](const BoundRecord& r) { return r.slack >= -kBoundSlackTolerance; });
}

const BoundRecord* BoundReport::find(const std::string& name) const {
  for (const auto& r : per_bound_slack) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

bool check_arg_condition(const PolyharmonicMap& map) {
  return pairwise_ok(map, [&](std::size_t n, std::size_t k) { return map.a(n, k); }) &&
         pairwise_ok(map, [&](std::size_t n, std::size_t k) { return map.b(n, k); });
}

std::vector<double> parseval_partial_sums(const PolyharmonicMap& map) {
  const std::size_t n_max = map.truncation();
  std::vector<double> sums(n_max);
  double acc = std::norm(map.a0());
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (std::size_t k = 1; k <= map.order(); ++k) {
      acc += std::norm(map.a(n, k)) + std::norm(map.b(n, k));
    }
    sums[n - 1] = acc;
  }
  return sums;
}

double parseval_sum(const PolyharmonicMap& map) { return parseval_partial_sums(map).back(); }

double lambda_0(double M) {
  require_m_at_least_one(M);
  return std::numbers::sqrt2 / (std::sqrt(M * M - 1.0) + std::sqrt(M * M + 1.0));
}

double lemma_a_threshold() {
  using std::numbers::pi;
  return pi / (2.0 * std::pow(2.0 * pi * pi - 16.0, 0.25));
}

double lambda_lemma_a(double M) {
  require_m_at_least_one(M);
  if (M <= lemma_a_threshold()) return lambda_0(M);
  return std::numbers::pi / (4.0 * M);
}

double T_bound(double M) {
  require_m_at_least_one(M);
  return std::min(std::sqrt(2.0 * M * M - 2.0), 4.0 * M / std::numbers::pi);
}

double T1_bound(double M, double lambda_at_zero) {
  require_m_at_least_one(M);
  return std::min(std::sqrt(2.0 * M * M - 2.0), std::sqrt(M * M * M * M - 1.0) * lambda_at_zero);
}

BoundReport verify_theorem11(const PolyharmonicMap& map, double M, BoundMode mode) {
  if (!(M > 0.0) || !std::isfinite(M)) throw Error(ErrorCode::kDomain, "M must be positive");
  if (mode != BoundMode::kI) require_m_at_least_one(M);

  BoundReport report{mode, M, map.truncation(), parseval_sum(map), check_arg_condition(map), {}};
  require(report.arg_condition, "argument condition on same-index coefficients");

  const Metrics at_zero = metrics(map, Complex{});
  if (mode != BoundMode::kI) {
    require(std::abs(eval(map, Complex{})) <= kHypothesisTolerance, "F(0) = 0");
  }
  if (mode == BoundMode::kII) {
    require(std::abs(std::abs(at_zero.jacobian) - 1.0) <= kHypothesisTolerance, "|J_F(0)| = 1");
  }
  if (mode == BoundMode::kIII) {
    require(std::abs(at_zero.lambda - 1.0) <= kHypothesisTolerance, "lambda_F(0) = 1");
  }

  const std::size_t p = map.order();
  const std::size_t n_max = map.truncation();
  const double sp = static_cast<double>(p);

  double pair_max = 0.0;           // over all (n,k)
  double off_pair_max = 0.0;       // over (n,k) != (1,1)
  double off_single_max = 0.0;     // max |a|, |b| over (n,k) != (1,1)
  double off_square_sum = 0.0;     // sum over (n,k) != (1,1) of (|a|+|b|)^2
  double sum_a_max = 0.0, sum_b_max = 0.0, sum_ab_max = 0.0;        // all n
  double sum_a_tail = 0.0, sum_b_tail = 0.0, sum_ab_tail = 0.0;     // n >= 2
  for (std::size_t n = 1; n <= n_max; ++n) {
    double sum_a = 0.0, sum_b = 0.0;
    for (std::size_t k = 1; k <= p; ++k) {
      const double abs_a = std::abs(map.a(n, k));
      const double abs_b = std::abs(map.b(n, k));
      sum_a += abs_a;
      sum_b += abs_b;
      pair_max = std::max(pair_max, abs_a + abs_b);
      if (n != 1 || k != 1) {
        off_pair_max = std::max(off_pair_max, abs_a + abs_b);
        off_single_max = std::max({off_single_max, abs_a, abs_b});
        off_square_sum += (abs_a + abs_b) * (abs_a + abs_b);
      }
    }
    sum_a_max = std::max(sum_a_max, sum_a);
    sum_b_max = std::max(sum_b_max, sum_b);
    sum_ab_max = std::max(sum_ab_max, sum_a + sum_b);
    if (n >= 2) {
      sum_a_tail = std::max(sum_a_tail, sum_a);
      sum_b_tail = std::max(sum_b_tail, sum_b);
      sum_ab_tail = std::max(sum_ab_tail, sum_a + sum_b);
    }
  }

  add(report, "parseval", M * M, report.parseval_sum);
  add(report, "pair_sum", std::numbers::sqrt2 * M, pair_max);
  add(report, "layer_sum_a", std::sqrt(sp) * M, sum_a_max);
  add(report, "layer_sum_b", std::sqrt(sp) * M, sum_b_max);
  add(report, "layer_sum_ab", std::sqrt(2.0 * sp) * M, sum_ab_max);

  if (mode == BoundMode::kI) return report;

  const double tail_root = std::sqrt(off_square_sum);
  const double m2m1 = M * M - 1.0;
  if (mode == BoundMode::kII) {
    const double lambda_f = at_zero.lambda;
    add(report, "root_square_sum", std::sqrt(M * M * M * M - 1.0) * lambda_f, tail_root);
    add(report, "off_pair_sum", T1_bound(M, lambda_f), off_pair_max);
    // Lower bound: lambda_0(M) <= lambda_F(0).
    add(report, "lambda_at_zero", lambda_f, lambda_0(M));
  } else {
    add(report, "root_square_sum", std::sqrt(2.0 * m2m1), tail_root);
    add(report, "off_pair_sum", std::sqrt(2.0 * m2m1), off_pair_max);
  }
  add(report, "off_single", std::sqrt(m2m1), off_single_max);
  add(report, "tail_layer_sum_a", std::sqrt(sp * m2m1), sum_a_tail);
  add(report, "tail_layer_sum_b", std::sqrt(sp * m2m1), sum_b_tail);
  add(report, "tail_layer_sum_ab", std::sqrt(2.0 * sp * m2m1), sum_ab_tail);
  return report;
}

}  // namespace polyharm
