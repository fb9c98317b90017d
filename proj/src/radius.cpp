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

#include "polyharm/radius.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "polyharm/coeff_bounds.hpp"
#include "polyharm/error.hpp"

namespace polyharm {
namespace {

using std::numbers::pi;

struct FamilyEntry {
  Family family;
  std::string_view name;
};

constexpr std::array<FamilyEntry, 7> kFamilies{{
    {Family::kThm21, "thm21"},
    {Family::kCor22, "cor22"},
    {Family::kCor21, "cor21"},
    {Family::kThm31, "thm31"},
    {Family::kCor32, "cor32"},
    {Family::kSh2011, "sh2011"},
    {Family::kSh2009, "sh2009"},
}};

bool acts_on_operator(Family f) { return f == Family::kThm31 || f == Family::kCor32; }

void validate(const RadiusProblem& problem) {
  if (!(problem.M > 1.0) || !std::isfinite(problem.M)) {
    throw Error(ErrorCode::kDomain, "M must be a finite value > 1");
  }
  if (is_theorem_family(problem.family) && problem.p < 1) {
    throw Error(ErrorCode::kDomain, "p must be >= 1");
  }
  if (problem.family == Family::kCor32 && problem.cor32_form == Cor32Form::kPrinted &&
      problem.p != 2) {
    throw Error(ErrorCode::kDomain, "the printed cor32 polynomial exists only for p = 2");
  }
}

void validate_radius(double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorCode::kDomain, "r must lie in (0, 1)");
}

// Coefficient multiplying the growth terms.
double growth_coefficient(const RadiusProblem& problem) {
  const double M = problem.M;
  switch (problem.family) {
    case Family::kThm21:
    case Family::kThm31:
      return std::sqrt(M * M * M * M - 1.0);
    case Family::kCor22:
    case Family::kCor32:
      return std::sqrt(2.0 * M * M - 2.0);
    case Family::kCor21:
      return T_bound(M);
    default:
      return 0.0;
  }
}

// Growth sum for F, written over the common denominator (1-r)^2:
//   (2r - r^2) + sum_{k<p} r^{2k} + 2(1-r) sum_{k<p} k r^{2k}.
double map_growth(double r, int p) {
  const double q = 1.0 - r;
  double even = 0.0, weighted = 0.0, power = 1.0;
  for (int k = 1; k < p; ++k) {
    power *= r * r;
    even += power;
    weighted += k * power;
  }
  return ((2.0 * r - r * r) + even + 2.0 * q * weighted) / (q * q);
}

// Growth sum for L(F), over (1-r)^3:
//   (2r - r^2)(1-r) + sum_{k<=p} 2 r^{2k-1} + (1-r) sum_{2<=k<=p} (2k-1) r^{2(k-1)}.
double operator_growth(double r, int p) {
  const double q = 1.0 - r;
  double odd = 0.0, weighted = 0.0;
  double odd_power = r;  // r^{2k-1}
  double even_power = 1.0;  // r^{2(k-1)}
  for (int k = 1; k <= p; ++k) {
    odd += 2.0 * odd_power;
    if (k >= 2) weighted += (2.0 * k - 1.0) * even_power;
    odd_power *= r * r;
    even_power *= r * r;
  }
  return ((2.0 * r - r * r) * q + odd + q * weighted) / (q * q * q);
}

double printed_cor32_growth(double r) {
  const double q = 1.0 - r;
  const double r2 = r * r;
  return (4.0 * r - 3.0 * r2 + 3.0 * r2 * r + 3.0 * r2 * r2 - 3.0 * r2 * r2 * r) / (q * q * q);
}

double sh2011_lhs(double M, double r) {
  const double q = 1.0 - r;
  return pi / (4.0 * M) - 4.0 * M * r * (2.0 - r) / (pi * q * q) - 4.0 * M * r * r / (pi * q * q) -
         2.0 * M * r;
}

double sh2009_lhs(double M, double r, double m1) {
  const double q = 1.0 - r;
  return pi / (4.0 * M) - 6.0 * M * r * r / (q * q) - 4.0 * M * r * r * r / (q * q * q) -
         16.0 * M / (pi * pi) * m1 * std::atan(r) - 4.0 * M * r / (q * q * q);
}

double cached_m1() {
  static const double m1 = minimize_m1().m1;
  return m1;
}

}  // namespace

std::string_view family_name(Family family) {
  for (const auto& entry : kFamilies) {
    if (entry.family == family) return entry.name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& entry : kFamilies) {
    if (entry.name == name) return entry.family;
  }
  return std::nullopt;
}

bool is_theorem_family(Family family) {
  return family != Family::kSh2011 && family != Family::kSh2009;
}

double equation_lhs(const RadiusProblem& problem, double r) {
  validate(problem);
  validate_radius(r);
  switch (problem.family) {
    case Family::kSh2011:
      return sh2011_lhs(problem.M, r);
    case Family::kSh2009:
      return sh2009_lhs(problem.M, r, cached_m1());
    case Family::kCor32:
      if (problem.cor32_form == Cor32Form::kPrinted) {
        return 1.0 - growth_coefficient(problem) * printed_cor32_growth(r);
      }
      [[fallthrough]];
    default: {
      const double growth = acts_on_operator(problem.family) ? operator_growth(r, problem.p)
                                                             : map_growth(r, problem.p);
      return 1.0 - growth_coefficient(problem) * growth;
    }
  }
}

double rho(const RadiusProblem& problem, double r) {
  validate(problem);
  validate_radius(r);
  const double M = problem.M;
  const double q = 1.0 - r;
  switch (problem.family) {
    case Family::kSh2011:
      return r * (pi / (4.0 * M) - 4.0 * M * r / (pi * q) - 4.0 * M * r * r / (pi * q));
    case Family::kSh2009:
      return r * (pi / (4.0 * M) - 2.0 * M * r * r / (q * q) -
                  16.0 * M / (pi * pi) * cached_m1() * std::atan(r));
    default:
      break;
  }

  const double c = growth_coefficient(problem);
  const double scale = (problem.family == Family::kThm21 || problem.family == Family::kThm31)
                           ? lambda_0(M)
                           : 1.0;
  double bracket = 0.0;
  if (acts_on_operator(problem.family)) {
    // (2r - r^2 + sum_{2<=k<=p} r^{2(k-1)}) / (1-r)^2
    double even = 0.0, power = 1.0;
    for (int k = 2; k <= problem.p; ++k) {
      power *= r * r;
      even += power;
    }
    bracket = 1.0 - c * ((2.0 * r - r * r) + even) / (q * q);
  } else {
    // (r + sum_{k<p} 2 r^{2k}) / (1-r)
    double even = 0.0, power = 1.0;
    for (int k = 1; k < problem.p; ++k) {
      power *= r * r;
      even += 2.0 * power;
    }
    bracket = 1.0 - c * (r + even) / q;
  }
  return scale * r * bracket;
}

RadiusResult least_root(const RadiusProblem& problem) {
  validate(problem);
  auto f = [&](double r) { return equation_lhs(problem, r); };

  // Pre-scan: eps, i/(n+1) for i = 1..n, 1 - eps.
  double lo = kBracketEps;
  double f_lo = f(lo);
  if (!(f_lo > 0.0)) {
    throw Error(ErrorCode::kNoSignChange, "LHS is not positive at the left end of the bracket");
  }
  double hi = 0.0;
  bool found = false;
  double previous = f_lo;
  for (int i = 1; i <= kPrescanPoints + 1; ++i) {
    const double x = i <= kPrescanPoints ? static_cast<double>(i) / (kPrescanPoints + 1)
                                         : 1.0 - kBracketEps;
    const double value = f(x);
    if (is_theorem_family(problem.family) && !(value < previous)) {
      throw Error(ErrorCode::kNotMonotone, "LHS is not strictly decreasing on the pre-scan grid");
    }
    previous = value;
    if (!found) {
      if (value > 0.0) {
        lo = x;
        f_lo = value;
      } else {
        hi = x;
        found = true;
        if (!is_theorem_family(problem.family)) break;
      }
    }
  }
  if (!found) {
    throw Error(ErrorCode::kNoSignChange, "LHS keeps its sign on (0, 1)");
  }

  RadiusResult result{};
  result.initial_bracket = {lo, hi};
  // Bisect down to adjacent doubles; the width target is met long before.
  int iterations = 0;
  while (true) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    ++iterations;
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo > kBracketWidth) {
    throw Error(ErrorCode::kSolverTolerance, "bisection bracket did not shrink below 1e-14");
  }
  const double f_hi = f(hi);
  f_lo = f(lo);
  result.r = std::abs(f_lo) <= std::abs(f_hi) ? lo : hi;
  result.residual = std::min(std::abs(f_lo), std::abs(f_hi));
  result.iterations = iterations;
  result.bracket = {lo, hi};
  if (result.residual > kResidualTolerance) {
    throw Error(ErrorCode::kSolverTolerance,
                "root residual " + std::to_string(result.residual) + " exceeds 1e-12");
  }
  result.rho = rho(problem, result.r);
  if (!(result.rho > 0.0)) {
    throw Error(ErrorCode::kInconsistent, "covered-disk radius is not positive at the root");
  }
  return result;
}

double m1_objective(double x) {
  return (2.0 - x * x + (4.0 / pi) * std::atan(x)) / (x * (1.0 - x * x));
}

M1Minimum minimize_m1() {
  constexpr int kScan = 1000;
  std::array<double, kScan> values{};
  for (int i = 0; i < kScan; ++i) values[i] = m1_objective((i + 1.0) / (kScan + 1.0));

  int troughs = 0;
  int best = 0;
  for (int i = 1; i + 1 < kScan; ++i) {
    if (values[i] < values[i - 1] && values[i] <= values[i + 1]) ++troughs;
    if (values[i] < values[best]) best = i;
  }
  if (troughs != 1) throw Error(ErrorCode::kMultimodal, "scan found " + std::to_string(troughs) + " troughs");

  // Golden-section on the two scan cells around the best sample.
  double a = (best + 0.0) / (kScan + 1.0);
  double b = (best + 2.0) / (kScan + 1.0);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = m1_objective(c), fd = m1_objective(d);
  while (b - a > 1e-10) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = m1_objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = m1_objective(d);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, m1_objective(x)};
}

}  // namespace polyharm
