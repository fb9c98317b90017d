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

#ifndef POLYHARM_RADIUS_HPP_
#define POLYHARM_RADIUS_HPP_

// Univalence-radius equations for bounded polyharmonic maps and for L(F),
// plus the two earlier biharmonic comparison equations, solved by bracketed
// bisection.
//
// Theorem-type families share the shape
//
//   LHS(r) = 1 - c(M) * S(r),   S(0) = 0,  S increasing,  S -> inf at r = 1,
//
// where c(M) is sqrt(M^4-1), sqrt(2M^2-2) or T(M), and S sums the per-layer
// growth terms of either F (kMap*) or L(F) (kOperator*).

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>

namespace polyharm {

enum class Family {
  kThm21,   // F, |J_F(0)| = 1, c = sqrt(M^4-1), rho carries lambda_0(M)
  kCor22,   // F, lambda_F(0) = 1, c = sqrt(2M^2-2)
  kCor21,   // F = sum lambda_k |z|^{2(k-1)} G, c = T(M)
  kThm31,   // L(F), |J_F(0)| = 1, c = sqrt(M^4-1), rho carries lambda_0(M)
  kCor32,   // L(F), lambda_F(0) = 1, c = sqrt(2M^2-2)
  kSh2011,  // earlier biharmonic comparison equation for F
  kSh2009,  // earlier biharmonic comparison equation for L(F), uses m1
};

/// Which printed form of kCor32 to use. kPrinted is the expanded p = 2
/// polynomial (4r - 3r^2 + 3r^3 + 3r^4 - 3r^5)/(1-r)^3 quoted for the
/// worked example; it does not equal the general sum at p = 2 (which
/// reduces to 4r/(1-r)^3). Both are kept so the difference stays visible.
enum class Cor32Form { kGeneral, kPrinted };

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);
bool is_theorem_family(Family family);

struct RadiusProblem {
  Family family;
  double M;
  int p = 1;  // ignored by kSh2011/kSh2009
  Cor32Form cor32_form = Cor32Form::kGeneral;
};

struct RadiusResult {
  double r;
  double rho;
  double residual;  // |LHS(r)|
  int iterations;
  std::pair<double, double> bracket;  // final (lo, hi)
  std::pair<double, double> initial_bracket;
};

/// Left-hand side of the selected equation; requires 0 < r < 1 and M > 1.
double equation_lhs(const RadiusProblem& problem, double r);

/// Covered-disk radius for the selected family at radius r.
double rho(const RadiusProblem& problem, double r);

/// Least positive root of equation_lhs in (1e-15, 1 - 1e-15), located by a
/// 64-point pre-scan and refined by bisection to adjacent doubles.
RadiusResult least_root(const RadiusProblem& problem);

struct M1Minimum {
  double x_star;
  double m1;
};

/// (2 - x^2 + (4/pi) arctan x) / (x (1 - x^2)) on (0, 1).
double m1_objective(double x);

/// Minimum of m1_objective by a 1000-point scan and golden-section refinement.
M1Minimum minimize_m1();

/// Solver constants.
inline constexpr double kBracketEps = 1e-15;
inline constexpr double kBracketWidth = 1e-14;
inline constexpr double kResidualTolerance = 1e-12;
inline constexpr int kPrescanPoints = 64;

}  // namespace polyharm

#endif  // POLYHARM_RADIUS_HPP_
