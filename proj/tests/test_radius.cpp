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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "polyharm/coeff_bounds.hpp"
#include "polyharm/error.hpp"
#include "polyharm/extremal.hpp"
#include "polyharm/radius.hpp"
#include "test_support.hpp"

namespace polyharm {
namespace {

using std::numbers::pi;
using testing::naive_map_growth;
using testing::naive_operator_growth;

constexpr Family kTheoremFamilies[] = {Family::kThm21, Family::kCor22, Family::kCor21, Family::kThm31,
                                       Family::kCor32};
constexpr Family kAllFamilies[] = {Family::kThm21, Family::kCor22, Family::kCor21, Family::kThm31,
                                   Family::kCor32, Family::kSh2011, Family::kSh2009};

double coefficient(Family family, double M) {
  switch (family) {
    case Family::kThm21:
    case Family::kThm31: return std::sqrt(M * M * M * M - 1.0);
    case Family::kCor21: return std::min(std::sqrt(2.0 * M * M - 2.0), 4.0 * M / pi);
    default: return std::sqrt(2.0 * M * M - 2.0);
  }
}

bool on_operator(Family family) { return family == Family::kThm31 || family == Family::kCor32; }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(-1);
}

TEST(EquationLhs, TheoremFamiliesStartAtOne) {
  for (Family family : kTheoremFamilies) {
    for (int p : {1, 2, 3}) {
      const double value = equation_lhs({family, 2.0, p}, 1e-12);
      EXPECT_LE(value, 1.0) << family_name(family);
      EXPECT_GE(value, 1.0 - 1e-9) << family_name(family);
    }
  }
}

TEST(EquationLhs, RoundedPublishedRootIsNearZero) {
  EXPECT_LE(std::abs(equation_lhs({Family::kCor22, example_M1(), 2}, 0.01552)), 2e-3);
}

TEST(EquationLhs, MatchesTermwiseOracle) {
  const double M = 2.0, r = 0.05;
  const double expected = 1.0 - std::sqrt(2.0 * M * M - 2.0) * naive_map_growth(r, 3);
  EXPECT_NEAR(equation_lhs({Family::kCor22, M, 3}, r), expected, 1e-14);
}

TEST(EquationLhs, AllTheoremFamiliesMatchTermwiseOracle) {
  for (Family family : kTheoremFamilies) {
    for (double M : {1.1, 2.0, 10.0, example_M1()}) {
      for (int p : {1, 2, 3, 5, 8}) {
        for (double r : {1e-6, 0.003, 0.05, 0.3, 0.7, 0.95}) {
          const double growth = on_operator(family) ? naive_operator_growth(r, p) : naive_map_growth(r, p);
          const double expected = 1.0 - coefficient(family, M) * growth;
          ASSERT_NEAR(equation_lhs({family, M, p}, r), expected, 1e-12 * std::max(1.0, std::abs(expected)))
              << family_name(family) << " M " << M << " p " << p << " r " << r;
        }
      }
    }
  }
}

TEST(EquationLhs, PrintedCorollaryPolynomial) {
  const double M = example_M1(), r = 0.01;
  const double q = 1.0 - r;
  const double expected = 1.0 - std::sqrt(2.0 * M * M - 2.0) *
                                    (4 * r - 3 * r * r + 3 * std::pow(r, 3) + 3 * std::pow(r, 4) -
                                     3 * std::pow(r, 5)) / (q * q * q);
  EXPECT_NEAR(equation_lhs({Family::kCor32, M, 2, Cor32Form::kPrinted}, r), expected, 1e-14);
}

// The general operator sum at p = 2 collapses to 4r/(1-r)^3.
TEST(EquationLhs, GeneralCorollaryFormAtOrderTwo) {
  for (double r : {0.001, 0.01, 0.2, 0.6}) {
    EXPECT_NEAR(naive_operator_growth(r, 2), 4.0 * r / std::pow(1.0 - r, 3), 1e-13 * naive_operator_growth(r, 2));
    EXPECT_NEAR(equation_lhs({Family::kCor32, 3.0, 2}, r), 1.0 - std::sqrt(16.0) * 4.0 * r / std::pow(1.0 - r, 3),
                1e-12 * (1.0 + 16.0 * r / std::pow(1.0 - r, 3)));
  }
}

TEST(EquationLhs, ComparisonEquations) {
  const double M = example_M2(), r = 0.001, q = 1.0 - r;
  const double sh2011 = pi / (4 * M) - 4 * M * r * (2 - r) / (pi * q * q) - 4 * M * r * r / (pi * q * q) - 2 * M * r;
  EXPECT_NEAR(equation_lhs({Family::kSh2011, M}, r), sh2011, 1e-13);
  const double m1 = minimize_m1().m1;
  const double sh2009 = pi / (4 * M) - 6 * M * r * r / (q * q) - 4 * M * r * r * r / (q * q * q) -
                        16 * M / (pi * pi) * m1 * std::atan(r) - 4 * M * r / (q * q * q);
  EXPECT_NEAR(equation_lhs({Family::kSh2009, M}, r), sh2009, 1e-13);
}

TEST(EquationLhs, OrderOneHandCodedForm) {
  for (double M : {1.1, 2.0, 10.0}) {
    for (double r : {1e-4, 0.01, 0.1, 0.5}) {
      const double hand = 1.0 - std::sqrt(M * M * M * M - 1.0) * (2 * r - r * r) / ((1 - r) * (1 - r));
      EXPECT_NEAR(equation_lhs({Family::kThm21, M, 1}, r), hand, 1e-14 * std::max(1.0, std::abs(hand)));
    }
  }
}

TEST(EquationLhs, RejectsBadArguments) {
  EXPECT_EQ(code_of([] { equation_lhs({Family::kCor22, 2.0, 2}, 0.0); }), ErrorCode::kDomain);
  EXPECT_EQ(code_of([] { equation_lhs({Family::kCor22, 2.0, 2}, 1.0); }), ErrorCode::kDomain);
  EXPECT_EQ(code_of([] { equation_lhs({Family::kCor22, 1.0, 2}, 0.5); }), ErrorCode::kDomain);
  EXPECT_EQ(code_of([] { equation_lhs({Family::kCor22, 2.0, 0}, 0.5); }), ErrorCode::kDomain);
  EXPECT_EQ(code_of([] { equation_lhs({Family::kCor32, 2.0, 3, Cor32Form::kPrinted}, 0.5); }), ErrorCode::kDomain);
}

TEST(LeastRoot, PublishedExampleValues) {
  const RadiusResult r3 = least_root({Family::kCor22, example_M1(), 2});
  EXPECT_NEAR(r3.r, 0.01552, 1e-5);
  EXPECT_NEAR(r3.rho, 0.00776, 1e-5);
  const RadiusResult r4 = least_root({Family::kSh2011, example_M2()});
  EXPECT_NEAR(r4.r, 0.00041, 1e-5);
  EXPECT_NEAR(r4.rho, 1.12385e-5, 2e-7);
  const RadiusResult r8 = least_root({Family::kCor32, example_M1(), 2, Cor32Form::kPrinted});
  EXPECT_NEAR(r8.r, 0.00798, 1e-5);
  EXPECT_NEAR(r8.rho, 0.00400, 1e-5);
  const RadiusResult r9 = least_root({Family::kSh2009, example_M2()});
  EXPECT_NEAR(r9.r, 0.00013, 1e-5);
  EXPECT_NEAR(r9.rho, 1.48687e-6, 5e-8);
}

// Root of 1 - sqrt(2M^2-2) 4r/(1-r)^3 for M = 4 sqrt(3) pi, found
// independently by mpmath to 30 digits.
TEST(LeastRoot, GeneralCorollaryFormRoot) {
  const RadiusResult general = least_root({Family::kCor32, example_M1(), 2});
  EXPECT_NEAR(general.r, 0.00794, 1e-5);
  EXPECT_NEAR(general.r, 0.0079383341569178, 1e-14);
  const RadiusResult printed = least_root({Family::kCor32, example_M1(), 2, Cor32Form::kPrinted});
  EXPECT_GT(printed.r - general.r, 4e-5);
}

// p = 1: 1 - c (2r - r^2)/(1-r)^2 = 0 gives (1-r)^2 = c/(1+c).
TEST(LeastRoot, OrderOneClosedForm) {
  for (Family family : {Family::kThm21, Family::kCor22, Family::kCor21}) {
    for (double M : {1.1, 2.0, 10.0, example_M1()}) {
      const double c = coefficient(family, M);
      const double closed = 1.0 - 1.0 / std::sqrt(1.0 + 1.0 / c);
      EXPECT_NEAR(least_root({family, M, 1}).r, closed, 1e-14) << family_name(family) << " M " << M;
    }
  }
}

TEST(LeastRoot, SweepInvariants) {
  for (Family family : kAllFamilies) {
    for (double M : {1.1, 2.0, 10.0, example_M1()}) {
      for (int p : {1, 2, 3, 5}) {
        const RadiusProblem problem{family, M, p};
        const RadiusResult result = least_root(problem);
        SCOPED_TRACE(std::string(family_name(family)) + " M " + std::to_string(M) + " p " + std::to_string(p));
        EXPECT_GT(result.r, 0.0);
        EXPECT_LT(result.r, 1.0);
        EXPECT_GT(result.rho, 0.0);
        EXPECT_LE(result.residual, 1e-12);
        EXPECT_LE(result.bracket.second - result.bracket.first, 1e-14);
        EXPECT_LE(result.bracket.first, result.r);
        EXPECT_GE(result.bracket.second, result.r);
        EXPECT_GT(equation_lhs(problem, result.bracket.first * (1.0 - 1e-9)), 0.0);
        EXPECT_LT(equation_lhs(problem, result.bracket.second * (1.0 + 1e-9)), 0.0);
        EXPECT_EQ(result.rho, rho(problem, result.r));
      }
    }
  }
}

TEST(LeastRoot, TheoremFamiliesDecreaseAndTurnNegative) {
  for (Family family : kTheoremFamilies) {
    for (double M : {1.1, 2.0, 10.0, example_M1()}) {
      for (int p : {1, 2, 3, 5}) {
        const RadiusProblem problem{family, M, p};
        double previous = equation_lhs(problem, 1e-12);
        for (int i = 1; i <= 64; ++i) {
          const double value = equation_lhs(problem, i / 65.0);
          ASSERT_LT(value, previous) << family_name(family) << " M " << M << " p " << p << " i " << i;
          previous = value;
        }
        EXPECT_LT(equation_lhs(problem, 1.0 - 1e-6), 0.0);
      }
    }
  }
}

// First-order behaviour at r = 1e-12: LHS = 1 - 2c r + O(r^2) for the map
// families and 1 - 4c r + O(r^2) for the operator families. The distance to 1
// is fixed by the coefficient alone, not by rounding.
TEST(LeastRoot, DistanceFromOneNearZeroIsLinearInCoefficient) {
  for (Family family : kTheoremFamilies) {
    for (double M : {1.1, 2.0, 10.0, example_M1()}) {
      const double r = 1e-12;
      const double gap = 1.0 - equation_lhs({family, M, 2}, r);
      const double slope = on_operator(family) ? 4.0 : 2.0;
      EXPECT_NEAR(gap, slope * coefficient(family, M) * r, 1e-15 + 1e-6 * gap) << family_name(family);
    }
  }
}

TEST(LeastRoot, RootShrinksAsBoundGrows) {
  for (Family family : kAllFamilies) {
    for (int p : {1, 2, 4}) {
      double previous = 1.0;
      for (int i = 0; i <= 40; ++i) {
        const double M = 1.05 + 0.5 * i;
        const double r = least_root({family, M, p}).r;
        ASSERT_LT(r, previous) << family_name(family) << " p " << p << " M " << M;
        previous = r;
      }
    }
  }
}

TEST(LeastRoot, RootShrinksAsOrderGrows) {
  for (Family family : kTheoremFamilies) {
    double previous = 1.0;
    for (int p = 1; p <= 6; ++p) {
      const double r = least_root({family, 3.0, p}).r;
      EXPECT_LT(r, previous) << family_name(family) << " p " << p;
      previous = r;
    }
  }
}

TEST(LeastRoot, NoSignChangeIsReported) {
  EXPECT_EQ(code_of([] { least_root({Family::kThm21, 1e20, 1}); }), ErrorCode::kNoSignChange);
}

TEST(LeastRoot, Deterministic) {
  const RadiusProblem problem{Family::kThm31, 7.0, 3};
  const RadiusResult a = least_root(problem), b = least_root(problem);
  EXPECT_EQ(a.r, b.r);
  EXPECT_EQ(a.rho, b.rho);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Rho, PublishedExampleValues) {
  const RadiusProblem cor22{Family::kCor22, example_M1(), 2};
  EXPECT_NEAR(rho(cor22, least_root(cor22).r), 0.00776, 1e-5);
  const RadiusProblem cor32{Family::kCor32, example_M1(), 2, Cor32Form::kPrinted};
  EXPECT_NEAR(rho(cor32, least_root(cor32).r), 0.00400, 1e-5);
}

TEST(Rho, SlopeAtOriginIsLambda0) {
  for (double M : {1.1, 2.0, 10.0, example_M1()}) {
    for (Family family : {Family::kThm21, Family::kThm31}) {
      const double r = 1e-9;
      EXPECT_NEAR(rho({family, M, 2}, r) / r, lambda_0(M), 1e-6 * lambda_0(M) + 1e-6 * coefficient(family, M) * r);
    }
    EXPECT_NEAR(rho({Family::kCor22, M, 2}, 1e-9) / 1e-9, 1.0, 1e-6);
  }
}

TEST(Rho, TermwiseOracle) {
  const double M = 3.0, r = 0.02;
  const double c = std::sqrt(2.0 * M * M - 2.0);
  const int p = 4;
  double map_terms = r / (1 - r);
  for (int k = 1; k < p; ++k) map_terms += 2 * std::pow(r, 2 * k) / (1 - r);
  EXPECT_NEAR(rho({Family::kCor22, M, p}, r), r * (1 - c * map_terms), 1e-16);
  double op_terms = (2 * r - r * r) / std::pow(1 - r, 2);
  for (int k = 2; k <= p; ++k) op_terms += std::pow(r, 2 * (k - 1)) / std::pow(1 - r, 2);
  EXPECT_NEAR(rho({Family::kCor32, M, p}, r), r * (1 - c * op_terms), 1e-16);
  const double c4 = std::sqrt(M * M * M * M - 1.0);
  EXPECT_NEAR(rho({Family::kThm31, M, p}, r), lambda_0(M) * r * (1 - c4 * op_terms), 1e-16);
}

TEST(M1, Minimum) {
  const M1Minimum m = minimize_m1();
  EXPECT_NEAR(m.m1, 6.05934, 1e-4);
  EXPECT_NEAR(m.x_star, 0.59, 0.01);
  EXPECT_NEAR(m1_objective(0.5), 6.2409, 1e-4);
  EXPECT_GT(m1_objective(0.5), m.m1);
}

// Independent dense scan of the objective: nothing on a 10^5-point grid lies
// below the golden-section minimum.
TEST(M1, NoGridPointBelowMinimum) {
  const M1Minimum m = minimize_m1();
  for (int i = 1; i < 100000; ++i) {
    const double x = i / 100000.0;
    const double value = (2 - x * x + 4 / pi * std::atan(x)) / (x * (1 - x * x));
    ASSERT_GE(value, m.m1 - 1e-12) << "x = " << x;
  }
}

TEST(Families, NameRoundTrip) {
  for (Family family : kAllFamilies) {
    EXPECT_EQ(parse_family(family_name(family)), family);
  }
  EXPECT_FALSE(parse_family("thm99").has_value());
  EXPECT_TRUE(is_theorem_family(Family::kCor21));
  EXPECT_FALSE(is_theorem_family(Family::kSh2009));
}

}  // namespace
}  // namespace polyharm
