// Copyright 2026 The lcexact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "lcexact/error.hpp"
#include "lcexact/sphere_curve.hpp"
#include "oracles.hpp"

namespace lcexact {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

double norm(const Director& d) {
  return std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
}

// Antiderivative of phi_prime vanishing at pi/2, obtained by substituting
// w = cot(psi): Phi(psi) = -asin(cot(psi) / sqrt(beta - 1)).
double phi_closed_form(double psi, double beta) {
  return -std::asin(std::cos(psi) / std::sin(psi) / std::sqrt(beta - 1.0));
}

TEST(ModelParams, RejectsInvalidValues) {
  EXPECT_NO_THROW(ModelParams::create(2.0, 0.9));
  try {
    ModelParams::create(1.0, 1.2);
    FAIL() << "beta = 1 accepted";
  } catch (const InvalidArgument& e) {
    EXPECT_NE(std::string(e.what()).find("beta must exceed 1"), std::string::npos);
  }
  EXPECT_THROW(ModelParams::create(2.0, 0.0), InvalidArgument);
  EXPECT_THROW(ModelParams::create(2.0, kPi / 2), InvalidArgument);
  EXPECT_THROW(ModelParams::create(2.0, 0.5), InvalidArgument);  // 2 sin^2 0.5 < 1
  EXPECT_NO_THROW(ModelParams::create(2.0, kPi / 4));            // boundary
}

TEST(DirectorFromAngles, Examples) {
  const Director a = director_from_angles(kPi / 2, 0.0);
  EXPECT_DOUBLE_EQ(a[0], 1.0);
  EXPECT_NEAR(a[1], 0.0, kEps);
  EXPECT_NEAR(a[2], 0.0, kEps);
  const Director b = director_from_angles(kPi / 2, kPi / 2);
  EXPECT_NEAR(b[0], 0.0, kEps);
  EXPECT_DOUBLE_EQ(b[1], 1.0);
  EXPECT_NEAR(std::abs(norm(director_from_angles(kPi / 3, kPi / 4)) - 1.0), 0.0,
              8 * kEps);
  EXPECT_THROW(director_from_angles(std::nan(""), 0.0), InvalidArgument);
  EXPECT_THROW(director_from_angles(1.0, INFINITY), InvalidArgument);
}

TEST(DirectorFromAngles, UnitNormProperty) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ang(-50.0, 50.0);
  for (int i = 0; i < 1000; ++i) {
    const Director d = director_from_angles(ang(rng), ang(rng));
    EXPECT_LE(std::abs(norm(d) - 1.0), 8 * kEps);
  }
}

TEST(PhiPrime, Examples) {
  EXPECT_DOUBLE_EQ(phi_prime(kPi / 2, ModelParams::create(2.0, 1.0)), 1.0);
  EXPECT_DOUBLE_EQ(phi_prime(kPi / 2, ModelParams::create(5.0, 1.0)), 0.5);
  const ModelParams p = ModelParams::create(2.0, kPi / 4);
  try {
    phi_prime(kPi / 4, p);
    FAIL() << "boundary accepted";
  } catch (const DomainViolation& e) {
    EXPECT_DOUBLE_EQ(e.psi(), kPi / 4);
    EXPECT_LE(e.margin(), kDomainMargin);
  }
}

TEST(PhiOfPsi, Examples) {
  const ModelParams p = ModelParams::create(4.0, kPi / 6 + 0.01);
  EXPECT_EQ(phi_of_psi(kPi / 2, p), 0.0);

  auto integrand = [](double s) {
    const double sn = std::sin(s);
    return 1.0 / (std::sqrt(4.0 * sn * sn - 1.0) * sn);
  };
  const double simpson = oracle::composite_simpson(integrand, kPi / 2, 2 * kPi / 3, 20000);
  EXPECT_NEAR(phi_of_psi(2 * kPi / 3, p), simpson, 1e-10);
  EXPECT_NEAR(phi_of_psi(2 * kPi / 3, p), phi_closed_form(2 * kPi / 3, 4.0), 1e-12);
  EXPECT_NEAR(phi_of_psi(kPi - kPi / 3, p) + phi_of_psi(kPi / 3, p), 0.0, 1e-10);
}

TEST(PhiOfPsi, MatchesClosedFormNearEndpoints) {
  const ModelParams p = ModelParams::create(2.0, 0.9);
  for (double psi : {0.9, 1.0, 1.3, 1.8, 2.2}) {
    EXPECT_NEAR(phi_of_psi(psi, p), phi_closed_form(psi, 2.0), 1e-11) << psi;
  }
}

TEST(PhiOfPsi, NegativeBranchFlag) {
  const ModelParams p = ModelParams::create(3.0, 1.0);
  CurveOptions neg;
  neg.negative_branch = true;
  EXPECT_DOUBLE_EQ(phi_of_psi(1.2, p, neg), -phi_of_psi(1.2, p));
}

TEST(PhiOfPsi, OutsideDomainThrows) {
  const ModelParams p = ModelParams::create(2.0, kPi / 4);
  EXPECT_THROW(phi_of_psi(0.5, p), DomainViolation);
}

TEST(FMap, Examples) {
  EXPECT_DOUBLE_EQ(F_map(kPi / 2, ModelParams::create(2.0, 1.0)), kPi / 2);
  const ModelParams p3 = ModelParams::create(3.0, 1.0);
  EXPECT_NEAR(F_inv(F_map(1.1, p3), p3), 1.1, 4 * kEps);
  const ModelParams p2 = ModelParams::create(2.0, kPi / 3);
  EXPECT_NEAR(F_map(kPi / 3, p2), std::acos(std::sqrt(2.0) * 0.5), 4 * kEps);
  EXPECT_NEAR(F_map(kPi / 3, p2), kPi / 4, 4 * kEps);
  EXPECT_THROW(F_map(0.3, p2), DomainViolation);
}

TEST(FInv, Examples) {
  const ModelParams p2 = ModelParams::create(2.0, 1.0);
  EXPECT_DOUBLE_EQ(F_inv(kPi / 2, p2), kPi / 2);
  const ModelParams p3 = ModelParams::create(3.0, 1.0);
  EXPECT_NEAR(F_map(F_inv(0.7, p3), p3), 0.7, 4 * kEps);
  EXPECT_NEAR(F_inv(1e-9, p2), kPi / 4, 1e-8);
  EXPECT_THROW(F_inv(0.0, p2), InvalidArgument);
  EXPECT_THROW(F_inv(kPi, p2), InvalidArgument);
}

TEST(Delta2, Examples) {
  EXPECT_NEAR(delta2_of(ModelParams::create(2.0, kPi / 3)), kPi / 4, 4 * kEps);
  const double d1 = std::nextafter(kPi / 2, 0.0);
  EXPECT_NEAR(delta2_of(ModelParams::create(2.0, d1)), kPi / 2, 1e-15);
  EXPECT_THROW(delta2_of(ModelParams::create(2.0, kPi / 4)), DegenerateMargin);
  EXPECT_DOUBLE_EQ(delta2_of(ModelParams::create(3.0, 1.0)),
                   F_map(1.0, ModelParams::create(3.0, 1.0)));
}

TEST(MetricFactor, Examples) {
  EXPECT_DOUBLE_EQ(metric_factor(kPi / 2, ModelParams::create(2.0, 1.0)), 2.0);
  EXPECT_DOUBLE_EQ(metric_factor(kPi / 2, ModelParams::create(5.0, 1.0)), 1.25);
  const ModelParams p = ModelParams::create(3.0, 1.0);
  const double s = std::sin(1.0);
  const double dp = phi_prime(1.0, p);
  EXPECT_NEAR(metric_factor(1.0, p), 1.0 + s * s * dp * dp, 4 * kEps);
}

class RandomParams : public ::testing::Test {
 protected:
  // Random valid (beta, delta1) with a positive margin on (delta1, pi-delta1).
  ModelParams draw() {
    const double d1 = std::uniform_real_distribution<double>(0.05, 1.5)(rng_);
    const double s = std::sin(d1);
    const double beta =
        1.0 / (s * s) + std::uniform_real_distribution<double>(0.01, 5.0)(rng_);
    return ModelParams::create(beta, d1);
  }
  double inside(const ModelParams& p) {
    return std::uniform_real_distribution<double>(p.delta1(), kPi - p.delta1())(rng_);
  }
  std::mt19937_64 rng_{20261015};
};

TEST_F(RandomParams, Monotonicity) {
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p = draw();
    double a = inside(p);
    double b = inside(p);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    EXPECT_LT(F_map(a, p), F_map(b, p));
    if (i % 10 == 0) EXPECT_LT(phi_of_psi(a, p), phi_of_psi(b, p));
  }
}

TEST_F(RandomParams, RoundTripAndPositivity) {
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p = draw();
    const double psi = inside(p);
    EXPECT_NEAR(F_inv(F_map(psi, p), p), psi, 8 * kEps);
    EXPECT_GT(phi_prime(psi, p), 0.0);
    EXPECT_GT(metric_factor(psi, p), 1.0);
  }
}

TEST_F(RandomParams, Oddness) {
  for (int i = 0; i < 200; ++i) {
    const ModelParams p = draw();
    const double psi = inside(p);
    EXPECT_NEAR(phi_of_psi(kPi - psi, p), -phi_of_psi(psi, p), 1e-10);
  }
}

TEST_F(RandomParams, InverseStaysInsideValidSet) {
  std::uniform_real_distribution<double> f(1e-12, kPi - 1e-12);
  for (int i = 0; i < 1000; ++i) {
    const ModelParams p = draw();
    EXPECT_GT(p.margin(F_inv(f(rng_), p)), 0.0);
  }
}

std::vector<double> uniform(double a, double b, double h) {
  std::vector<double> out;
  const int n = static_cast<int>(std::lround((b - a) / h));
  for (int i = 0; i <= n; ++i) out.push_back(a + (b - a) * i / n);
  return out;
}

TEST(OdeResidual, SmallAndSecondOrder) {
  const ModelParams p = ModelParams::create(2.0, 1.0);
  const double r1 = ode_residual_phi(uniform(1.0, kPi - 1.0, 1e-3), p);
  const double r2 = ode_residual_phi(uniform(1.0, kPi - 1.0, 5e-4), p);
  EXPECT_LE(r1, 1e-5);
  EXPECT_NEAR(r1 / r2, 4.0, 1.0);
}

TEST(OdeResidual, Errors) {
  const ModelParams p = ModelParams::create(2.0, kPi / 4);
  EXPECT_THROW(ode_residual_phi(std::vector<double>{1.0, 1.1}, p), InvalidArgument);
  EXPECT_THROW(ode_residual_phi(uniform(0.5, 1.0, 0.01), p), DomainViolation);
}

TEST(PhiRangeGrowth, IncreasesAsDelta1Shrinks) {
  const std::vector<double> d1{0.5, 0.25, 0.1};
  const std::vector<double> v = phi_range_growth(d1);
  ASSERT_EQ(v.size(), 3u);
  EXPECT_LT(v[0], v[1]);
  EXPECT_LT(v[1], v[2]);
  for (std::size_t i = 0; i < d1.size(); ++i) {
    const double s = std::sin(d1[i]);
    const double beta = 1.0 / (s * s) + 1.0;
    EXPECT_NEAR(v[i], std::abs(phi_closed_form(kPi - d1[i] - 1e-3, beta)), 1e-10);
    EXPECT_LT(v[i], kPi / 2);  // the image stays in the half sphere d1 > 0
  }
}

TEST(PhiRangeGrowth, DeterministicAndValidated) {
  const std::vector<double> same{0.3, 0.3};
  const std::vector<double> v = phi_range_growth(same);
  EXPECT_EQ(v[0], v[1]);
  EXPECT_THROW(phi_range_growth(std::vector<double>{kPi / 2}), InvalidArgument);
}

}  // namespace
}  // namespace lcexact
