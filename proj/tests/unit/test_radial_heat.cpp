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
#include <random>
#include <vector>

#include "lcexact/error.hpp"
#include "lcexact/radial_heat.hpp"
#include "oracles.hpp"

namespace lcexact {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

RadialProfile bump() { return RadialProfile::gaussian_bump(0.2, 0.7, 0.6); }

RadialProfile indicator(double a, double b) {
  ProfileTraits tr;
  tr.decay = {DecayKind::kCompact, b};
  tr.breakpoints = {a, b};
  return RadialProfile::from_function(
      [a, b](double r) { return (r > a && r < b) ? 1.0 : 0.0; }, tr);
}

TEST(Heat2d, ConstantIsFixedPoint) {
  EXPECT_NEAR(heat2d_radial(RadialProfile::constant(1.7), 0.7, 1.3), 1.7, 1e-10);
}

TEST(Heat2d, GaussianSemigroupClosedForm) {
  const double s = 0.5;
  const RadialProfile g = RadialProfile::gaussian_bump(0.0, 1.0, 2.0 * std::sqrt(s));
  EXPECT_NEAR(heat2d_radial(g, 0.25, 0.8), oracle::gaussian2d(s, 0.25, 0.8), 1e-9);
  for (double r : {0.0, 0.3, 2.0, 6.0}) {
    for (double t : {1e-4, 0.01, 1.0, 30.0}) {
      EXPECT_NEAR(heat2d_radial(g, t, r), oracle::gaussian2d(s, t, r), 1e-12)
          << t << " " << r;
    }
  }
}

TEST(Heat2d, MatchesCartesianOracle) {
  const RadialProfile f = bump();
  const auto fn = [&](double r) { return f(r); };
  EXPECT_NEAR(heat2d_radial(f, 0.1, 0.6), oracle::heat2d_cartesian(fn, 0.1, 0.6), 1e-8);
}

TEST(Heat2d, RejectsBadQueries) {
  EXPECT_THROW(heat2d_radial(bump(), 0.0, 1.0), InvalidArgument);
  EXPECT_THROW(heat2d_radial(bump(), -1.0, 1.0), InvalidArgument);
  EXPECT_THROW(heat2d_radial(bump(), 1.0, -1.0), InvalidArgument);
  EXPECT_THROW(heat_radial(bump(), HeatQuery{1.0, 1.0, 3}), InvalidArgument);
}

TEST(Heat4d, ConstantIsFixedPoint) {
  EXPECT_NEAR(heat4d_radial(RadialProfile::constant(-0.4), 0.7, 1.3), -0.4, 1e-10);
}

TEST(Heat4d, GaussianSemigroupClosedForm) {
  const RadialProfile g = RadialProfile::gaussian_bump(0.0, 1.0, 1.0);
  EXPECT_NEAR(heat4d_radial(g, 0.2, 0.5), oracle::gaussian4d(0.2, 0.5), 1e-9);
  for (double r : {0.0, 0.3, 2.0, 6.0}) {
    for (double t : {1e-4, 0.01, 1.0, 30.0}) {
      EXPECT_NEAR(heat4d_radial(g, t, r), oracle::gaussian4d(t, r), 1e-12)
          << t << " " << r;
    }
  }
}

TEST(Heat4d, MatchesPolarOracle) {
  const RadialProfile g = bump();
  const auto fn = [&](double r) { return g(r); };
  EXPECT_NEAR(heat4d_radial(g, 0.1, 0.4), oracle::heat4d_polar(fn, 0.1, 0.4), 1e-8);
}

TEST(HeatOrigin, Examples) {
  EXPECT_NEAR(heat2d_origin(RadialProfile::constant(1.0), 0.3), 1.0, 1e-12);
  EXPECT_NEAR(heat2d_origin(indicator(1.0, 2.0), 0.5),
              std::exp(-0.5) - std::exp(-2.0), 1e-10);
  for (double t : {0.01, 0.5, 4.0}) {
    EXPECT_NEAR(heat2d_origin(bump(), t), heat2d_radial(bump(), t, 0.0), 1e-12);
  }
}

TEST(HeatOrigin, LogTableMatchesGenericPath) {
  const RadialProfile v = RadialProfile::log_table({-1.0, 0.0, 0.5, 1.5, 2.0},
                                                   {0.0, 1.0, 1.0, 0.0, 0.0});
  std::vector<double> cuts;
  for (double s : v.log_nodes()) cuts.push_back(std::exp(s));
  for (double t : {0.05, 0.4, 3.0, 20.0}) {
    auto integrand = [&](double rho) {
      return v(rho) * rho / (2 * t) * std::exp(-rho * rho / (4 * t));
    };
    const double ref = oracle::gk(integrand, 0.0, std::exp(2.0), cuts);
    EXPECT_NEAR(heat2d_origin(v, t), ref, 1e-12) << t;
    EXPECT_NEAR(heat2d_origin_log(v, std::log(t)), ref, 1e-12) << t;
  }
}

TEST(AnnulusMass, Examples) {
  EXPECT_EQ(annulus_mass(0.7, 0.0, kInf), 1.0);
  EXPECT_THROW(annulus_mass(1.0, 1.0, 1.0), InvalidArgument);
  EXPECT_THROW(annulus_mass(1.0, 2.0, 1.0), InvalidArgument);
  EXPECT_THROW(annulus_mass(0.0, 1.0, 2.0), InvalidArgument);
  EXPECT_NEAR(annulus_mass(1.0, 1.0, 2.0), std::exp(-0.25) - std::exp(-1.0), 4 * kEps);
}

TEST(AnnulusMass, AdditivityAndLogForm) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  for (int i = 0; i < 200; ++i) {
    double a = u(rng), b = u(rng), c = u(rng);
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    if (!(a < b && b < c)) continue;
    const double t = 0.1 + u(rng);
    EXPECT_NEAR(annulus_mass(t, a, b) + annulus_mass(t, b, c), annulus_mass(t, a, c),
                4 * kEps);
    if (a > 0) {
      EXPECT_NEAR(annulus_mass_log(std::log(t), std::log(a), std::log(b)),
                  annulus_mass(t, a, b), 1e-14);
    }
  }
  // Astronomical scales stay finite in log form.
  EXPECT_NEAR(annulus_mass_log(2 * 27.0, 8.0, 64.0), 1.0, 1e-12);
  EXPECT_EQ(annulus_mass_log(2 * 1e6, 8.0, 64.0), 0.0);
}

RadialProfile random_table(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> v(-2.0, 3.0);
  std::uniform_real_distribution<double> step(0.05, 0.8);
  std::vector<double> x{0.0}, f{v(rng)};
  for (int i = 0; i < 8; ++i) {
    x.push_back(x.back() + step(rng));
    f.push_back(v(rng));
  }
  return RadialProfile::table(x, f);
}

TEST(HeatProperties, MaximumPrinciple) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> tt(1e-3, 2.0), rr(0.0, 6.0);
  for (int i = 0; i < 200; ++i) {
    const RadialProfile f = random_table(rng);
    const auto vals = f.node_values();
    const double lo = *std::min_element(vals.begin(), vals.end());
    const double hi = *std::max_element(vals.begin(), vals.end());
    const double t = tt(rng), r = rr(rng);
    const double v2 = heat2d_radial(f, t, r);
    const double v4 = heat4d_radial(f, t, r);
    EXPECT_GE(v2, lo - 1e-10);
    EXPECT_LE(v2, hi + 1e-10);
    EXPECT_GE(v4, lo - 1e-10);
    EXPECT_LE(v4, hi + 1e-10);
  }
}

RadialProfile evolved(const RadialProfile& f, double s, int dim) {
  ProfileTraits tr;
  tr.far_value = f.far_value();
  tr.feature_scale = std::sqrt(s);
  return RadialProfile::from_function(
      [f, s, dim](double rho) { return heat_radial(f, HeatQuery{s, rho, dim}); }, tr);
}

TEST(HeatProperties, Semigroup) {
  const RadialProfile f = RadialProfile::tanh_step(0.3, 1.1, 1.0, 0.2);
  for (int dim : {2, 4}) {
    const RadialProfile g = evolved(f, 0.05, dim);
    for (double r : {0.0, 0.4, 1.0, 1.7}) {
      EXPECT_NEAR(heat_radial(g, HeatQuery{0.1, r, dim}),
                  heat_radial(f, HeatQuery{0.15, r, dim}), 1e-7)
          << dim << " " << r;
    }
  }
}

TEST(HeatProperties, ContinuityAtZeroTime) {
  // |Gamma_t * f - f| <= L E|Y| = L sqrt(pi t) for Lipschitz f in 2D.
  const double inner = 0.2, outer = 1.4, width = 0.25;
  const RadialProfile f = RadialProfile::tanh_step(inner, outer, 1.0, width);
  const double lip = (outer - inner) / (2.0 * width);
  for (double t : {1e-2, 1e-3, 1e-4, 1e-5}) {
    for (double r : {0.0, 0.5, 0.9, 1.0, 1.3, 3.0}) {
      EXPECT_LE(std::abs(heat2d_radial(f, t, r) - f(r)),
                lip * std::sqrt(oracle::kPi * t) * (1 + 1e-9) + 1e-12);
    }
  }
}

}  // namespace
}  // namespace lcexact
