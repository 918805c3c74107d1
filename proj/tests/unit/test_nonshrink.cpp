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
#include <numbers>
#include <vector>

#include "lcexact/error.hpp"
#include "lcexact/nonshrink.hpp"
#include "oracles.hpp"

namespace lcexact {
namespace {

constexpr double kPi = std::numbers::pi;

StaircaseSchedule desk() { return StaircaseSchedule::power_law(0.05, 3.0, 3); }

TEST(Schedule, PowerLawExponents) {
  const StaircaseSchedule s = StaircaseSchedule::power_law(1.0, 3.0, 2);
  EXPECT_EQ(s.cycles(), 2);
  EXPECT_EQ(s.exponents().size(), 14u);
  EXPECT_EQ(s.exponent(0), 0.0);
  EXPECT_EQ(s.exponent(4), 64.0);
  EXPECT_EQ(s.exponent(20), 8000.0);
}

TEST(Schedule, RejectsBadInput) {
  EXPECT_THROW(StaircaseSchedule::from_exponents({0.0, 1.0, 1.0}), InvalidArgument);
  EXPECT_THROW(StaircaseSchedule::power_law(-1.0, 3.0, 1), InvalidArgument);
  EXPECT_THROW(StaircaseSchedule::power_law(1.0, 3.0, -1), InvalidArgument);
  const StaircaseSchedule s = StaircaseSchedule::from_exponents({0, 1, 2, 3, 4, 5, 6, 7});
  EXPECT_EQ(s.cycles(), 1);
  EXPECT_THROW(s.exponent(8), InvalidArgument);
}

TEST(V0, PlateausAndRamps) {
  const StaircaseSchedule s = StaircaseSchedule::from_exponents({0, 1, 2, 3, 4, 5, 6, 7});
  const RadialProfile v = build_v0(s);
  EXPECT_EQ(v(0.0), 0.0);
  EXPECT_EQ(v(std::exp(0.5)), 0.0);
  EXPECT_NEAR(v(std::exp(1.5)), 0.5, 1e-14);
  EXPECT_NEAR(v(std::exp(3.0)), 1.0, 1e-14);
  EXPECT_NEAR(v(std::exp(4.25)), 0.75, 1e-14);
  EXPECT_EQ(v(std::exp(6.5)), 0.0);
  EXPECT_EQ(v(1e300), 0.0);
  EXPECT_EQ(build_v0(StaircaseSchedule::flat(1.0))(42.0), 1.0);
  EXPECT_EQ(build_v0(StaircaseSchedule::power_law(1.0, 3.0, 0))(42.0), 0.0);
}

TEST(Energy, RampSumClosedForm) {
  const StaircaseSchedule s = StaircaseSchedule::from_exponents({0, 1, 4, 5, 6, 13, 14, 15});
  EXPECT_NEAR(dirichlet_energy(s), 2 * kPi * (1.0 / 3 + 1.0 / 7), 1e-14);
  EXPECT_NEAR(dirichlet_energy(build_v0(s)), dirichlet_energy(s), 1e-12);
  EXPECT_EQ(dirichlet_energy(StaircaseSchedule::flat(1.0)), 0.0);
}

TEST(Energy, MatchesQuadratureOfGradient) {
  const StaircaseSchedule s = StaircaseSchedule::from_exponents({0, 0.2, 0.9, 1.1, 1.3, 2.0, 2.1, 2.2});
  // 2 pi int |v'|^2 r dr on each ramp, with v' = 1/(r * width).
  const auto ramp = [](double a, double b) {
    const double w = b - a;
    return oracle::gk([w](double r) { return r / (r * w * r * w); }, std::exp(a), std::exp(b));
  };
  const double ref = 2 * kPi * (ramp(0.2, 0.9) + ramp(1.3, 2.0));
  EXPECT_NEAR(dirichlet_energy(build_v0(s)), ref, 1e-12);
}

TEST(Energy, GrowsWithCycles) {
  double prev = 0.0;
  for (int k = 1; k <= 4; ++k) {
    const double e = dirichlet_energy(StaircaseSchedule::power_law(1.0, 3.0, k));
    EXPECT_GT(e, prev);
    prev = e;
  }
}

TEST(Probes, LogTimes) {
  const ProbeTimes pt = ProbeTimes::from_schedule(StaircaseSchedule::power_law(1.0, 3.0, 1), 2);
  EXPECT_EQ(pt.log_peak, (std::vector<double>{54.0, 2.0 * 729.0}));
  EXPECT_EQ(pt.log_off, (std::vector<double>{432.0, 2.0 * 1728.0}));
}

TEST(Origin, DeskScaleOscillates) {
  const StaircaseSchedule s = desk();
  const OriginSeries os = origin_series(build_v0(s), ProbeTimes::from_schedule(s, 3));
  for (int k = 0; k < 3; ++k) {
    EXPECT_GE(os.peak[k], 0.9) << k;
    EXPECT_LE(os.off[k], 0.1) << k;
    EXPECT_GE(os.peak[k] - os.off[k], 0.8) << k;
  }
}

TEST(Origin, PeakDominatedByPlateauMass) {
  // v0 <= 1 everywhere and v0 = 1 on the plateau, so the annulus mass is a
  // lower bound for v(t_k, 0).
  const StaircaseSchedule s = desk();
  const OriginSeries os = origin_series(build_v0(s), ProbeTimes::from_schedule(s, 3));
  const std::vector<double> mass = annulus_dominance(s, 3);
  for (int k = 0; k < 3; ++k) {
    EXPECT_GE(os.peak[k], mass[k] - 1e-12);
    EXPECT_LE(os.peak[k], 1.0 + 1e-12);
  }
}

TEST(Annulus, ClosedFormAndMonotone) {
  const StaircaseSchedule s = StaircaseSchedule::power_law(1.0, 3.0, 3);
  const std::vector<double> mass = annulus_dominance(s, 3);
  // k = 0: exp(-e^{2 a_2 - 2 a_3} / 4) - exp(-e^{2 a_4 - 2 a_3} / 4).
  const double ref = std::exp(-std::exp(16.0 - 54.0) / 4) - std::exp(-std::exp(128.0 - 54.0) / 4);
  EXPECT_NEAR(mass[0], ref, 1e-12);
  const std::vector<double> dm = annulus_dominance(desk(), 3);
  for (std::size_t k = 1; k < dm.size(); ++k) EXPECT_GT(dm[k], dm[k - 1]);
}

}  // namespace
}  // namespace lcexact
