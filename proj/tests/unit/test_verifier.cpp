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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "lcexact/error.hpp"
#include "lcexact/verifier.hpp"
#include "oracles.hpp"

namespace lcexact {
namespace {

constexpr double kPi = std::numbers::pi;

ModelParams params() { return ModelParams::create(2.0, 0.9); }

InitialData bump_data() {
  return {params(), RadialProfile::swirl_gaussian(1.0, 1.0),
          RadialProfile::gaussian_bump(kPi / 2, 0.3, 1.0), kPi / 2};
}

InitialData constant_data() {
  return {params(), RadialProfile::constant(0.0), RadialProfile::constant(1.2), 1.2};
}

std::vector<double> grid(double a, double b, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  return g;
}

ResidualStudySpec small_spec() {
  ResidualStudySpec s;
  s.r_min = 0.3;
  s.r_max = 1.3;
  s.h = {8e-3, 4e-3, 2e-3};
  s.tau = s.h;
  return s;
}

TEST(Residuals, ExactForConstantData) {
  const ExactSolution sol = ExactSolution::create(constant_data());
  ResidualStudySpec spec = small_spec();
  spec.h = spec.tau = {8e-3, 4e-3};
  const ResidualStudy st = residual_study(sol, spec);
  for (const auto& level : st.levels) {
    for (const auto& rep : level) EXPECT_LE(rep.max_norm, kResidualZero) << rep.equation;
  }
  for (const auto& ord : st.orders) EXPECT_TRUE(std::isnan(ord[0]));
}

TEST(Residuals, SecondOrderOnBump) {
  const ExactSolution sol = ExactSolution::create(bump_data());
  const ResidualStudy st = residual_study(sol, small_spec());
  ASSERT_EQ(st.levels.size(), 3u);
  ASSERT_EQ(st.orders.size(), residual_equations().size());
  for (std::size_t e = 0; e < st.orders.size(); ++e) {
    EXPECT_EQ(st.levels[2][e].equation, residual_equations()[e]);
    EXPECT_LE(st.levels[2][e].max_norm, 1e-3);
    for (double o : st.orders[e]) EXPECT_NEAR(o, 2.0, 0.3) << residual_equations()[e];
  }
  // Normal projection of the director residual vanishes in the limit.
  const double n1 = st.levels[1][3].component_max.at(3);
  const double n2 = st.levels[2][3].component_max.at(3);
  EXPECT_LT(n2, n1);
  EXPECT_NEAR(std::log2(n1 / n2), 2.0, 0.3);
}

TEST(Residuals, ReportShape) {
  const ExactSolution sol = ExactSolution::create(bump_data());
  const double h = 4e-3;
  const std::vector<double> r = grid(0.5 - 2 * h, 1.0 + 2 * h, 130);
  const SnapshotOptions all{FieldMask::all(), 1};
  const FieldSnapshot a = snapshot(sol, 0.1 - h, r, all);
  const FieldSnapshot b = snapshot(sol, 0.1, r, all);
  const FieldSnapshot c = snapshot(sol, 0.1 + h, r, all);
  const ResidualReport rep = residual_u(a, b, c);
  EXPECT_EQ(rep.equation, "u");
  EXPECT_NEAR(rep.h, h, 1e-15);
  EXPECT_NEAR(rep.tau, h, 1e-15);
  EXPECT_GE(rep.worst_r, r[2]);
  EXPECT_LE(rep.worst_r, r[r.size() - 3]);
  EXPECT_LE(rep.l2_norm, rep.max_norm * std::sqrt(r.back() - r.front()));
  EXPECT_EQ(residual_angles(a, b, c).component_max.size(), 2u);
  EXPECT_EQ(residual_director(a, b, c).component_max.size(), 4u);
}

TEST(Diagnostics, FRangeNested) {
  const ExactSolution sol = ExactSolution::create(bump_data());
  const std::vector<double> times{0.1, 0.2, 0.4};
  const Diagnostics d = compute_diagnostics(sol, times, grid(0.0, 6.0, 121), 1, 401);
  for (std::size_t k = 1; k < times.size(); ++k) {
    EXPECT_GE(d.F_min[k], d.F_min[k - 1]);
    EXPECT_LE(d.F_max[k], d.F_max[k - 1]);
  }
  EXPECT_TRUE(monitor_f_nesting(d).passed);
}

TEST(Diagnostics, ArcLength) {
  const ModelParams p = params();
  const ExactSolution flat = ExactSolution::create(constant_data());
  const std::vector<double> r = grid(0.0, 6.0, 121);
  EXPECT_EQ(arc_length(snapshot(flat, 0.3, r), p), 0.0);

  const ExactSolution sol = ExactSolution::create(bump_data());
  std::vector<double> lengths;
  for (double t : {0.0, 0.1, 1.0, 10.0}) {
    const FieldSnapshot s = snapshot(sol, t, r);
    const auto [lo, hi] = std::minmax_element(s.psi.begin(), s.psi.end());
    lengths.push_back(arc_length(s, p));
    EXPECT_GE(lengths.back(), *hi - *lo);
    const double ref = oracle::gk(
        [&](double x) { return std::sqrt(metric_factor(x, p)); }, *lo, *hi);
    EXPECT_NEAR(lengths.back(), ref, 1e-12);
  }
  for (std::size_t k = 1; k < lengths.size(); ++k) EXPECT_LT(lengths[k], lengths[k - 1]);
}

TEST(Energy, ZeroForTrivialData) {
  InitialData d = constant_data();
  EXPECT_NEAR(energy(ExactSolution::create(d), 0.5, 201), 0.0, 1e-20);
}

TEST(Energy, SwirlClosedForm) {
  InitialData d = bump_data();
  d.psi0 = RadialProfile::constant(kPi / 2);
  const ExactSolution sol = ExactSolution::create(d);
  for (double t : {0.0, 0.1, 1.0, 5.0}) {
    const double a = 1.0 + 4.0 * t;
    EXPECT_NEAR(energy(sol, t), kPi / (8.0 * a * a), 1e-7) << t;
  }
}

TEST(Energy, DecaysOnBump) {
  const ExactSolution sol = ExactSolution::create(bump_data());
  double prev = energy(sol, 0.1);
  for (double t : {1.0, 10.0}) {
    const double e = energy(sol, t);
    EXPECT_LT(e, prev);
    prev = e;
  }
}

TEST(Monitors, PassOnExactSolution) {
  const ExactSolution sol = ExactSolution::create(bump_data());
  const FieldSnapshot s = snapshot(sol, 0.5, grid(0.0, 4.0, 81));
  EXPECT_TRUE(monitor_unit_norm(s).passed);
  EXPECT_TRUE(monitor_psi_range(s, params()).passed);
}

TEST(Monitors, DetectTampering) {
  const ExactSolution sol = ExactSolution::create(bump_data());
  FieldSnapshot s = snapshot(sol, 0.5, grid(0.0, 4.0, 81));
  s.d[7][0] += 1e-6;
  const MonitorResult m = monitor_unit_norm(s);
  EXPECT_FALSE(m.passed);
  EXPECT_EQ(m.name, "unit-norm");
  s.psi[3] = 0.5;
  EXPECT_FALSE(monitor_psi_range(s, params()).passed);

  Diagnostics d;
  d.times = {0.0, 1.0};
  d.arc_length = {1.0, 1.1};
  d.F_min = {0.5, 0.4};
  d.F_max = {2.0, 1.9};
  EXPECT_FALSE(monitor_arc_length(d).passed);
  EXPECT_FALSE(monitor_f_nesting(d).passed);
}

double fd_error(const FdSolution& fd, const ExactSolution& sol, double t, double r_cut) {
  double err = 0.0;
  for (std::size_t i = 0; i < fd.r.size() && fd.r[i] <= r_cut; ++i) {
    err = std::max(err, std::abs(fd.psi[i] - solve_psi(sol, t, fd.r[i])));
  }
  return err;
}

TEST(FdSolver, ConstantStaysConstant) {
  FdGrid g;
  g.nodes = 129;
  g.tau = 1e-2;
  const FdSolution fd = reference_fd_solve(constant_data(), 0.2, g);
  for (double v : fd.psi) EXPECT_NEAR(v, 1.2, 1e-14);
  EXPECT_EQ(fd.steps, 20);
}

TEST(FdSolver, AgreesWithExactSolution) {
  const ExactSolution sol = ExactSolution::create(bump_data());
  const FdSolution fd = reference_fd_solve(bump_data(), 0.1);
  EXPECT_LE(fd_error(fd, sol, 0.1, 8.0), 5e-4);
}

TEST(FdSolver, SecondOrderInSpace) {
  const ExactSolution sol = ExactSolution::create(bump_data());
  std::vector<double> err;
  for (int n : {257, 513, 1025}) {
    FdGrid g;
    g.nodes = n;
    g.tau = 1e-4;
    err.push_back(fd_error(reference_fd_solve(bump_data(), 0.1, g), sol, 0.1, 3.0));
  }
  EXPECT_GE(std::log2(err[0] / err[1]), 1.8);
  EXPECT_GE(std::log2(err[1] / err[2]), 1.8);
}

TEST(FdSolver, ExplicitScheme) {
  FdGrid g;
  g.scheme = TimeScheme::kExplicitEuler;
  EXPECT_THROW(reference_fd_solve(bump_data(), 0.1, g), ConfigurationError);
  g.nodes = 129;
  g.tau = 5e-4;
  const ExactSolution sol = ExactSolution::create(bump_data());
  EXPECT_LE(fd_error(reference_fd_solve(bump_data(), 0.1, g), sol, 0.1, 8.0), 1e-2);
}

}  // namespace
}  // namespace lcexact
