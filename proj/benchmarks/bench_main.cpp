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

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "lcexact/bessel.hpp"
#include "lcexact/exact_solver.hpp"
#include "lcexact/nonshrink.hpp"
#include "lcexact/radial_heat.hpp"
#include "lcexact/sphere_curve.hpp"

namespace {

using namespace lcexact;

InitialData bump() {
  return {ModelParams::create(2.0, 0.9), RadialProfile::swirl_gaussian(1.0, 1.0),
          RadialProfile::gaussian_bump(std::numbers::pi / 2, 0.3, 1.0), std::numbers::pi / 2};
}

void BM_BesselI0e(benchmark::State& st) {
  double x = 0.0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(bessel_i0e(x));
    x = x > 700.0 ? 0.0 : x + 0.37;
  }
}
BENCHMARK(BM_BesselI0e);

void BM_BesselI1eOverX(benchmark::State& st) {
  double x = 0.0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(bessel_i1e_over_x(x));
    x = x > 700.0 ? 0.0 : x + 0.37;
  }
}
BENCHMARK(BM_BesselI1eOverX);

void BM_Heat2d(benchmark::State& st) {
  const RadialProfile f = RadialProfile::gaussian_bump(0.2, 0.7, 0.6);
  const double t = static_cast<double>(st.range(0)) / 1000.0;
  for (auto _ : st) benchmark::DoNotOptimize(heat2d_radial(f, t, 0.8));
}
BENCHMARK(BM_Heat2d)->Arg(1)->Arg(100)->Arg(10000);

void BM_Heat4d(benchmark::State& st) {
  const RadialProfile g = RadialProfile::gaussian_bump(0.0, 1.0, 1.0);
  const double t = static_cast<double>(st.range(0)) / 1000.0;
  for (auto _ : st) benchmark::DoNotOptimize(heat4d_radial(g, t, 0.8));
}
BENCHMARK(BM_Heat4d)->Arg(1)->Arg(100)->Arg(10000);

void BM_PhiOfPsi(benchmark::State& st) {
  const ModelParams p = ModelParams::create(2.0, 0.9);
  double psi = 1.0;
  for (auto _ : st) {
    benchmark::DoNotOptimize(phi_of_psi(psi, p));
    psi = psi > 2.1 ? 1.0 : psi + 0.013;
  }
}
BENCHMARK(BM_PhiOfPsi);

void BM_Pressure(benchmark::State& st) {
  const ExactSolution sol = ExactSolution::create(bump());
  for (auto _ : st) benchmark::DoNotOptimize(solve_pressure(sol, 0.1, 1.5).value);
}
BENCHMARK(BM_Pressure)->Unit(benchmark::kMillisecond);

void BM_Snapshot(benchmark::State& st) {
  const ExactSolution sol = ExactSolution::create(bump());
  std::vector<double> r(static_cast<std::size_t>(st.range(0)));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = 4.0 * static_cast<double>(i) / static_cast<double>(r.size() - 1);
  for (auto _ : st) benchmark::DoNotOptimize(snapshot(sol, 0.1, r).p.back());
}
BENCHMARK(BM_Snapshot)->Arg(64)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_OriginSeries(benchmark::State& st) {
  const StaircaseSchedule s = StaircaseSchedule::power_law(0.05, 3.0, 3);
  const RadialProfile v0 = build_v0(s);
  const ProbeTimes pt = ProbeTimes::from_schedule(s, 3);
  for (auto _ : st) benchmark::DoNotOptimize(origin_series(v0, pt).peak.back());
}
BENCHMARK(BM_OriginSeries);

}  // namespace

BENCHMARK_MAIN();
