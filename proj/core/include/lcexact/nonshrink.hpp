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

// A radial initial datum whose heat evolution does not settle at the
// origin.
//
// With exponents a_0 < a_1 < ... the staircase v0 is, for k = 0, 1, ...,
//
//   log r in (a_{6k+1}, a_{6k+2}]  ramp 0 -> 1, linear in log r
//   log r in (a_{6k+2}, a_{6k+4}]  1
//   log r in (a_{6k+4}, a_{6k+5}]  ramp 1 -> 0
//   log r in (a_{6k+5}, a_{6k+7}]  0
//
// and 0 below e^{a_1}. At t_k = exp(2 a_{6k+3}) the heat kernel at the
// origin concentrates on the plateau where v0 = 1, at t~_k = exp(2 a_{6k+6})
// on a region where v0 = 0. Radii and times are carried as logarithms.

#ifndef LCEXACT_NONSHRINK_HPP
#define LCEXACT_NONSHRINK_HPP

#include <optional>
#include <span>
#include <vector>

#include "lcexact/radial_heat.hpp"
#include "lcexact/radial_profile.hpp"

namespace lcexact {

class StaircaseSchedule {
 public:
  /// Explicit exponents a_0, a_1, ...; strictly increasing. The number of
  /// complete cycles is floor((size - 2) / 6).
  static StaircaseSchedule from_exponents(std::vector<double> exponents);
  /// a_j = c j^p for j = 0 .. 6 cycles + 1; c > 0, p > 0, cycles >= 0.
  static StaircaseSchedule power_law(double c, double p, int cycles);
  /// v0 identically equal to level (no ramps).
  static StaircaseSchedule flat(double level);

  int cycles() const noexcept { return cycles_; }
  std::span<const double> exponents() const noexcept { return a_; }
  /// a_j, from the list or (beyond it) from the power law.
  double exponent(int j) const;
  double flat_level() const noexcept { return level_; }
  bool has_generator() const noexcept { return generator_.has_value(); }

 private:
  StaircaseSchedule() = default;
  std::vector<double> a_;
  int cycles_ = 0;
  double level_ = 0.0;
  struct Generator {
    double c, p;
  };
  std::optional<Generator> generator_;
};

struct ProbeTimes {
  /// log t_k = 2 a_{6k+3}.
  std::vector<double> log_peak;
  /// log t~_k = 2 a_{6k+6}.
  std::vector<double> log_off;

  static ProbeTimes from_schedule(const StaircaseSchedule& s, int count);
};

/// Log table with nodes (a_{6k+1}, 0), (a_{6k+2}, 1), (a_{6k+4}, 1),
/// (a_{6k+5}, 0); a constant profile for flat or zero-cycle schedules.
RadialProfile build_v0(const StaircaseSchedule& s);

/// 2 pi sum over ramps of 1 / (ramp exponent width).
double dirichlet_energy(const StaircaseSchedule& s);

/// 2 pi int |v0'|^2 r dr of a log table (piecewise linear in log r) or a
/// constant profile, summed segment by segment.
double dirichlet_energy(const RadialProfile& v0);

struct OriginSeries {
  std::vector<double> peak;
  std::vector<double> off;
};

/// v(t, 0) at every probe time.
OriginSeries origin_series(const RadialProfile& v0, const ProbeTimes& times,
                           const HeatOptions& opts = {});

/// Heat-kernel mass at t_k on the plateau annulus e^{a_{6k+2}} < |x| <
/// e^{a_{6k+4}}, k = 0 .. count-1.
std::vector<double> annulus_dominance(const StaircaseSchedule& s, int count);

}  // namespace lcexact

#endif  // LCEXACT_NONSHRINK_HPP
