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

#include "lcexact/nonshrink.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lcexact/error.hpp"

namespace lcexact {

StaircaseSchedule StaircaseSchedule::from_exponents(std::vector<double> exponents) {
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (!std::isfinite(exponents[i])) {
      throw InvalidArgument("staircase exponents must be finite");
    }
    if (i > 0 && !(exponents[i] > exponents[i - 1])) {
      throw InvalidArgument("staircase exponents must be strictly increasing (index " +
                            std::to_string(i) + ")");
    }
  }
  StaircaseSchedule s;
  s.cycles_ = exponents.size() >= 2 ? static_cast<int>((exponents.size() - 2) / 6) : 0;
  s.a_ = std::move(exponents);
  return s;
}

StaircaseSchedule StaircaseSchedule::power_law(double c, double p, int cycles) {
  if (!std::isfinite(c) || !(c > 0.0) || !std::isfinite(p) || !(p > 0.0)) {
    throw InvalidArgument("staircase generator needs c > 0 and p > 0");
  }
  if (cycles < 0) throw InvalidArgument("staircase cycles must be >= 0");
  std::vector<double> a(static_cast<std::size_t>(6 * cycles + 2));
  for (std::size_t j = 0; j < a.size(); ++j) a[j] = c * std::pow(static_cast<double>(j), p);
  StaircaseSchedule s = from_exponents(std::move(a));
  s.cycles_ = cycles;
  s.generator_ = Generator{c, p};
  return s;
}

StaircaseSchedule StaircaseSchedule::flat(double level) {
  if (!std::isfinite(level)) throw InvalidArgument("flat level must be finite");
  StaircaseSchedule s;
  s.level_ = level;
  return s;
}

double StaircaseSchedule::exponent(int j) const {
  if (j < 0) throw InvalidArgument("exponent index must be >= 0");
  if (static_cast<std::size_t>(j) < a_.size()) return a_[static_cast<std::size_t>(j)];
  if (generator_) return generator_->c * std::pow(static_cast<double>(j), generator_->p);
  throw InvalidArgument("schedule has no exponent a_" + std::to_string(j));
}

ProbeTimes ProbeTimes::from_schedule(const StaircaseSchedule& s, int count) {
  if (count < 0) throw InvalidArgument("probe count must be >= 0");
  ProbeTimes pt;
  for (int k = 0; k < count; ++k) {
    pt.log_peak.push_back(2.0 * s.exponent(6 * k + 3));
    pt.log_off.push_back(2.0 * s.exponent(6 * k + 6));
  }
  return pt;
}

RadialProfile build_v0(const StaircaseSchedule& s) {
  if (s.cycles() == 0) return RadialProfile::constant(s.flat_level());
  std::vector<double> nodes, values;
  for (int k = 0; k < s.cycles(); ++k) {
    const int b = 6 * k;
    nodes.insert(nodes.end(), {s.exponent(b + 1), s.exponent(b + 2), s.exponent(b + 4),
                               s.exponent(b + 5)});
    values.insert(values.end(), {0.0, 1.0, 1.0, 0.0});
  }
  return RadialProfile::log_table(std::move(nodes), std::move(values));
}

double dirichlet_energy(const StaircaseSchedule& s) {
  double sum = 0.0;
  for (int k = 0; k < s.cycles(); ++k) {
    const int b = 6 * k;
    sum += 1.0 / (s.exponent(b + 2) - s.exponent(b + 1));
    sum += 1.0 / (s.exponent(b + 5) - s.exponent(b + 4));
  }
  return 2.0 * std::numbers::pi * sum;
}

double dirichlet_energy(const RadialProfile& v0) {
  if (v0.kind() == ProfileKind::kConstant) return 0.0;
  if (v0.kind() != ProfileKind::kLogTable) {
    throw InvalidArgument("dirichlet_energy expects a log-table or constant profile");
  }
  // On a segment linear in s = log r, |v'|^2 r dr = (dv/ds)^2 ds.
  const auto s = v0.log_nodes();
  const auto v = v0.node_values();
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < s.size(); ++j) {
    const double dv = v[j + 1] - v[j];
    sum += dv * dv / (s[j + 1] - s[j]);
  }
  return 2.0 * std::numbers::pi * sum;
}

OriginSeries origin_series(const RadialProfile& v0, const ProbeTimes& times,
                           const HeatOptions& opts) {
  OriginSeries out;
  for (double lt : times.log_peak) out.peak.push_back(heat2d_origin_log(v0, lt, opts));
  for (double lt : times.log_off) out.off.push_back(heat2d_origin_log(v0, lt, opts));
  return out;
}

std::vector<double> annulus_dominance(const StaircaseSchedule& s, int count) {
  if (count < 0) throw InvalidArgument("count must be >= 0");
  std::vector<double> out;
  for (int k = 0; k < count; ++k) {
    const int b = 6 * k;
    out.push_back(annulus_mass_log(2.0 * s.exponent(b + 3), s.exponent(b + 2),
                                   s.exponent(b + 4)));
  }
  return out;
}

}  // namespace lcexact
