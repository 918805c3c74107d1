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

#include "lcexact/radial_heat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lcexact/bessel.hpp"
#include "lcexact/error.hpp"
#include "lcexact/quadrature.hpp"

namespace lcexact {
namespace {

constexpr double kLn4 = 2.0 * std::numbers::ln2;
// Gaussian weight 2x e^{-x} is negligible outside x in [1e-30, 750].
constexpr double kLogXLow = -69.0775527898;  // log(1e-30)
constexpr double kLogXHigh = 6.62007320653;  // log(750)

void check_query(double t, double r) {
  if (!std::isfinite(t) || !(t > 0.0)) {
    throw InvalidArgument("heat evolution needs a finite time t > 0");
  }
  if (!std::isfinite(r) || r < 0.0) {
    throw InvalidArgument("heat evolution needs a finite radius r >= 0");
  }
}

// exp(-xa) - exp(-xb) for 0 <= xa <= xb without cancellation.
double gaussian_mass_between(double xa, double xb) {
  if (xa > 0.5) return std::exp(-xa) - std::exp(-xb);
  return std::expm1(-xa) - std::expm1(-xb);
}

quad::AdaptiveOptions panel_options(const RadialProfile& f, double t,
                                    const HeatOptions& opts) {
  quad::AdaptiveOptions qo;
  qo.abs_tol = opts.abs_tol;
  qo.max_panels = opts.max_panels;
  qo.max_initial_width = std::min(12.0 * std::sqrt(t), 4.0 * f.feature_scale());
  return qo;
}

template <class Kernel>
double convolve(const RadialProfile& f, double t, double r,
                const HeatOptions& opts, Kernel&& kernel) {
  const double c = f.far_value();
  const double reach = opts.window * std::sqrt(t);
  const double lo = std::max(0.0, r - reach);
  const double hi = std::min(r + reach, f.support_radius());
  if (!(hi > lo)) return c;
  auto integrand = [&](double rho) { return (f(rho) - c) * kernel(rho); };
  return c + quad::integrate_adaptive(integrand, lo, hi,
                                      panel_options(f, t, opts),
                                      f.breakpoints())
                 .value;
}

double origin_log_table(const RadialProfile& f, double log_t,
                        const HeatOptions& opts) {
  const auto s = f.log_nodes();
  const auto v = f.node_values();
  const std::size_t n = s.size();
  const double log4t = log_t + kLn4;
  auto x_of = [log4t](double sj) { return std::exp(2.0 * sj - log4t); };

  double total = v[0] * -std::expm1(-x_of(s[0]));
  const double s_lo = 0.5 * (log4t + kLogXLow);
  const double s_hi = 0.5 * (log4t + kLogXHigh);

  quad::AdaptiveOptions qo;
  qo.abs_tol = opts.abs_tol * 1e-2;
  qo.max_panels = opts.max_panels;
  qo.max_initial_width = 2.0;

  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double xa = x_of(s[j]);
    const double xb = x_of(s[j + 1]);
    total += v[j] * gaussian_mass_between(xa, xb);
    const double slope = (v[j + 1] - v[j]) / (s[j + 1] - s[j]);
    if (slope == 0.0) continue;
    const double a = std::max(s[j], s_lo);
    const double b = std::min(s[j + 1], s_hi);
    if (!(b > a)) continue;
    const double sj = s[j];
    auto integrand = [sj, log4t](double sv) {
      const double x = std::exp(2.0 * sv - log4t);
      return (sv - sj) * 2.0 * x * std::exp(-x);
    };
    total += slope * quad::integrate_adaptive(integrand, a, b, qo).value;
  }
  total += v[n - 1] * std::exp(-x_of(s[n - 1]));
  return total;
}

}  // namespace

double heat2d_radial(const RadialProfile& f0, double t, double r,
                     const HeatOptions& opts) {
  check_query(t, r);
  const double inv2t = 0.5 / t;
  const double inv4t = 0.25 / t;
  return convolve(f0, t, r, opts, [=](double rho) {
    const double d = r - rho;
    return rho * inv2t * std::exp(-d * d * inv4t) * bessel_i0e(r * rho * inv2t);
  });
}

double heat4d_radial(const RadialProfile& g0, double t, double r,
                     const HeatOptions& opts) {
  check_query(t, r);
  const double inv2t = 0.5 / t;
  const double inv4t = 0.25 / t;
  const double pref = 0.25 / (t * t);
  return convolve(g0, t, r, opts, [=](double rho) {
    const double d = r - rho;
    return pref * rho * rho * rho * std::exp(-d * d * inv4t) *
           bessel_i1e_over_x(r * rho * inv2t);
  });
}

double heat_radial(const RadialProfile& f0, const HeatQuery& query,
                   const HeatOptions& opts) {
  switch (query.dimension) {
    case 2: return heat2d_radial(f0, query.t, query.r, opts);
    case 4: return heat4d_radial(f0, query.t, query.r, opts);
    default: throw InvalidArgument("heat query dimension must be 2 or 4");
  }
}

double heat2d_origin(const RadialProfile& f0, double t,
                     const HeatOptions& opts) {
  check_query(t, 0.0);
  if (f0.kind() == ProfileKind::kLogTable) {
    return origin_log_table(f0, std::log(t), opts);
  }
  const double inv2t = 0.5 / t;
  const double inv4t = 0.25 / t;
  // Same integrand as heat2d_radial at r = 0, where i0e(0) = 1.
  return convolve(f0, t, 0.0, opts, [=](double rho) {
    return rho * inv2t * std::exp(-rho * rho * inv4t);
  });
}

double heat2d_origin_log(const RadialProfile& f0, double log_t,
                         const HeatOptions& opts) {
  if (!std::isfinite(log_t)) throw InvalidArgument("log t must be finite");
  if (f0.kind() == ProfileKind::kLogTable) {
    return origin_log_table(f0, log_t, opts);
  }
  const double t = std::exp(log_t);
  if (!std::isfinite(t) || !(t > 0.0)) {
    throw NumericalError("time exp(log t) is not representable", 0.0);
  }
  return heat2d_origin(f0, t, opts);
}

double annulus_mass(double t, double a, double b) {
  if (!std::isfinite(t) || !(t > 0.0)) {
    throw InvalidArgument("annulus_mass needs t > 0");
  }
  if (!std::isfinite(a) || a < 0.0 || std::isnan(b) || !(b > a)) {
    throw InvalidArgument("annulus_mass needs 0 <= a < b");
  }
  const double xa = a * a * 0.25 / t;
  const double xb = std::isinf(b) ? b : b * b * 0.25 / t;
  return gaussian_mass_between(xa, xb);
}

double annulus_mass_log(double log_t, double log_a, double log_b) {
  if (!std::isfinite(log_t)) throw InvalidArgument("log t must be finite");
  if (std::isnan(log_a) || std::isnan(log_b) || !(log_b > log_a)) {
    throw InvalidArgument("annulus_mass_log needs log_a < log_b");
  }
  const double log4t = log_t + kLn4;
  const double xa = std::exp(2.0 * log_a - log4t);
  const double xb = std::exp(2.0 * log_b - log4t);
  return gaussian_mass_between(xa, xb);
}

}  // namespace lcexact
