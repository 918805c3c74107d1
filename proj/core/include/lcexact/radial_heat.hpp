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

// Heat semigroups acting on radial functions in R^2 and R^4.
//
// Integrating the Gaussian kernel over the angular variables leaves a 1D
// integral in the source radius rho:
//
//   R^2:  K(r, rho) = rho/(2t) exp(-(r-rho)^2/(4t)) i0e(r rho/(2t))
//   R^4:  K(r, rho) = rho^3/(4t^2) exp(-(r-rho)^2/(4t)) i1e(z)/z,
//         z = r rho/(2t)
//
// where i0e, i1e are the exponentially scaled modified Bessel functions. The
// 4D weight follows from |S^2| = 4 pi and
//   int_0^pi exp(z cos th) sin^2 th dth = pi I1(z)/z.
// Both kernels have unit mass in rho, so constants are fixed points.

#ifndef LCEXACT_RADIAL_HEAT_HPP
#define LCEXACT_RADIAL_HEAT_HPP

#include "lcexact/radial_profile.hpp"

namespace lcexact {

struct HeatOptions {
  double abs_tol = 1e-10;
  /// Half-width of the integration window in units of sqrt(t).
  double window = 12.0;
  int max_panels = 4096;
};

struct HeatQuery {
  double t = 0.0;
  double r = 0.0;
  int dimension = 2;
};

/// (Gamma_t * f0)(r) for the 2D heat kernel and radial f0; t > 0.
double heat2d_radial(const RadialProfile& f0, double t, double r,
                     const HeatOptions& opts = {});

/// (Gamma_t * g0)(r) for the 4D heat kernel and radial g0; t > 0.
double heat4d_radial(const RadialProfile& g0, double t, double r,
                     const HeatOptions& opts = {});

/// Dispatches on query.dimension (2 or 4).
double heat_radial(const RadialProfile& f0, const HeatQuery& query,
                   const HeatOptions& opts = {});

/// 2D evolution at the origin. Log tables are integrated piece by piece in
/// s = log rho, which keeps astronomically wide profiles tractable.
double heat2d_origin(const RadialProfile& f0, double t,
                     const HeatOptions& opts = {});

/// heat2d_origin with time given as log t.
double heat2d_origin_log(const RadialProfile& f0, double log_t,
                         const HeatOptions& opts = {});

/// Mass of the 2D heat kernel on the annulus a < |x| < b:
/// exp(-a^2/(4t)) - exp(-b^2/(4t)). b may be +infinity.
double annulus_mass(double t, double a, double b);

/// annulus_mass with t = exp(log_t), a = exp(log_a), b = exp(log_b).
double annulus_mass_log(double log_t, double log_a, double log_b);

}  // namespace lcexact

#endif  // LCEXACT_RADIAL_HEAT_HPP
