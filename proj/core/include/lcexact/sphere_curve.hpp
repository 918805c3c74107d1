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

// Geometry of the director's image curve on the unit sphere.
//
// The director is parameterized by a polar angle psi and an azimuth phi. On
// the invariant curve phi = Phi(psi) the polar angle obeys a nonlinear heat
// equation that the map F(psi) = arccos(sqrt(beta/(beta-1)) cos psi) turns
// into the linear one. Everything here requires beta sin^2(psi) > 1.

#ifndef LCEXACT_SPHERE_CURVE_HPP
#define LCEXACT_SPHERE_CURVE_HPP

#include <array>
#include <span>
#include <vector>

namespace lcexact {

/// Slack required on beta sin^2(psi) > 1 before any square root or arccos.
inline constexpr double kDomainMargin = 1e-12;

class ModelParams {
 public:
  /// Throws InvalidArgument unless beta > 1, 0 < delta1 < pi/2 and
  /// beta >= 1/sin^2(delta1) (equality accepted to within kDomainMargin).
  static ModelParams create(double beta, double delta1);

  double beta() const noexcept { return beta_; }
  double delta1() const noexcept { return delta1_; }

  /// beta sin^2(psi) - 1.
  double margin(double psi) const noexcept;

  bool operator==(const ModelParams&) const = default;

 private:
  ModelParams(double beta, double delta1) : beta_(beta), delta1_(delta1) {}
  double beta_;
  double delta1_;
};

using Director = std::array<double, 3>;

/// (sin psi cos phi, sin psi sin phi, cos psi).
Director director_from_angles(double psi, double phi);

/// Positive branch of Phi'(psi) = 1 / (sqrt(beta sin^2 psi - 1) sin psi).
double phi_prime(double psi, const ModelParams& params);

/// Options for the Phi quadrature. `negative_branch` flips the sign of Phi'.
struct CurveOptions {
  double abs_tol = 1e-12;
  bool negative_branch = false;
};

/// Phi(psi) = integral of phi_prime from pi/2 to psi (adaptive
/// Gauss-Legendre). Strictly increasing and odd about pi/2.
double phi_of_psi(double psi, const ModelParams& params,
                  const CurveOptions& opts = {});

/// F(psi) = arccos(sqrt(beta/(beta-1)) cos psi), in (0, pi).
double F_map(double psi, const ModelParams& params);

/// F^{-1}(f) = arccos(sqrt((beta-1)/beta) cos f) for f in (0, pi).
double F_inv(double f, const ModelParams& params);

/// delta2 = F(delta1); throws DegenerateMargin when beta sin^2(delta1) == 1.
double delta2_of(const ModelParams& params);

/// 1 + sin^2(psi) Phi'(psi)^2 = beta sin^2 psi / (beta sin^2 psi - 1).
double metric_factor(double psi, const ModelParams& params);

/// Max over interior samples of the ODE residual
/// |Phi'' sin^2 + 2 Phi' cos sin + Phi'^3 cos sin^3| with Phi', Phi'' by
/// central differences on uniformly spaced samples.
double ode_residual_phi(std::span<const double> psi_samples,
                        const ModelParams& params);

/// |Phi(pi - delta1 - eps)| with beta = 1/sin^2(delta1) + beta_margin, for
/// each delta1. Witnesses the growth of Phi's range as delta1 shrinks.
std::vector<double> phi_range_growth(std::span<const double> delta1_list,
                                     double eps = 1e-3,
                                     double beta_margin = 1.0);

}  // namespace lcexact

#endif  // LCEXACT_SPHERE_CURVE_HPP
