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

// Closed-form (modulo quadrature) solutions of the rotationally symmetric
// liquid-crystal flow.
//
//   psi(t, r) = F^{-1}( Gamma_t * F(psi0) )         2D heat flow
//   u(t, r)   = r * (4D heat flow of u0(rho)/rho)
//   phi       = Phi(psi),  d = (sin psi cos phi, sin psi sin phi, cos psi)
//   p(t, r)   = int_0^r (u^2 - |d_r|^2)/s ds - |d_r|^2,
//               |d_r|^2 = metric_factor(psi) psi_r^2

#ifndef LCEXACT_EXACT_SOLVER_HPP
#define LCEXACT_EXACT_SOLVER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcexact/radial_heat.hpp"
#include "lcexact/radial_profile.hpp"
#include "lcexact/sphere_curve.hpp"

namespace lcexact {

struct InitialData {
  ModelParams params;
  RadialProfile u0;
  RadialProfile psi0;
  /// Limit of psi0 as r -> infinity, when known.
  std::optional<double> far_field_psi;
};

struct ValidationCheck {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  /// Conditions that are reported but do not fail validation.
  std::vector<std::string> warnings;

  bool ok() const noexcept;
  const ValidationCheck* find(const std::string& name) const noexcept;
  /// One line per check, then one per warning.
  std::string summary() const;
};

/// Checks the admissibility conditions on the initial data: psi0 strictly
/// inside (delta1, pi - delta1), finite int u0^2 r dr and int psi0'^2 r dr,
/// u0(0) = 0. A nonzero psi0'(0) only produces a warning.
ValidationReport validate_initial(const InitialData& data);

struct SolverOptions {
  HeatOptions heat;
  /// Lower limit of the pressure integral.
  double pressure_eps = 1e-8;
};

class ExactSolution {
 public:
  /// Throws InvalidArgument carrying the report when validation fails.
  static ExactSolution create(InitialData data, const SolverOptions& opts = {});

  const InitialData& data() const noexcept { return data_; }
  const ModelParams& params() const noexcept { return data_.params; }
  const SolverOptions& options() const noexcept { return opts_; }
  const ValidationReport& validation() const noexcept { return report_; }
  /// F(psi0(r)).
  const RadialProfile& transformed_psi0() const noexcept { return f0_; }
  /// u0(r) / r.
  const RadialProfile& g0() const noexcept { return g0_; }
  /// Width of the fixed panels used by the pressure integral (a power of 2).
  double pressure_panel() const noexcept { return panel_; }

 private:
  ExactSolution(InitialData data, SolverOptions opts, ValidationReport report,
                RadialProfile f0, RadialProfile g0, double panel);

  InitialData data_;
  SolverOptions opts_;
  ValidationReport report_;
  RadialProfile f0_;
  RadialProfile g0_;
  double panel_;
};

double solve_psi(const ExactSolution& sol, double t, double r);
double solve_u(const ExactSolution& sol, double t, double r);
double solve_phi(const ExactSolution& sol, double t, double r);

/// d psi / dr by Richardson-extrapolated 5-point central differences with
/// step max(1e-4, 1e-3 r); a one-sided 5-point stencil for r < 4 h.
/// At t = 0 the same stencils are applied to psi0.
double psi_r(const ExactSolution& sol, double t, double r);

struct PressureValue {
  double value = 0.0;
  /// Set when (u^2 - |d_r|^2) does not vanish at the lower limit, i.e. the
  /// integrand behaves like 1/s near the origin.
  std::optional<std::string> warning;
};

/// p(t, r) with the integral taken from pressure_eps; p = -|d_r|^2 for
/// r <= pressure_eps.
PressureValue solve_pressure(const ExactSolution& sol, double t, double r);

struct FieldMask {
  bool psi = true;
  bool phi = true;
  bool u = true;
  bool p = true;
  bool d = true;
  bool psi_r = false;

  static FieldMask all() { return {true, true, true, true, true, true}; }
  static FieldMask none() { return {false, false, false, false, false, false}; }
};

struct SnapshotOptions {
  FieldMask fields;
  /// Worker threads; results do not depend on this value.
  int threads = 1;
};

/// Fields on a radial grid at one time. Arrays for fields not requested in
/// the mask are empty.
struct FieldSnapshot {
  double t = 0.0;
  std::vector<double> r;
  std::vector<double> psi;
  std::vector<double> phi;
  std::vector<double> u;
  std::vector<double> p;
  std::vector<double> psi_r;
  std::vector<Director> d;
  std::vector<std::string> warnings;
};

/// Evaluates the requested fields on a strictly increasing grid. Values are
/// bitwise identical to the pointwise functions. Throws InvariantBreach if
/// |d| deviates from 1 by more than 8 eps or psi leaves (delta1, pi-delta1);
/// other evaluation errors are rethrown with the node index prepended.
FieldSnapshot snapshot(const ExactSolution& sol, double t,
                       std::span<const double> r_grid,
                       const SnapshotOptions& opts = {});

/// psi-bar = F^{-1}(F(far_field_psi)). Throws NotApplicable without a
/// declared far field.
double long_time_limit(const ExactSolution& sol);

/// max over the grid of |psi(t, r) - psi-bar|.
double sup_distance_to_limit(const ExactSolution& sol, double t,
                             std::span<const double> r_grid, int threads = 1);

}  // namespace lcexact

#endif  // LCEXACT_EXACT_SOLVER_HPP
