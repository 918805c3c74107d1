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

// Independent checks of exact solutions: finite-difference residuals of the
// governing equations, range/length/energy diagnostics, invariant monitors
// and a direct finite-difference solver for the psi equation
//
//   psi_t = psi_rr + psi_r / r - q(psi) psi_r^2,
//   q(psi) = cos psi / ((beta sin^2 psi - 1) sin psi).

#ifndef LCEXACT_VERIFIER_HPP
#define LCEXACT_VERIFIER_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcexact/exact_solver.hpp"

namespace lcexact {

/// Residual of one equation on the interior of a uniform grid. The two
/// outermost nodes at each end serve as stencil support only; the nodes
/// next to them are summarized in boundary_max.
struct ResidualReport {
  std::string equation;
  double h = 0.0;
  double tau = 0.0;
  double max_norm = 0.0;
  /// sqrt(h * sum of squared residuals).
  double l2_norm = 0.0;
  std::size_t worst_index = 0;
  double worst_r = 0.0;
  double boundary_max = 0.0;
  /// Max norm of each scalar component (angles: the psi and phi equations;
  /// director: d1, d2, d3 and the projection onto d).
  std::vector<double> component_max;
};

/// u_t - u_rr - u_r/r + u/r^2 at the middle snapshot.
ResidualReport residual_u(const FieldSnapshot& prev, const FieldSnapshot& mid,
                          const FieldSnapshot& next);

/// psi_t - psi_rr - psi_r/r + q(psi) psi_r^2.
ResidualReport residual_psi(const FieldSnapshot& prev, const FieldSnapshot& mid,
                            const FieldSnapshot& next, const ModelParams& params);

/// psi_t - psi_rr - psi_r/r + cos psi sin psi phi_r^2 and
/// phi_t - phi_rr - phi_r/r - 2 cot(psi) psi_r phi_r.
ResidualReport residual_angles(const FieldSnapshot& prev, const FieldSnapshot& mid,
                               const FieldSnapshot& next);

/// |d_t - d_rr - d_r/r - |d_r|^2 d| (max over components).
ResidualReport residual_director(const FieldSnapshot& prev, const FieldSnapshot& mid,
                                 const FieldSnapshot& next);

/// p_r - u^2/r + 2 d_r . d_rr + |d_r|^2 / r with every derivative taken by
/// central differences of the snapshot.
ResidualReport residual_pressure(const FieldSnapshot& snap);

inline const std::vector<std::string>& residual_equations() {
  static const std::vector<std::string> names{"u", "psi", "angles", "director",
                                              "pressure"};
  return names;
}

struct ResidualStudySpec {
  double t = 0.1;
  double r_min = 0.2;
  double r_max = 2.2;
  /// Refinement levels, coarse to fine; h and tau are refined together.
  std::vector<double> h = {4e-3, 2e-3, 1e-3};
  std::vector<double> tau = {4e-3, 2e-3, 1e-3};
  int threads = 1;
};

struct ResidualStudy {
  /// levels[l][e] for level l and equation e (in residual_equations() order).
  std::vector<std::vector<ResidualReport>> levels;
  /// orders[e][k]: observed order between levels k and k+1 (NaN when both
  /// residuals are at round-off level).
  std::vector<std::vector<double>> orders;
  /// Middle snapshot of the finest level (all fields).
  FieldSnapshot finest;
};

/// Residual levels below this are treated as exact (no order is defined).
inline constexpr double kResidualZero = 1e-12;

ResidualStudy residual_study(const ExactSolution& sol, const ResidualStudySpec& spec);

/// min and max of F(psi) over the snapshot nodes.
std::pair<double, double> f_range(const FieldSnapshot& snap, const ModelParams& params);

/// Length of the image curve over the attained psi interval:
/// int_{psi_min}^{psi_max} sqrt(metric_factor(s)) ds.
double arc_length(const FieldSnapshot& snap, const ModelParams& params);

/// pi int (u^2 + metric_factor(psi) psi_r^2) r dr by the trapezoidal rule on
/// the snapshot grid (needs u, psi and psi_r).
double energy(const FieldSnapshot& snap, const ModelParams& params);

/// Truncation radius for the energy integral: the larger decay radius of u0
/// and psi0 plus 12 sqrt(t).
double energy_radius(const ExactSolution& sol, double t);

/// energy() on `nodes` uniform nodes of [0, energy_radius(t)].
double energy(const ExactSolution& sol, double t, int nodes = 2001, int threads = 1);

/// Range, arc length and energy per time. The psi-range is taken over the
/// grid together with the far-field value psi0(infinity), i.e. over the
/// closure of the attained set on [0, infinity).
struct Diagnostics {
  std::vector<double> times;
  std::vector<double> arc_length;
  std::vector<double> F_min;
  std::vector<double> F_max;
  std::vector<double> psi_min;
  std::vector<double> psi_max;
  std::vector<double> energy;
};

Diagnostics compute_diagnostics(const ExactSolution& sol, std::span<const double> times,
                                std::span<const double> r_grid, int threads = 1,
                                int energy_nodes = 2001);

struct MonitorResult {
  std::string name;
  bool passed = true;
  double measured = 0.0;
  std::string detail;
};

/// max | |d| - 1 | over nodes, allowed 8 eps.
MonitorResult monitor_unit_norm(const FieldSnapshot& snap);
/// psi strictly inside (delta1, pi - delta1) at every node.
MonitorResult monitor_psi_range(const FieldSnapshot& snap, const ModelParams& params);
/// [F_min, F_max] at later times inside the earlier interval (slack 1e-8).
MonitorResult monitor_f_nesting(const Diagnostics& diag);
/// Arc length non-increasing in time (slack 1e-8).
MonitorResult monitor_arc_length(const Diagnostics& diag);

enum class TimeScheme { kCrankNicolson, kExplicitEuler };

struct FdGrid {
  double r_max = 8.0;
  int nodes = 2048;
  double tau = 1e-4;
  TimeScheme scheme = TimeScheme::kCrankNicolson;
  double newton_tol = 1e-13;
  int newton_max_iter = 30;
};

struct FdSolution {
  std::vector<double> r;
  std::vector<double> psi;
  int steps = 0;
};

/// Direct time stepping of the psi equation on [0, r_max] with psi_r = 0 at
/// the origin and psi = psi0(r_max) at the far end. Throws
/// ConfigurationError when an explicit step exceeds h^2/4 and NumericalError
/// when Newton fails.
FdSolution reference_fd_solve(const InitialData& data, double t_end,
                              const FdGrid& grid = {});

}  // namespace lcexact

#endif  // LCEXACT_VERIFIER_HPP
