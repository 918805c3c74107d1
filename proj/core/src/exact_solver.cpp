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

#include "lcexact/exact_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "lcexact/error.hpp"
#include "lcexact/quadrature.hpp"
#include "parallel.hpp"

namespace lcexact {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();

// Radius used for checks on profiles without decay information.
constexpr double kUnboundedCheckRadius = 64.0;
constexpr int kRangeSamples = 4097;

double check_radius(const RadialProfile& f) {
  const double r = f.support_radius();
  return std::isfinite(r) ? std::max(r, 1.0) : kUnboundedCheckRadius;
}

constexpr double kSlopeStep = 1e-6;

// Central difference of a profile (forward at the origin), for validation.
double slope(const RadialProfile& f, double r) {
  constexpr double h = kSlopeStep;
  if (r < 2 * h) return (-3.0 * f(r) + 4.0 * f(r + h) - f(r + 2 * h)) / (2 * h);
  return (f(r + h) - f(r - h)) / (2 * h);
}

// int_0^R w(r) r dr for a profile-derived integrand w, split at the
// profile's breakpoints and at the points where the difference stencil of
// slope() starts to straddle one.
template <class W>
double weighted_integral(W&& w, const RadialProfile& f, double radius) {
  // Only finiteness is judged; the difference quotient in slope() carries
  // rounding noise near 1e-10, so a tighter tolerance cannot be met on
  // wide supports.
  quad::AdaptiveOptions qo;
  qo.abs_tol = 1e-6;
  qo.max_panels = 1 << 16;
  qo.max_initial_width = std::min(1.0, 4.0 * f.feature_scale());
  std::vector<double> cuts;
  for (double b : f.breakpoints()) {
    cuts.insert(cuts.end(), {b - kSlopeStep, b, b + kSlopeStep});
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::remove_if(cuts.begin(), cuts.end(),
                            [&](double c) { return !(c > 0.0 && c < radius); }),
             cuts.end());
  return quad::integrate_adaptive([&](double r) { return w(r) * r; }, 0.0,
                                  radius, qo, cuts)
      .value;
}

template <class W>
ValidationCheck finite_weighted(const std::string& name, W&& w,
                                const RadialProfile& f, double tail_value) {
  ValidationCheck c{name, false, kInf, ""};
  if (tail_value != 0.0) {
    c.detail = "integrand does not decay (far value " + std::to_string(tail_value) +
               "); the integral diverges";
    return c;
  }
  try {
    if (std::isfinite(f.support_radius())) {
      c.measured = weighted_integral(w, f, check_radius(f));
      c.passed = std::isfinite(c.measured);
      c.detail = "integrated over the declared support";
    } else {
      const double a = weighted_integral(w, f, kUnboundedCheckRadius);
      const double b = weighted_integral(w, f, 2 * kUnboundedCheckRadius);
      c.measured = b;
      c.passed = std::isfinite(b) && std::abs(b - a) <= 1e-6 * std::max(1.0, std::abs(b));
      c.detail = c.passed ? "converged without decay metadata"
                          : "no decay metadata and the integral keeps growing";
    }
  } catch (const Error& e) {
    c.detail = std::string("quadrature failed: ") + e.what();
  }
  return c;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

void check_time(double t) {
  if (!std::isfinite(t) || t < 0.0) {
    throw InvalidArgument("time must be finite and >= 0");
  }
}

void check_radius_arg(double r) {
  if (!std::isfinite(r) || r < 0.0) {
    throw InvalidArgument("radius must be finite and >= 0");
  }
}

// Richardson-extrapolated derivative of a radial function f at r.
template <class F>
double radial_derivative(F&& f, double r) {
  const double h = std::max(1e-4, 1e-3 * r);
  if (r < 4 * h) {
    const double f0 = f(r), f1 = f(r + h), f2 = f(r + 2 * h), f3 = f(r + 3 * h),
                 f4 = f(r + 4 * h);
    return (-25.0 * f0 + 48.0 * f1 - 36.0 * f2 + 16.0 * f3 - 3.0 * f4) / (12.0 * h);
  }
  const double m1 = f(r - h), p1 = f(r + h);
  const double m2 = f(r - 2 * h), p2 = f(r + 2 * h);
  const double m4 = f(r - 4 * h), p4 = f(r + 4 * h);
  const double d1 = (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
  const double d2 = (m4 - 8.0 * m2 + 8.0 * p2 - p4) / (24.0 * h);
  return (16.0 * d1 - d2) / 15.0;
}

// Pressure integrand (u^2 - metric psi_r^2) / s and its parts at s.
struct PressurePoint {
  double psi;
  double psi_r;
  double u;
  double dr2;  // |d_r|^2
};

PressurePoint pressure_point(const ExactSolution& sol, double t, double s) {
  PressurePoint pt;
  pt.psi = solve_psi(sol, t, s);
  pt.psi_r = psi_r(sol, t, s);
  pt.u = solve_u(sol, t, s);
  pt.dr2 = metric_factor(pt.psi, sol.params()) * pt.psi_r * pt.psi_r;
  return pt;
}

double pressure_integrand(const ExactSolution& sol, double t, double s) {
  const PressurePoint pt = pressure_point(sol, t, s);
  return (pt.u * pt.u - pt.dr2) / s;
}

double panel_start(const ExactSolution& sol, std::size_t j) {
  return j == 0 ? sol.options().pressure_eps
                : static_cast<double>(j) * sol.pressure_panel();
}

double pressure_piece(const ExactSolution& sol, double t, double a, double b) {
  if (!(b > a)) return 0.0;
  return quad::integrate_fixed(
      [&](double s) { return pressure_integrand(sol, t, s); }, a, b,
      quad::gauss_legendre(8));
}

// Full panels [start(j), (j+1) * panel] lying below r.
std::size_t full_panels(const ExactSolution& sol, double r) {
  return static_cast<std::size_t>(std::floor(r / sol.pressure_panel()));
}

std::optional<std::string> pressure_warning(const ExactSolution& sol, double t) {
  const double eps = sol.options().pressure_eps;
  const PressurePoint pt = pressure_point(sol, t, eps);
  const double scaled = std::abs(pt.u * pt.u - pt.dr2);
  if (scaled > 1e-10) {
    return "pressure integrand times s is " + fmt(scaled) + " at s = " + fmt(eps) +
           " (t = " + fmt(t) + "); the integral from 0 may not converge";
  }
  return std::nullopt;
}

double pressure_from_prefix(const ExactSolution& sol, double t, double r,
                            std::span<const double> prefix, double dr2_at_r) {
  const double eps = sol.options().pressure_eps;
  double integral = 0.0;
  if (r > eps) {
    const std::size_t k = full_panels(sol, r);
    integral = prefix[k] + pressure_piece(sol, t, panel_start(sol, k), r);
  }
  return integral - dr2_at_r;
}

std::vector<double> pressure_prefix(const ExactSolution& sol, double t,
                                    double r_max, int threads) {
  const std::size_t k = r_max > sol.options().pressure_eps ? full_panels(sol, r_max) : 0;
  std::vector<double> panels(k);
  detail::parallel_for(k, threads, [&](std::size_t j) {
    panels[j] = pressure_piece(sol, t, panel_start(sol, j),
                               static_cast<double>(j + 1) * sol.pressure_panel());
  });
  std::vector<double> prefix(k + 1, 0.0);
  for (std::size_t j = 0; j < k; ++j) prefix[j + 1] = prefix[j] + panels[j];
  return prefix;
}

[[noreturn]] void rethrow_at_node(std::size_t i, double r) {
  const std::string where = "node " + std::to_string(i) + " (r = " + fmt(r) + "): ";
  try {
    throw;
  } catch (const InvariantBreach&) {
    throw;
  } catch (const DegenerateMargin& e) {
    throw DegenerateMargin(where + e.what(), e.psi(), e.margin());
  } catch (const DomainViolation& e) {
    throw DomainViolation(where + e.what(), e.psi(), e.margin());
  } catch (const NumericalError& e) {
    throw NumericalError(where + e.what(), e.achieved_tolerance());
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(where + e.what());
  } catch (const Error& e) {
    throw Error(where + e.what());
  }
}

}  // namespace

bool ValidationReport::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::find(const std::string& name) const noexcept {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string ValidationReport::summary() const {
  std::ostringstream s;
  s.precision(17);
  for (const auto& c : checks) {
    s << (c.passed ? "pass " : "FAIL ") << c.name << " = " << c.measured;
    if (!c.detail.empty()) s << " (" << c.detail << ")";
    s << "\n";
  }
  for (const auto& w : warnings) s << "warning: " << w << "\n";
  return s.str();
}

ValidationReport validate_initial(const InitialData& data) {
  ValidationReport rep;
  const ModelParams& mp = data.params;
  const double d1 = mp.delta1();

  {
    ValidationCheck c{"psi0_range", true, kInf, ""};
    const double radius = check_radius(data.psi0);
    std::vector<double> nodes;
    nodes.reserve(kRangeSamples + data.psi0.breakpoints().size() + 1);
    for (int i = 0; i < kRangeSamples; ++i) nodes.push_back(radius * i / (kRangeSamples - 1));
    for (double b : data.psi0.breakpoints()) nodes.push_back(b);
    double worst_r = 0.0;
    auto consider = [&](double value, double r) {
      const double gap = std::min(value - d1, kPi - d1 - value);
      const bool inside = gap > 0.0 && mp.margin(value) > kDomainMargin;
      if (gap < c.measured) {
        c.measured = gap;
        worst_r = r;
      }
      if (!inside || !std::isfinite(value)) c.passed = false;
    };
    for (double r : nodes) consider(data.psi0(r), r);
    consider(data.psi0.far_value(), kInf);
    c.detail = "min distance to (delta1, pi-delta1) boundary, attained at r = " + fmt(worst_r);
    rep.checks.push_back(std::move(c));
  }
  {
    const double m = mp.margin(d1);
    rep.checks.push_back({"beta_margin", m >= -kDomainMargin, m,
                          "beta*sin^2(delta1) - 1"});
  }
  rep.checks.push_back(finite_weighted(
      "u0_energy", [&](double r) { return data.u0(r) * data.u0(r); }, data.u0,
      data.u0.far_value()));
  rep.checks.push_back(finite_weighted(
      "psi0_dirichlet",
      [&](double r) {
        const double s = slope(data.psi0, r);
        return s * s;
      },
      data.psi0, 0.0));
  {
    const double u00 = std::abs(data.u0(0.0));
    rep.checks.push_back({"u0_origin", u00 <= 1e-12, u00,
                          "u0(0) must vanish so that u0/r stays bounded"});
  }
  if (data.far_field_psi) {
    const double ff = *data.far_field_psi;
    const double gap = std::abs(ff - data.psi0.far_value());
    const bool inside = std::isfinite(ff) && ff > d1 && ff < kPi - d1;
    rep.checks.push_back({"far_field_psi", inside && gap <= 1e-12, gap,
                          "difference from the profile's far value"});
  }
  const double s0 = slope(data.psi0, 0.0);
  if (std::abs(s0) > 1e-6) {
    rep.warnings.push_back("psi0'(0) = " + fmt(s0) +
                           " is nonzero; d is not smooth at the origin at t = 0");
  }
  return rep;
}

ExactSolution::ExactSolution(InitialData data, SolverOptions opts,
                             ValidationReport report, RadialProfile f0,
                             RadialProfile g0, double panel)
    : data_(std::move(data)),
      opts_(opts),
      report_(std::move(report)),
      f0_(std::move(f0)),
      g0_(std::move(g0)),
      panel_(panel) {}

ExactSolution ExactSolution::create(InitialData data, const SolverOptions& opts) {
  if (!(opts.pressure_eps > 0.0) || !(opts.heat.abs_tol > 0.0)) {
    throw InvalidArgument("solver tolerances must be positive");
  }
  ValidationReport report = validate_initial(data);
  if (!report.ok()) {
    throw InvalidArgument("initial data failed validation:\n" + report.summary());
  }
  const ModelParams params = data.params;
  RadialProfile f0 =
      data.psi0.mapped([params](double psi) { return F_map(psi, params); });
  RadialProfile g0 = data.u0.divided_by_radius();

  const double feature = std::min(data.psi0.feature_scale(), data.u0.feature_scale());
  double panel = 1.0 / 64.0;
  while (panel > feature / 16.0 && panel > 0x1p-20) panel *= 0.5;

  return ExactSolution(std::move(data), opts, std::move(report), std::move(f0),
                       std::move(g0), panel);
}

double solve_psi(const ExactSolution& sol, double t, double r) {
  check_time(t);
  check_radius_arg(r);
  // The heat flow fixes constants, so constant data is returned as is.
  if (t == 0.0 || sol.data().psi0.kind() == ProfileKind::kConstant) return sol.data().psi0(r);
  return F_inv(heat2d_radial(sol.transformed_psi0(), t, r, sol.options().heat),
               sol.params());
}

double solve_u(const ExactSolution& sol, double t, double r) {
  check_time(t);
  check_radius_arg(r);
  if (t == 0.0) return sol.data().u0(r);
  if (r == 0.0) return 0.0;
  return r * heat4d_radial(sol.g0(), t, r, sol.options().heat);
}

double solve_phi(const ExactSolution& sol, double t, double r) {
  return phi_of_psi(solve_psi(sol, t, r), sol.params());
}

double psi_r(const ExactSolution& sol, double t, double r) {
  check_time(t);
  check_radius_arg(r);
  if (t == 0.0) {
    const RadialProfile& p0 = sol.data().psi0;
    return radial_derivative([&](double s) { return p0(s); }, r);
  }
  return radial_derivative([&](double s) { return solve_psi(sol, t, s); }, r);
}

PressureValue solve_pressure(const ExactSolution& sol, double t, double r) {
  check_time(t);
  check_radius_arg(r);
  PressureValue out;
  out.warning = pressure_warning(sol, t);
  const std::vector<double> prefix = pressure_prefix(sol, t, r, 1);
  out.value = pressure_from_prefix(sol, t, r, prefix, pressure_point(sol, t, r).dr2);
  return out;
}

FieldSnapshot snapshot(const ExactSolution& sol, double t,
                       std::span<const double> r_grid, const SnapshotOptions& opts) {
  check_time(t);
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    check_radius_arg(r_grid[i]);
    if (i > 0 && !(r_grid[i] > r_grid[i - 1])) {
      throw InvalidArgument("snapshot grid must be strictly increasing");
    }
  }
  const FieldMask& m = opts.fields;
  const std::size_t n = r_grid.size();
  FieldSnapshot snap;
  snap.t = t;
  snap.r.assign(r_grid.begin(), r_grid.end());

  const bool need_psi = m.psi || m.phi || m.d || m.p;
  const bool need_phi = m.phi || m.d;
  const bool need_psi_r = m.psi_r || m.p;
  std::vector<double> psi(need_psi ? n : 0), phi(need_phi ? n : 0);
  if (m.u) snap.u.resize(n);
  if (m.p) snap.p.resize(n);
  if (m.psi_r) snap.psi_r.resize(n);
  if (m.d) snap.d.resize(n);

  std::vector<double> prefix;
  if (m.p && n > 0) {
    if (auto w = pressure_warning(sol, t)) snap.warnings.push_back(*w);
    prefix = pressure_prefix(sol, t, r_grid.back(), opts.threads);
  }

  detail::parallel_for(n, opts.threads, [&](std::size_t i) {
    const double r = r_grid[i];
    try {
      if (need_psi) psi[i] = solve_psi(sol, t, r);
      if (need_phi) phi[i] = phi_of_psi(psi[i], sol.params());
      if (m.d) snap.d[i] = director_from_angles(psi[i], phi[i]);
      if (m.u) snap.u[i] = solve_u(sol, t, r);
      const double pr = need_psi_r ? psi_r(sol, t, r) : 0.0;
      if (m.psi_r) snap.psi_r[i] = pr;
      if (m.p) {
        // Same expression as pressure_point(), so values match solve_pressure.
        const double dr2 = metric_factor(psi[i], sol.params()) * pr * pr;
        snap.p[i] = pressure_from_prefix(sol, t, r, prefix, dr2);
      }
    } catch (...) {
      rethrow_at_node(i, r);
    }
  });

  const double d1 = sol.params().delta1();
  for (std::size_t i = 0; i < n; ++i) {
    if (need_psi && !(psi[i] > d1 && psi[i] < kPi - d1)) {
      throw InvariantBreach("psi-range", i,
                            "psi-range breach at node " + std::to_string(i) +
                                ": psi = " + fmt(psi[i]) + " outside (delta1, pi-delta1)");
    }
    if (m.d) {
      const Director& d = snap.d[i];
      const double dev = std::abs(std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]) - 1.0);
      if (dev > 8 * kEps) {
        throw InvariantBreach("unit-norm", i,
                              "unit-norm breach at node " + std::to_string(i) +
                                  ": ||d|| - 1 = " + fmt(dev));
      }
    }
  }
  if (m.psi) snap.psi = std::move(psi);
  if (m.phi) snap.phi = std::move(phi);
  return snap;
}

double long_time_limit(const ExactSolution& sol) {
  if (!sol.data().far_field_psi) {
    throw NotApplicable("no far-field value of psi0 was declared");
  }
  const ModelParams& p = sol.params();
  return F_inv(F_map(*sol.data().far_field_psi, p), p);
}

double sup_distance_to_limit(const ExactSolution& sol, double t,
                             std::span<const double> r_grid, int threads) {
  const double limit = long_time_limit(sol);
  SnapshotOptions so;
  so.fields = FieldMask::none();
  so.fields.psi = true;
  so.threads = threads;
  const FieldSnapshot s = snapshot(sol, t, r_grid, so);
  double worst = 0.0;
  for (double v : s.psi) worst = std::max(worst, std::abs(v - limit));
  return worst;
}

}  // namespace lcexact
