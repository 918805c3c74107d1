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

#include "lcexact/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "lcexact/error.hpp"
#include "lcexact/quadrature.hpp"

namespace lcexact {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

double grid_spacing(const FieldSnapshot& s) {
  const std::size_t n = s.r.size();
  if (n < 5) throw InvalidArgument("residuals need at least 5 grid nodes");
  const double h = (s.r.back() - s.r.front()) / static_cast<double>(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    if (std::abs(s.r[i] - s.r[i - 1] - h) > 1e-9 * h) {
      throw InvalidArgument("residuals need a uniform radial grid");
    }
  }
  if (s.r.front() <= 0.0) {
    throw InvalidArgument("residual grids must stay away from r = 0");
  }
  return h;
}

template <class V>
void require_field(const V& v, std::size_t n, const char* name) {
  if (v.size() != n) {
    throw InvalidArgument(std::string("snapshot lacks field ") + name);
  }
}

double time_step(const FieldSnapshot& prev, const FieldSnapshot& mid,
                 const FieldSnapshot& next) {
  if (prev.r != mid.r || next.r != mid.r) {
    throw InvalidArgument("snapshots are on different grids");
  }
  const double a = mid.t - prev.t;
  const double b = next.t - mid.t;
  if (!(a > 0.0) || std::abs(a - b) > 1e-9 * a) {
    throw InvalidArgument("snapshots must be equally spaced increasing times");
  }
  return 0.5 * (next.t - prev.t);
}

// Collects per-node residual components. The first `normed` components
// define the node residual (max of their magnitudes).
class Collector {
 public:
  Collector(std::string name, double h, double tau, std::size_t n, std::size_t comps)
      : n_(n) {
    rep_.equation = std::move(name);
    rep_.h = h;
    rep_.tau = tau;
    rep_.component_max.assign(comps, 0.0);
  }

  template <class F>
  ResidualReport run(const std::vector<double>& r, std::size_t normed, F&& at) {
    double sum2 = 0.0;
    for (std::size_t i = 1; i + 1 < n_; ++i) {
      const std::vector<double> c = at(i);
      double node = 0.0;
      for (std::size_t k = 0; k < normed; ++k) node = std::max(node, std::abs(c[k]));
      const bool interior = i >= 2 && i + 2 < n_;
      if (!interior) {
        rep_.boundary_max = std::max(rep_.boundary_max, node);
        continue;
      }
      for (std::size_t k = 0; k < c.size(); ++k) {
        rep_.component_max[k] = std::max(rep_.component_max[k], std::abs(c[k]));
      }
      sum2 += node * node;
      if (node > rep_.max_norm) {
        rep_.max_norm = node;
        rep_.worst_index = i;
        rep_.worst_r = r[i];
      }
    }
    rep_.l2_norm = std::sqrt(rep_.h * sum2);
    return rep_;
  }

 private:
  std::size_t n_;
  ResidualReport rep_;
};

struct Stencil {
  double h;
  double dr(const std::vector<double>& f, std::size_t i) const {
    return (f[i + 1] - f[i - 1]) / (2.0 * h);
  }
  double drr(const std::vector<double>& f, std::size_t i) const {
    return (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (h * h);
  }
};

std::vector<double> component(const std::vector<Director>& d, int k) {
  std::vector<double> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = d[i][k];
  return out;
}

void thomas(std::vector<double>& lower, std::vector<double>& diag,
            std::vector<double>& upper, std::vector<double>& rhs) {
  const std::size_t n = diag.size();
  for (std::size_t i = 1; i < n; ++i) {
    const double w = lower[i] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  rhs[n - 1] /= diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    rhs[i] = (rhs[i] - upper[i] * rhs[i + 1]) / diag[i];
  }
}

struct PsiNonlinearity {
  double beta;
  double q(double psi) const {
    const double s = std::sin(psi);
    return std::cos(psi) / ((beta * s * s - 1.0) * s);
  }
  double dq(double psi) const {
    const double s = std::sin(psi);
    const double c = std::cos(psi);
    const double D = beta * s * s * s - s;
    return (-s * D - c * c * (3.0 * beta * s * s - 1.0)) / (D * D);
  }
};

// Spatial operator L(x) = x_rr + x_r / r - q(x) x_r^2 at the non-Dirichlet
// nodes; the origin row uses the symmetric extension x_{-1} = x_1.
void apply_operator(const std::vector<double>& x, double h, const PsiNonlinearity& nl,
                    std::vector<double>& out) {
  const std::size_t n = x.size();
  out[0] = 4.0 * (x[1] - x[0]) / (h * h);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double r = h * static_cast<double>(i);
    const double g = (x[i + 1] - x[i - 1]) / (2.0 * h);
    out[i] = (x[i + 1] - 2.0 * x[i] + x[i - 1]) / (h * h) + g / r - nl.q(x[i]) * g * g;
  }
  out[n - 1] = 0.0;
}

}  // namespace

ResidualReport residual_u(const FieldSnapshot& prev, const FieldSnapshot& mid,
                          const FieldSnapshot& next) {
  const double tau = time_step(prev, mid, next);
  const double h = grid_spacing(mid);
  const std::size_t n = mid.r.size();
  for (const FieldSnapshot* s : {&prev, &mid, &next}) require_field(s->u, n, "u");
  const Stencil st{h};
  Collector c("u", h, tau, n, 1);
  return c.run(mid.r, 1, [&](std::size_t i) {
    const double r = mid.r[i];
    const double ut = (next.u[i] - prev.u[i]) / (2.0 * tau);
    return std::vector<double>{ut - st.drr(mid.u, i) - st.dr(mid.u, i) / r +
                               mid.u[i] / (r * r)};
  });
}

ResidualReport residual_psi(const FieldSnapshot& prev, const FieldSnapshot& mid,
                            const FieldSnapshot& next, const ModelParams& params) {
  const double tau = time_step(prev, mid, next);
  const double h = grid_spacing(mid);
  const std::size_t n = mid.r.size();
  for (const FieldSnapshot* s : {&prev, &mid, &next}) require_field(s->psi, n, "psi");
  const Stencil st{h};
  const PsiNonlinearity nl{params.beta()};
  Collector c("psi", h, tau, n, 1);
  return c.run(mid.r, 1, [&](std::size_t i) {
    const double r = mid.r[i];
    const double pt = (next.psi[i] - prev.psi[i]) / (2.0 * tau);
    const double pr = st.dr(mid.psi, i);
    return std::vector<double>{pt - st.drr(mid.psi, i) - pr / r +
                               nl.q(mid.psi[i]) * pr * pr};
  });
}

ResidualReport residual_angles(const FieldSnapshot& prev, const FieldSnapshot& mid,
                               const FieldSnapshot& next) {
  const double tau = time_step(prev, mid, next);
  const double h = grid_spacing(mid);
  const std::size_t n = mid.r.size();
  for (const FieldSnapshot* s : {&prev, &mid, &next}) {
    require_field(s->psi, n, "psi");
    require_field(s->phi, n, "phi");
  }
  const Stencil st{h};
  Collector c("angles", h, tau, n, 2);
  return c.run(mid.r, 2, [&](std::size_t i) {
    const double r = mid.r[i];
    const double psi = mid.psi[i];
    const double s = std::sin(psi);
    const double co = std::cos(psi);
    const double psi_t = (next.psi[i] - prev.psi[i]) / (2.0 * tau);
    const double phi_t = (next.phi[i] - prev.phi[i]) / (2.0 * tau);
    const double psi_r = st.dr(mid.psi, i);
    const double phi_r = st.dr(mid.phi, i);
    const double e1 = psi_t - st.drr(mid.psi, i) - psi_r / r + co * s * phi_r * phi_r;
    const double e2 = phi_t - st.drr(mid.phi, i) - phi_r / r - 2.0 * co / s * psi_r * phi_r;
    return std::vector<double>{e1, e2};
  });
}

ResidualReport residual_director(const FieldSnapshot& prev, const FieldSnapshot& mid,
                                 const FieldSnapshot& next) {
  const double tau = time_step(prev, mid, next);
  const double h = grid_spacing(mid);
  const std::size_t n = mid.r.size();
  for (const FieldSnapshot* s : {&prev, &mid, &next}) require_field(s->d, n, "d");
  const Stencil st{h};
  std::vector<double> dm[3], dp[3], dn[3];
  for (int k = 0; k < 3; ++k) {
    dm[k] = component(mid.d, k);
    dp[k] = component(prev.d, k);
    dn[k] = component(next.d, k);
  }
  Collector c("director", h, tau, n, 4);
  return c.run(mid.r, 3, [&](std::size_t i) {
    const double r = mid.r[i];
    double dr[3], grad2 = 0.0;
    for (int k = 0; k < 3; ++k) {
      dr[k] = st.dr(dm[k], i);
      grad2 += dr[k] * dr[k];
    }
    std::vector<double> out(4);
    double normal = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double dt = (dn[k][i] - dp[k][i]) / (2.0 * tau);
      out[k] = dt - st.drr(dm[k], i) - dr[k] / r - grad2 * dm[k][i];
      normal += out[k] * dm[k][i];
    }
    out[3] = normal;
    return out;
  });
}

ResidualReport residual_pressure(const FieldSnapshot& snap) {
  const double h = grid_spacing(snap);
  const std::size_t n = snap.r.size();
  require_field(snap.p, n, "p");
  require_field(snap.u, n, "u");
  require_field(snap.d, n, "d");
  const Stencil st{h};
  std::vector<double> d[3];
  for (int k = 0; k < 3; ++k) d[k] = component(snap.d, k);
  Collector c("pressure", h, 0.0, n, 1);
  return c.run(snap.r, 1, [&](std::size_t i) {
    const double r = snap.r[i];
    double dot = 0.0, grad2 = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double dr = st.dr(d[k], i);
      dot += dr * st.drr(d[k], i);
      grad2 += dr * dr;
    }
    const double u = snap.u[i];
    return std::vector<double>{st.dr(snap.p, i) - u * u / r + 2.0 * dot + grad2 / r};
  });
}

ResidualStudy residual_study(const ExactSolution& sol, const ResidualStudySpec& spec) {
  if (spec.h.size() != spec.tau.size() || spec.h.size() < 2) {
    throw InvalidArgument("residual study needs matching h/tau lists of length >= 2");
  }
  if (!(spec.r_min > 0.0) || !(spec.r_max > spec.r_min)) {
    throw InvalidArgument("residual study needs 0 < r_min < r_max");
  }
  ResidualStudy study;
  const auto& eqs = residual_equations();
  for (std::size_t l = 0; l < spec.h.size(); ++l) {
    const double h = spec.h[l];
    const double tau = spec.tau[l];
    if (!(h > 0.0) || !(tau > 0.0) || !(spec.t - tau > 0.0)) {
      throw InvalidArgument("residual levels need h > 0 and 0 < tau < t");
    }
    if (spec.r_min - 2.0 * h <= 0.0) {
      throw InvalidArgument("r_min must exceed two grid spacings");
    }
    const auto cells = static_cast<std::size_t>(std::lround((spec.r_max - spec.r_min) / h));
    std::vector<double> grid(cells + 5);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      grid[i] = spec.r_min + h * (static_cast<double>(i) - 2.0);
    }
    SnapshotOptions side;
    side.threads = spec.threads;
    side.fields = FieldMask::none();
    side.fields.psi = side.fields.phi = side.fields.u = side.fields.d = true;
    SnapshotOptions centre = side;
    centre.fields.p = true;
    centre.fields.psi_r = true;
    const FieldSnapshot prev = snapshot(sol, spec.t - tau, grid, side);
    FieldSnapshot mid = snapshot(sol, spec.t, grid, centre);
    const FieldSnapshot next = snapshot(sol, spec.t + tau, grid, side);
    std::vector<ResidualReport> reps;
    reps.push_back(residual_u(prev, mid, next));
    reps.push_back(residual_psi(prev, mid, next, sol.params()));
    reps.push_back(residual_angles(prev, mid, next));
    reps.push_back(residual_director(prev, mid, next));
    reps.push_back(residual_pressure(mid));
    study.levels.push_back(std::move(reps));
    if (l + 1 == spec.h.size()) study.finest = std::move(mid);
  }
  study.orders.assign(eqs.size(), {});
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    for (std::size_t l = 0; l + 1 < study.levels.size(); ++l) {
      const double a = study.levels[l][e].max_norm;
      const double b = study.levels[l + 1][e].max_norm;
      const double ratio = spec.h[l] / spec.h[l + 1];
      study.orders[e].push_back(
          (a <= kResidualZero && b <= kResidualZero)
              ? kNaN
              : std::log(a / b) / std::log(ratio));
    }
  }
  return study;
}

std::pair<double, double> f_range(const FieldSnapshot& snap, const ModelParams& params) {
  if (snap.psi.empty()) throw InvalidArgument("f_range needs psi values");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double psi : snap.psi) {
    const double f = F_map(psi, params);
    lo = std::min(lo, f);
    hi = std::max(hi, f);
  }
  return {lo, hi};
}

namespace {

double arc_length_between(double lo, double hi, const ModelParams& params) {
  if (!(hi > lo)) return 0.0;
  quad::AdaptiveOptions qo;
  qo.abs_tol = 1e-13;
  return quad::integrate_adaptive(
             [&](double s) { return std::sqrt(metric_factor(s, params)); }, lo, hi, qo)
      .value;
}

}  // namespace

double arc_length(const FieldSnapshot& snap, const ModelParams& params) {
  if (snap.psi.empty()) throw InvalidArgument("arc_length needs a non-empty grid");
  const auto [lo, hi] = std::minmax_element(snap.psi.begin(), snap.psi.end());
  return arc_length_between(*lo, *hi, params);
}

double energy(const FieldSnapshot& snap, const ModelParams& params) {
  const std::size_t n = snap.r.size();
  if (n < 2) throw InvalidArgument("energy needs at least 2 nodes");
  require_field(snap.u, n, "u");
  require_field(snap.psi, n, "psi");
  require_field(snap.psi_r, n, "psi_r");
  auto density = [&](std::size_t i) {
    const double pr = snap.psi_r[i];
    const double u = snap.u[i];
    return (u * u + metric_factor(snap.psi[i], params) * pr * pr) * snap.r[i];
  };
  double sum = 0.0;
  double prev = density(0);
  for (std::size_t i = 1; i < n; ++i) {
    const double cur = density(i);
    sum += 0.5 * (prev + cur) * (snap.r[i] - snap.r[i - 1]);
    prev = cur;
  }
  return kPi * sum;
}

double energy_radius(const ExactSolution& sol, double t) {
  auto reach = [](const RadialProfile& f) {
    const double r = f.support_radius();
    return std::isfinite(r) ? r : 64.0;
  };
  const double base = std::max(reach(sol.data().u0), reach(sol.data().psi0));
  return std::max(1.0, base + 12.0 * std::sqrt(t));
}

double energy(const ExactSolution& sol, double t, int nodes, int threads) {
  if (nodes < 2) throw InvalidArgument("energy needs at least 2 nodes");
  const double R = energy_radius(sol, t);
  std::vector<double> grid(static_cast<std::size_t>(nodes));
  for (int i = 0; i < nodes; ++i) grid[i] = R * i / (nodes - 1);
  SnapshotOptions so;
  so.fields = FieldMask::none();
  so.fields.psi = so.fields.u = so.fields.psi_r = true;
  so.threads = threads;
  return energy(snapshot(sol, t, grid, so), sol.params());
}

Diagnostics compute_diagnostics(const ExactSolution& sol, std::span<const double> times,
                                std::span<const double> r_grid, int threads,
                                int energy_nodes) {
  Diagnostics dg;
  SnapshotOptions so;
  so.fields = FieldMask::none();
  so.fields.psi = true;
  so.threads = threads;
  // psi(t, r) -> psi0(infinity) as r -> infinity for every t, so that value
  // belongs to the closure of the attained range even when the grid stops
  // short of it.
  const double far = sol.data().psi0.far_value();
  for (double t : times) {
    const FieldSnapshot s = snapshot(sol, t, r_grid, so);
    auto [plo, phi] = std::minmax_element(s.psi.begin(), s.psi.end());
    double lo = *plo, hi = *phi;
    if (std::isfinite(far)) {
      lo = std::min(lo, far);
      hi = std::max(hi, far);
    }
    dg.times.push_back(t);
    dg.arc_length.push_back(arc_length_between(lo, hi, sol.params()));
    // F is increasing, so the F-range is the image of the psi-range.
    dg.F_min.push_back(F_map(lo, sol.params()));
    dg.F_max.push_back(F_map(hi, sol.params()));
    dg.psi_min.push_back(lo);
    dg.psi_max.push_back(hi);
    dg.energy.push_back(energy(sol, t, energy_nodes, threads));
  }
  return dg;
}

MonitorResult monitor_unit_norm(const FieldSnapshot& snap) {
  MonitorResult m{"unit-norm", true, 0.0, ""};
  for (std::size_t i = 0; i < snap.d.size(); ++i) {
    const Director& d = snap.d[i];
    const double dev = std::abs(std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]) - 1.0);
    if (dev > m.measured) m.measured = dev;
    if (dev > 8 * kEps && m.passed) {
      m.passed = false;
      m.detail = "| |d| - 1 | = " + fmt(dev) + " at node " + std::to_string(i) +
                 " (r = " + fmt(snap.r[i]) + ")";
    }
  }
  return m;
}

MonitorResult monitor_psi_range(const FieldSnapshot& snap, const ModelParams& params) {
  MonitorResult m{"psi-range", true, std::numeric_limits<double>::infinity(), ""};
  const double d1 = params.delta1();
  for (std::size_t i = 0; i < snap.psi.size(); ++i) {
    const double gap = std::min(snap.psi[i] - d1, kPi - d1 - snap.psi[i]);
    m.measured = std::min(m.measured, gap);
    if (!(gap > 0.0) && m.passed) {
      m.passed = false;
      m.detail = "psi = " + fmt(snap.psi[i]) + " at node " + std::to_string(i);
    }
  }
  return m;
}

MonitorResult monitor_f_nesting(const Diagnostics& diag) {
  MonitorResult m{"F-range-nesting", true, 0.0, ""};
  for (std::size_t j = 1; j < diag.times.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const double over = std::max(diag.F_min[i] - diag.F_min[j], diag.F_max[j] - diag.F_max[i]);
      m.measured = std::max(m.measured, over);
      if (over > 1e-8 && m.passed) {
        m.passed = false;
        m.detail = "F-range at t = " + fmt(diag.times[j]) + " leaves the range at t = " +
                   fmt(diag.times[i]) + " by " + fmt(over);
      }
    }
  }
  return m;
}

MonitorResult monitor_arc_length(const Diagnostics& diag) {
  MonitorResult m{"arc-length-monotone", true, 0.0, ""};
  for (std::size_t j = 1; j < diag.times.size(); ++j) {
    const double growth = diag.arc_length[j] - diag.arc_length[j - 1];
    m.measured = std::max(m.measured, growth);
    if (growth > 1e-8 && m.passed) {
      m.passed = false;
      m.detail = "arc length grows by " + fmt(growth) + " between t = " +
                 fmt(diag.times[j - 1]) + " and t = " + fmt(diag.times[j]);
    }
  }
  return m;
}

FdSolution reference_fd_solve(const InitialData& data, double t_end, const FdGrid& grid) {
  if (!std::isfinite(t_end) || t_end < 0.0) {
    throw InvalidArgument("t_end must be finite and >= 0");
  }
  if (grid.nodes < 4 || !(grid.r_max > 0.0) || !(grid.tau > 0.0)) {
    throw InvalidArgument("FD grid needs >= 4 nodes, r_max > 0 and tau > 0");
  }
  const ValidationReport rep = validate_initial(data);
  if (!rep.ok()) {
    throw InvalidArgument("initial data failed validation:\n" + rep.summary());
  }
  const std::size_t n = static_cast<std::size_t>(grid.nodes);
  const double h = grid.r_max / static_cast<double>(n - 1);
  const int steps = t_end == 0.0 ? 0 : static_cast<int>(std::ceil(t_end / grid.tau - 1e-9));
  const double tau = steps > 0 ? t_end / steps : 0.0;
  if (grid.scheme == TimeScheme::kExplicitEuler && tau > 0.25 * h * h) {
    throw ConfigurationError("explicit step " + fmt(tau) + " exceeds the stability limit h^2/4 = " +
                             fmt(0.25 * h * h));
  }

  FdSolution out;
  out.r.resize(n);
  out.psi.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.r[i] = h * static_cast<double>(i);
    out.psi[i] = data.psi0(out.r[i]);
  }
  const double far = out.psi[n - 1];
  const PsiNonlinearity nl{data.params.beta()};

  std::vector<double> Lold(n), L(n), x(n), lower(n), diag(n), upper(n), rhs(n);
  for (int step = 0; step < steps; ++step) {
    apply_operator(out.psi, h, nl, Lold);
    if (grid.scheme == TimeScheme::kExplicitEuler) {
      for (std::size_t i = 0; i + 1 < n; ++i) out.psi[i] += tau * Lold[i];
      out.psi[n - 1] = far;
      continue;
    }
    x = out.psi;
    bool converged = false;
    double last = 0.0;
    for (int it = 0; it < grid.newton_max_iter && !converged; ++it) {
      apply_operator(x, h, nl, L);
      const double c = 0.5 * tau;
      lower[0] = 0.0;
      diag[0] = 1.0 + c * 4.0 / (h * h);
      upper[0] = -c * 4.0 / (h * h);
      rhs[0] = -(x[0] - out.psi[0] - c * (L[0] + Lold[0]));
      for (std::size_t i = 1; i + 1 < n; ++i) {
        const double r = h * static_cast<double>(i);
        const double g = (x[i + 1] - x[i - 1]) / (2.0 * h);
        const double q = nl.q(x[i]);
        const double a_lo = 1.0 / (h * h) - 1.0 / (2.0 * h * r) + q * g / h;
        const double a_up = 1.0 / (h * h) + 1.0 / (2.0 * h * r) - q * g / h;
        const double a_di = -2.0 / (h * h) - nl.dq(x[i]) * g * g;
        lower[i] = -c * a_lo;
        diag[i] = 1.0 - c * a_di;
        upper[i] = -c * a_up;
        rhs[i] = -(x[i] - out.psi[i] - c * (L[i] + Lold[i]));
      }
      lower[n - 1] = 0.0;
      diag[n - 1] = 1.0;
      upper[n - 1] = 0.0;
      rhs[n - 1] = far - x[n - 1];
      thomas(lower, diag, upper, rhs);
      last = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        x[i] += rhs[i];
        last = std::max(last, std::abs(rhs[i]));
      }
      if (!std::isfinite(last)) break;
      converged = last <= grid.newton_tol;
    }
    if (!converged) {
      throw NumericalError("Newton iteration did not converge at step " +
                               std::to_string(step) + " (last update " + fmt(last) + ")",
                           last);
    }
    out.psi = x;
  }
  out.steps = steps;
  return out;
}

}  // namespace lcexact
