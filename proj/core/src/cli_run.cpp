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

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli_detail.hpp"
#include "lcexact/error.hpp"
#include "lcexact/nonshrink.hpp"
#include "lcexact/verifier.hpp"

namespace lcexact::cli {
namespace detail {

void write_file(const std::filesystem::path& path, const std::string& content,
                RunResult& result) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  out.close();
  if (!out) throw ConfigurationError("cannot write '" + path.string() + "'");
  result.files.push_back(path.string());
}

RunResult fail_from_current_exception(RunResult result) {
  try {
    throw;
  } catch (const InvariantBreach& e) {
    result.exit_code = kExitInvariant;
    result.message = std::string("invariant breach: ") + e.what();
  } catch (const ConfigurationError& e) {
    result.exit_code = kExitConfig;
    result.message = e.what();
  } catch (const InvalidArgument& e) {
    result.exit_code = kExitConfig;
    result.message = e.what();
  } catch (const NotApplicable& e) {
    result.exit_code = kExitConfig;
    result.message = e.what();
  } catch (const std::exception& e) {
    result.exit_code = kExitNumerical;
    result.message = std::string("numerical failure: ") + e.what();
  }
  return result;
}

}  // namespace detail

namespace {

using json = nlohmann::ordered_json;
using detail::out_dir;
using detail::wants;
using detail::write_file;

SolverOptions solver_options(const RunConfig& c) {
  SolverOptions o;
  o.heat.abs_tol = c.tolerances.quadrature_abs;
  return o;
}

// JSON numbers for values that may be NaN or infinite.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void append_warnings(RunResult& r, const std::vector<std::string>& w) {
  for (const auto& s : w) {
    if (std::find(r.warnings.begin(), r.warnings.end(), s) == r.warnings.end()) {
      r.warnings.push_back(s);
    }
  }
}

double verify_time(const RunConfig& c) {
  if (c.verify.time) return *c.verify.time;
  for (double t : c.grid.times) {
    if (t > 0.0) return t;
  }
  throw ConfigurationError("verify: no positive time in grid.times and no verify.time given");
}

}  // namespace

RunResult run_solve(const RunConfig& c, const RunOptions& o) {
  RunResult res;
  try {
    const ExactSolution sol = ExactSolution::create(build_initial(c), solver_options(c));
    append_warnings(res, sol.validation().warnings);
    const std::vector<double> r = radial_grid(c.grid);
    const std::filesystem::path dir = out_dir(c, o);

    std::string csv = "t,r,psi,phi,u,p,d1,d2,d3\n";
    json fields;
    fields["r"] = r;
    fields["snapshots"] = json::array();
    for (double t : c.grid.times) {
      const FieldSnapshot s = snapshot(sol, t, r, {FieldMask{}, o.threads});
      append_warnings(res, s.warnings);
      for (std::size_t i = 0; i < r.size(); ++i) {
        csv += format_double(t) + ',' + format_double(r[i]) + ',' + format_double(s.psi[i]) +
               ',' + format_double(s.phi[i]) + ',' + format_double(s.u[i]) + ',' +
               format_double(s.p[i]) + ',' + format_double(s.d[i][0]) + ',' +
               format_double(s.d[i][1]) + ',' + format_double(s.d[i][2]) + '\n';
      }
      if (wants(c, "json")) {
        json snap{{"t", t}, {"psi", s.psi}, {"phi", s.phi}, {"u", s.u}, {"p", s.p}};
        json d1 = json::array(), d2 = json::array(), d3 = json::array();
        for (const auto& d : s.d) {
          d1.push_back(d[0]);
          d2.push_back(d[1]);
          d3.push_back(d[2]);
        }
        snap["d1"] = d1;
        snap["d2"] = d2;
        snap["d3"] = d3;
        fields["snapshots"].push_back(snap);
      }
    }

    const Diagnostics diag = compute_diagnostics(sol, c.grid.times, r, o.threads);
    std::string dcsv = "t,arc_length,F_min,F_max,psi_min,psi_max,energy\n";
    for (std::size_t k = 0; k < diag.times.size(); ++k) {
      dcsv += format_double(diag.times[k]) + ',' + format_double(diag.arc_length[k]) + ',' +
              format_double(diag.F_min[k]) + ',' + format_double(diag.F_max[k]) + ',' +
              format_double(diag.psi_min[k]) + ',' + format_double(diag.psi_max[k]) + ',' +
              format_double(diag.energy[k]) + '\n';
    }

    if (wants(c, "csv")) {
      write_file(dir / "fields.csv", csv, res);
      write_file(dir / "diagnostics.csv", dcsv, res);
    }
    if (wants(c, "json")) {
      write_file(dir / "fields.json", fields.dump(1) + "\n", res);
      json dj{{"t", diag.times},         {"arc_length", diag.arc_length},
              {"F_min", diag.F_min},     {"F_max", diag.F_max},
              {"psi_min", diag.psi_min}, {"psi_max", diag.psi_max},
              {"energy", diag.energy}};
      write_file(dir / "diagnostics.json", dj.dump(1) + "\n", res);
    }
    if (wants(c, "svg") && wants(c, "csv")) detail::write_plots(c, dir, res);

    std::ostringstream msg;
    msg << "solved " << c.grid.times.size() << " times x " << r.size() << " radii";
    res.message = msg.str();
    return res;
  } catch (...) {
    return detail::fail_from_current_exception(std::move(res));
  }
}

RunResult run_verify(const RunConfig& c, const RunOptions& o) {
  RunResult res;
  try {
    const ExactSolution sol = ExactSolution::create(build_initial(c), solver_options(c));
    append_warnings(res, sol.validation().warnings);
    const double h = c.tolerances.residual_h, tau = c.tolerances.residual_tau;
    ResidualStudySpec spec;
    spec.t = verify_time(c);
    spec.r_min = c.verify.r_min;
    spec.r_max = c.verify.r_max;
    spec.h = {4 * h, 2 * h, h};
    spec.tau = {4 * tau, 2 * tau, tau};
    spec.threads = o.threads;
    if (!(spec.t - 4 * tau > 0.0)) {
      throw ConfigurationError("verify: time must exceed 4 residual_tau");
    }
    if (!(spec.r_min - 8 * h > 0.0)) {
      throw ConfigurationError("verify: r_min must exceed 8 residual_h");
    }
    ResidualStudy st = residual_study(sol, spec);

    json eqs = json::object();
    bool orders_ok = true;
    std::string order_detail;
    const auto& names = residual_equations();
    for (std::size_t e = 0; e < names.size(); ++e) {
      const ResidualReport& fin = st.levels.back()[e];
      const double ord = st.orders[e].empty() ? NAN : st.orders[e].back();
      json orders = json::array();
      for (double v : st.orders[e]) orders.push_back(num(v));
      json levels = json::array();
      for (const auto& lvl : st.levels) {
        levels.push_back({{"h", lvl[e].h}, {"tau", lvl[e].tau}, {"max_norm", lvl[e].max_norm},
                          {"l2_norm", lvl[e].l2_norm}});
      }
      eqs[names[e]] = {{"max_norm", fin.max_norm}, {"l2_norm", fin.l2_norm},
                       {"h", fin.h},               {"tau", fin.tau},
                       {"order_estimate", num(ord)}, {"orders", orders},
                       {"worst_r", fin.worst_r},   {"boundary_max", fin.boundary_max},
                       {"levels", levels}};
      // NaN orders come from residuals at round-off level on both levels.
      const bool exact = std::isnan(ord) && fin.max_norm <= kResidualZero;
      if (!exact && !(ord >= 1.7)) {
        orders_ok = false;
        order_detail += " " + names[e] + "=" + format_double(ord);
      }
    }

    if (o.inject_error) {
      FieldSnapshot& s = st.finest;
      s.d[s.d.size() / 2][0] += 1e-6;
    }
    std::vector<MonitorResult> mons;
    mons.push_back(monitor_unit_norm(st.finest));
    mons.push_back(monitor_psi_range(st.finest, sol.params()));
    const std::vector<double> r = radial_grid(c.grid);
    for (double t : c.grid.times) {
      const FieldSnapshot s = snapshot(sol, t, r, {FieldMask{}, o.threads});
      for (MonitorResult m : {monitor_unit_norm(s), monitor_psi_range(s, sol.params())}) {
        if (!m.passed) m.detail = "t = " + format_double(t) + ": " + m.detail;
        mons.push_back(std::move(m));
      }
    }
    const Diagnostics diag = compute_diagnostics(sol, c.grid.times, r, o.threads);
    mons.push_back(monitor_f_nesting(diag));
    mons.push_back(monitor_arc_length(diag));

    json mj = json::array();
    const MonitorResult* breach = nullptr;
    for (const auto& m : mons) {
      mj.push_back({{"name", m.name}, {"passed", m.passed}, {"measured", num(m.measured)},
                    {"detail", m.detail}});
      if (!m.passed && breach == nullptr) breach = &m;
    }
    json root{{"t", spec.t},          {"r_min", spec.r_min},  {"r_max", spec.r_max},
              {"equations", eqs},     {"monitors", mj},       {"injected_error", o.inject_error}};
    write_file(out_dir(c, o) / "residuals.json", root.dump(2) + "\n", res);

    if (breach != nullptr) {
      res.exit_code = kExitInvariant;
      res.message = "invariant breach: " + breach->name + " (" + breach->detail + ")";
    } else if (!orders_ok) {
      res.exit_code = kExitNumerical;
      res.message = "observed order below 1.7:" + order_detail;
    } else {
      res.message = "all residual orders >= 1.7 and all monitors passed";
    }
    return res;
  } catch (...) {
    return detail::fail_from_current_exception(std::move(res));
  }
}

RunResult run_counterexample(const RunConfig& c, const RunOptions& o) {
  RunResult res;
  try {
    const CounterexampleSection ce = c.counterexample.value_or(CounterexampleSection{});
    const StaircaseSchedule sched = StaircaseSchedule::power_law(ce.c, ce.p, ce.cycles);
    const RadialProfile v0 = build_v0(sched);
    const ProbeTimes times = ProbeTimes::from_schedule(sched, ce.probe_count);
    HeatOptions heat;
    heat.abs_tol = c.tolerances.quadrature_abs;
    const OriginSeries series = origin_series(v0, times, heat);

    std::string csv = "k,t_peak,v_peak,t_off,v_off\n";
    json rows = json::array();
    bool oscillates = true;
    for (int k = 0; k < ce.probe_count; ++k) {
      const std::size_t i = static_cast<std::size_t>(k);
      const double vp = series.peak[i], vo = series.off[i];
      csv += std::to_string(k) + ',' + format_double(std::exp(times.log_peak[i])) + ',' +
             format_double(vp) + ',' + format_double(std::exp(times.log_off[i])) + ',' +
             format_double(vo) + '\n';
      rows.push_back({{"k", k},
                      {"log_t_peak", times.log_peak[i]},
                      {"v_peak", vp},
                      {"log_t_off", times.log_off[i]},
                      {"v_off", vo}});
      if (!(vp >= 0.9 && vo <= 0.1)) oscillates = false;
    }
    const std::filesystem::path dir = out_dir(c, o);
    write_file(dir / "oscillation.csv", csv, res);
    if (wants(c, "json")) {
      json root{{"c", ce.c},
                {"p", ce.p},
                {"cycles", ce.cycles},
                {"dirichlet_energy", dirichlet_energy(sched)},
                {"probes", rows}};
      write_file(dir / "oscillation.json", root.dump(2) + "\n", res);
    }
    if (oscillates) {
      res.message = "v(t_k, 0) >= 0.9 and v(t~_k, 0) <= 0.1 for every probe";
    } else {
      res.exit_code = kExitNegative;
      res.message = "no oscillation: some probe has v(t_k, 0) < 0.9 or v(t~_k, 0) > 0.1";
    }
    return res;
  } catch (...) {
    return detail::fail_from_current_exception(std::move(res));
  }
}

RunResult run_plot(const RunConfig& c, const RunOptions& o) {
  RunResult res;
  try {
    detail::write_plots(c, out_dir(c, o), res);
    res.message = "wrote curve.svg and diagnostics.svg";
    return res;
  } catch (...) {
    return detail::fail_from_current_exception(std::move(res));
  }
}

}  // namespace lcexact::cli
