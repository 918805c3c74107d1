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

// Run configuration, profile families and the batch subcommands.
//
// Exit codes: 0 ok, 2 configuration or validation error, 3 numerical
// failure, 4 invariant breach, 5 expected negative result.

#ifndef LCEXACT_CLI_IO_HPP
#define LCEXACT_CLI_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcexact/exact_solver.hpp"

namespace lcexact::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitNumerical = 3,
  kExitInvariant = 4,
  kExitNegative = 5,
};

/// A radial profile by family name and parameters.
///
///   constant        value
///   gaussian-bump   center, amplitude, sigma
///   tanh-step       inner, outer, radius, width
///   swirl-gaussian  amplitude, sigma          (A r exp(-r^2/sigma^2))
///   staircase       c, p, cycles, low, high   (low + (high - low) v0)
///   table           r[], values[]
struct ProfileSpec {
  std::string family = "constant";
  std::map<std::string, double> params{{"value", 0.0}};
  std::vector<double> table_r;
  std::vector<double> table_values;

  bool operator==(const ProfileSpec&) const = default;
};

struct ModelSection {
  double beta = 2.0;
  double delta1 = 0.9;
  bool operator==(const ModelSection&) const = default;
};

struct InitialSection {
  ProfileSpec u0;
  ProfileSpec psi0;
  std::optional<double> far_field_psi;
  bool operator==(const InitialSection&) const = default;
};

struct GridSection {
  double r_max = 4.0;
  int n_r = 64;
  std::vector<double> times{0.0, 0.1, 1.0};
  bool operator==(const GridSection&) const = default;
};

struct ToleranceSection {
  double quadrature_abs = 1e-10;
  /// Finest spacing of the residual study; the levels are 4h, 2h, h.
  double residual_h = 1e-3;
  double residual_tau = 1e-3;
  bool operator==(const ToleranceSection&) const = default;
};

struct OutputSection {
  std::string directory = "out";
  std::vector<std::string> formats{"csv", "json", "svg"};
  bool operator==(const OutputSection&) const = default;
};

struct VerifySection {
  /// Defaults to the first positive time of the grid.
  std::optional<double> time;
  double r_min = 0.2;
  double r_max = 2.2;
  bool operator==(const VerifySection&) const = default;
};

struct CounterexampleSection {
  double c = 0.05;
  double p = 3.0;
  int cycles = 3;
  int probe_count = 3;
  bool operator==(const CounterexampleSection&) const = default;
};

struct RunConfig {
  ModelSection model;
  InitialSection initial;
  GridSection grid;
  ToleranceSection tolerances;
  OutputSection outputs;
  VerifySection verify;
  std::optional<CounterexampleSection> counterexample;

  bool operator==(const RunConfig&) const = default;
};

/// Strict JSON parsing: unknown or duplicate keys, wrong types and
/// constraint violations are reported together, one "path: reason" line
/// each; syntax errors carry line and column. Throws ConfigurationError.
RunConfig parse_config(std::string_view text);

/// Reads and parses a file; unreadable files raise ConfigurationError.
RunConfig load_config(const std::string& path);

/// Canonical JSON text; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

RadialProfile build_profile(const ProfileSpec& spec);
InitialData build_initial(const RunConfig& config);

/// r_j = j r_max / (n_r - 1).
std::vector<double> radial_grid(const GridSection& grid);

struct RunOptions {
  /// Overrides outputs.directory when non-empty.
  std::string out_dir;
  int threads = 1;
  /// verify only: perturbs the director at one node before the monitors run.
  bool inject_error = false;
};

struct RunResult {
  int exit_code = kExitOk;
  std::vector<std::string> files;
  /// Human-readable summary or error report.
  std::string message;
  std::vector<std::string> warnings;
};

/// fields.csv, diagnostics.csv (csv), fields.json, diagnostics.json (json);
/// with svg and csv both requested the plots are written as well.
RunResult run_solve(const RunConfig& config, const RunOptions& opts = {});

/// residuals.json with one entry per equation and the monitor results.
RunResult run_verify(const RunConfig& config, const RunOptions& opts = {});

/// oscillation.csv (and oscillation.json with json).
RunResult run_counterexample(const RunConfig& config, const RunOptions& opts = {});

/// curve.svg and diagnostics.svg from the solve outputs in the directory.
RunResult run_plot(const RunConfig& config, const RunOptions& opts = {});

/// printf "%.17g"; re-parses to the same double.
std::string format_double(double v);

}  // namespace lcexact::cli

#endif  // LCEXACT_CLI_IO_HPP
