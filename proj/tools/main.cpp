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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lcexact/cli_io.hpp"
#include "lcexact/error.hpp"

namespace {

using lcexact::cli::RunConfig;
using lcexact::cli::RunOptions;
using lcexact::cli::RunResult;

struct Common {
  std::string config;
  RunOptions run;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config, "run configuration (JSON)")->required();
  sub->add_option("--out", c.run.out_dir, "output directory (overrides outputs.directory)");
  sub->add_option("--threads", c.run.threads, "worker threads for field evaluation")
      ->check(CLI::Range(1, 1024));
}

int report(const RunResult& r) {
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& f : r.files) std::cout << "wrote " << f << "\n";
  if (!r.message.empty()) (r.exit_code == 0 ? std::cout : std::cerr) << r.message << "\n";
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact radially symmetric liquid-crystal flows: solve, verify, plot"};
  app.require_subcommand(1);
  Common solve, verify, counter, plot;
  CLI::App* s_solve = app.add_subcommand("solve", "evaluate fields and diagnostics");
  CLI::App* s_verify = app.add_subcommand("verify", "residual study and invariant monitors");
  CLI::App* s_counter =
      app.add_subcommand("counterexample", "heat flow at the origin for a staircase datum");
  CLI::App* s_plot = app.add_subcommand("plot", "render SVG figures from solve outputs");
  add_common(s_solve, solve);
  add_common(s_verify, verify);
  add_common(s_counter, counter);
  add_common(s_plot, plot);
  s_verify->add_flag("--inject-error", verify.run.inject_error,
                     "perturb the director at one node before monitoring");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lcexact::cli::kExitConfig;
  }

  const auto run = [](const Common& c, auto fn) {
    RunConfig cfg;
    try {
      cfg = lcexact::cli::load_config(c.config);
    } catch (const lcexact::Error& e) {
      std::cerr << e.what() << "\n";
      return static_cast<int>(lcexact::cli::kExitConfig);
    }
    return report(fn(cfg, c.run));
  };
  if (*s_solve) return run(solve, lcexact::cli::run_solve);
  if (*s_verify) return run(verify, lcexact::cli::run_verify);
  if (*s_counter) return run(counter, lcexact::cli::run_counterexample);
  return run(plot, lcexact::cli::run_plot);
}
