// Copyright 2026 The ssrdual Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace ssrdual::cli;

  CLI::App app{"Reference-frame activation of dual entanglement under superselection"};
  app.require_subcommand(1);

  double demo_p = 0.2;
  auto* demo = app.add_subcommand("demo", "Run the four duality checks");
  demo->add_option("--p", demo_p, "Werner reference-frame parameter");

  SweepConfig sweep_cfg;
  std::string out_path;
  std::string format = "csv";
  bool no_timestamp = false;
  auto* sweep = app.add_subcommand("sweep", "Tabulate PPT and SIV quantities over p");
  sweep->add_option("--p-min", sweep_cfg.p_min, "Lowest p")->capture_default_str();
  sweep->add_option("--p-max", sweep_cfg.p_max, "Highest p")->capture_default_str();
  sweep->add_option("--steps", sweep_cfg.steps, "Number of grid points")->capture_default_str();
  sweep->add_option("--out", out_path, "Output file")->required();
  sweep->add_option("--format", format, "csv or json")->capture_default_str();
  sweep->add_option("--seed", sweep_cfg.siv.seed, "Minimizer seed")->capture_default_str();
  sweep->add_option("--tol", sweep_cfg.siv.tol, "Minimizer step tolerance")->capture_default_str();
  sweep->add_flag("--no-timestamp", no_timestamp, "Omit the manifest timestamp");

  double threshold_tol = 1e-6;
  auto* threshold = app.add_subcommand("threshold", "Werner PPT threshold and SIV bound");
  threshold->add_option("--tol", threshold_tol, "Bisection tolerance")->capture_default_str();

  std::string state_name;
  bool dump_matrix = false;
  auto* tw = app.add_subcommand("twirl", "Show the effective state and its charge sectors");
  tw->add_option("state", state_name, "two-copies | rho-p:<p> | pdc-dist-pol | pdc-dist-mom | hyper")
      ->required();
  tw->add_flag("--dump", dump_matrix, "Print the full matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*demo) return cmd_demo(demo_p, std::cout);
    if (*sweep) {
      sweep_cfg.timestamp = !no_timestamp;
      return cmd_sweep(sweep_cfg, out_path, format, std::cout);
    }
    if (*threshold) return cmd_threshold(threshold_tol, std::cout);
    if (*tw) return cmd_twirl(state_name, dump_matrix, std::cout);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitUsage;
}
