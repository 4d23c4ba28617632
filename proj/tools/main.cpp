// Copyright 2026 The gsmve Authors
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

#include <CLI11.hpp>

#include "commands.hpp"
#include "gsmve/protocol_io.hpp"

int main(int argc, char** argv) {
  using namespace gsmve::cli;

  CLI::App app{"Gate-set gauge and mean-variation-error toolkit"};
  app.set_version_flag("--version", gsmve::library_version());
  app.require_subcommand(1);

  FigureOptions fig;
  auto* figure = app.add_subcommand("figure", "Simulate MVE curves for depolarizing and unitary errors on Cl_1");
  figure->add_option("--out", fig.outdir, "Output directory")->capture_default_str();
  figure->add_option("--seed", fig.seed, "Master seed")->capture_default_str();
  figure->add_option("--r", fig.r, "Average gate infidelity of the error channel")->capture_default_str();
  figure->add_option("--circuits", fig.n_circuits, "Random circuits per length")->capture_default_str();
  figure->add_option("--ms", fig.ms, "Lengths, a..b:step or comma list")->capture_default_str();
  figure->add_option("--small-ms", fig.small_ms, "Lengths of the short-circuit series")->capture_default_str();

  GaugeDemoOptions demo;
  std::string demo_json;
  auto* gauge = app.add_subcommand("gauge-demo", "Amplitude-damping gate-set under the diag(1,q,q,q) gauge family");
  gauge->add_option("--eps1", demo.eps1, "State polarization")->capture_default_str();
  gauge->add_option("--eps2", demo.eps2, "Readout signal-to-noise")->capture_default_str();
  gauge->add_option("--gamma", demo.gamma, "Damping strength")->capture_default_str();
  gauge->add_option("--q", demo.q_list, "Gauge parameters")->delimiter(',')->capture_default_str();
  gauge->add_option("--seed", demo.seed, "Seed for the random circuits")->capture_default_str();
  gauge->add_option("--circuits", demo.n_circuits, "Random circuits for the probability check")->capture_default_str();
  gauge->add_option("--json", demo_json, "Also write a JSON report here");

  EstimateOptions est;
  std::string est_noisy, est_ms;
  std::int64_t est_shots = 0;
  std::size_t est_circuits = 0;
  std::uint64_t est_seed = 0;
  auto* estimate = app.add_subcommand("estimate", "Estimate an MVE curve from a protocol configuration");
  estimate->add_option("--config", est.config, "Protocol configuration (JSON)")->required()->check(CLI::ExistingFile);
  estimate->add_option("--ideal", est.ideal, "Ideal gate-set (JSON)")->required()->check(CLI::ExistingFile);
  estimate->add_option("--noisy", est_noisy, "Noisy gate-set (JSON); default applies the config's error model");
  estimate->add_option("--out", est.out, "Output CSV")->required();
  auto* ms_opt = estimate->add_option("--ms", est_ms, "Override the lengths");
  auto* circ_opt = estimate->add_option("--circuits", est_circuits, "Override circuits per length");
  auto* seed_opt = estimate->add_option("--seed", est_seed, "Override the seed");
  auto* shots_opt = estimate->add_option("--shots", est_shots, "Shots per circuit");
  auto* exact_flag = estimate->add_flag("--exact", est.exact, "Use exact probabilities");
  shots_opt->excludes(exact_flag);
  estimate->add_flag("--skip-validation", est.skip_validation, "Accept gate-sets outside the canonical constraints");

  std::filesystem::path validate_path;
  auto* validate = app.add_subcommand("validate", "Check a gate-set file against the canonical constraints");
  validate->add_option("gateset", validate_path, "Gate-set (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*figure) return cmd_figure(fig, std::cout, std::cerr);
  if (*gauge) {
    if (!demo_json.empty()) demo.json_out = demo_json;
    return cmd_gauge_demo(demo, std::cout, std::cerr);
  }
  if (*estimate) {
    if (!est_noisy.empty()) est.noisy = est_noisy;
    if (*ms_opt) est.ms = est_ms;
    if (*circ_opt) est.n_circuits = est_circuits;
    if (*seed_opt) est.seed = est_seed;
    if (*shots_opt) est.shots = est_shots;
    return cmd_estimate(est, std::cout, std::cerr);
  }
  return cmd_validate(validate_path, std::cout, std::cerr);
}
