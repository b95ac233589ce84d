// Copyright 2026 The modspace Authors
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

#include <CLI11.hpp>

#include <iostream>

#include "modspace/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = modspace::cli;
  CLI::App app{"Finite diagnostics for modular spaces"};
  app.require_subcommand(1);

  cli::RunOptions run_opts;
  std::uint64_t run_seed = 0;
  std::string experiment;
  auto* run = app.add_subcommand("run", "Run the experiment described by a config file");
  run->add_option("--config", run_opts.config, "Experiment config (JSON)")->required()->check(CLI::ExistingFile);
  run->add_option("--out", run_opts.out, "Output directory")->required();
  auto* seed_opt = run->add_option("--seed", run_seed, "Override the config seed");
  auto* exp_opt = run->add_option("--experiment", experiment, "Override the experiment kind")
                      ->check(CLI::IsMember(cli::experiment_kinds()));
  run->add_flag("--quiet", run_opts.quiet, "Suppress the summary line");

  cli::GenerateOptions gen_opts;
  auto* gen = app.add_subcommand("generate", "Write a random or structured fixture");
  gen->add_option("kind", gen_opts.kind, "metric_space | rademacher | lipschitz")
      ->required()
      ->check(CLI::IsMember({"metric_space", "rademacher", "lipschitz"}));
  gen->add_option("--seed", gen_opts.seed, "RNG seed");
  gen->add_option("--out", gen_opts.out, "Output file")->required();
  gen->add_option("--n", gen_opts.n, "Points, or cells for function families");
  gen->add_option("--m", gen_opts.m, "Family size");
  gen->add_option("--side", gen_opts.side, "Square side for metric_space");
  gen->add_option("--min-separation", gen_opts.min_separation, "Minimum pairwise distance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitUsage;
  }

  if (*run) {
    if (*seed_opt) run_opts.seed = run_seed;
    if (*exp_opt) run_opts.experiment = experiment;
    return cli::run(run_opts, std::cout, std::cerr);
  }
  return cli::generate(gen_opts, std::cout, std::cerr);
}
