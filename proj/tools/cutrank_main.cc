// Copyright 2026 the CutRank Authors
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

// Command-line driver: generate | collect | train | evaluate | solve.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "src/mip/instance_io.h"
#include "src/pipeline/commands.h"
#include "src/pipeline/experiment_config.h"

namespace {

using cutrank::ExperimentConfig;

int Fail(const absl::Status& status) {
  std::cerr << "error: " << status << "\n";
  return 1;
}

std::optional<std::string> Optional(const std::string& value) {
  if (value.empty()) return std::nullopt;
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Learned cut selection for mixed-integer programs"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  int workers = 0;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-c,--config", config_path, "Experiment config (key = value)");
    cmd->add_option("-o,--out", out_dir, "Override experiment.out_dir");
    cmd->add_option("-j,--workers", workers, "Override experiment.workers");
  };

  CLI::App* generate = app.add_subcommand("generate", "Write train and test instances");
  add_common(generate);

  std::string model_path;
  int round = -1;
  CLI::App* collect = app.add_subcommand("collect", "Sample bags and their feedback");
  add_common(collect);
  collect->add_option("-m,--model", model_path, "Model for epsilon-greedy sampling");
  collect->add_option("-r,--round", round,
                      "Collection round (default 0, or 1 when a model is given)");

  CLI::App* train = app.add_subcommand("train", "Train the scoring model");
  add_common(train);

  CLI::App* evaluate = app.add_subcommand("evaluate", "Compare policies on test instances");
  add_common(evaluate);
  evaluate->add_option("-m,--model", model_path, "Trained model (adds cut_ranking)");

  std::string instance_path;
  std::string policy = "none";
  CLI::App* solve = app.add_subcommand("solve", "Solve one instance file");
  add_common(solve);
  solve->add_option("instance", instance_path, "Instance file (MIPR1)")->required();
  solve->add_option("-p,--policy", policy,
                    "none|random|violation|norm_violation|distance|parallelism|cut_ranking");
  solve->add_option("-m,--model", model_path, "Model for cut_ranking");
  bool print_solution = false;
  solve->add_flag("--print-solution", print_solution, "Also print the incumbent");

  CLI11_PARSE(app, argc, argv);

  ExperimentConfig config;
  if (!config_path.empty()) {
    auto parsed = cutrank::ReadExperimentConfig(config_path);
    if (!parsed.ok()) return Fail(parsed.status());
    config = *std::move(parsed);
  }
  if (!out_dir.empty()) config.out_dir = out_dir;
  if (workers > 0) config.workers = workers;
  if (absl::Status s = config.Validate(); !s.ok()) return Fail(s);

  if (generate->parsed()) {
    auto r = cutrank::CmdGenerate(config);
    if (!r.ok()) return Fail(r.status());
    std::cout << "wrote " << r->train_written << " train and " << r->test_written
              << " test instances to " << config.out_dir << "/instances\n";
  } else if (collect->parsed()) {
    if (round < 0) round = model_path.empty() ? 0 : 1;
    auto r = cutrank::CmdCollect(config, Optional(model_path), round);
    if (!r.ok()) return Fail(r.status());
    std::cout << "round " << round << ": " << r->samples << " samples from "
              << r->instances_collected << " instances (" << r->instances_skipped
              << " skipped, " << r->dropped << " bags dropped)\n";
  } else if (train->parsed()) {
    auto r = cutrank::CmdTrain(config);
    if (!r.ok()) return Fail(r.status());
    const auto& last = r->trace.empty() ? cutrank::EpochLoss{} : r->trace.back();
    std::cout << "trained " << last.epoch << " epochs, final loss "
              << cutrank::FormatDouble(last.loss.total) << "; model at "
              << cutrank::ArtifactPaths(config.out_dir).Model() << "\n";
  } else if (evaluate->parsed()) {
    auto r = cutrank::CmdEvaluate(config, Optional(model_path));
    if (!r.ok()) return Fail(r.status());
    std::cout << cutrank::SummaryCsvHeader();
    for (const auto& e : *r) std::cout << cutrank::SummaryCsvRow(e);
  } else if (solve->parsed()) {
    auto r = cutrank::CmdSolve(instance_path, policy, Optional(model_path), config);
    if (!r.ok()) return Fail(r.status());
    std::cout << cutrank::SolveCsvHeader() << cutrank::SolveCsvRow(instance_path, policy, *r);
    if (print_solution) {
      for (size_t j = 0; j < r->incumbent.size(); ++j) {
        std::cout << "x" << j << " = " << cutrank::FormatDouble(r->incumbent[j]) << "\n";
      }
    }
  }
  return 0;
}
