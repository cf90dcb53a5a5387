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

#ifndef SRC_PIPELINE_EXPERIMENT_CONFIG_H_
#define SRC_PIPELINE_EXPERIMENT_CONFIG_H_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "src/bnc/branch_and_cut.h"
#include "src/mip/generators.h"
#include "src/mip/mip_instance.h"
#include "src/training/train_config.h"

namespace cutrank {

// One experiment: which instances, how to collect and train, how to solve.
//
// Text form is key = value lines grouped under [section] headers; '#' starts
// a comment. Sections: experiment, set_cover, knapsack, planning, general,
// train, solver. A key may also be written as section.key at top level.
struct ExperimentConfig {
  InstanceFamily family = InstanceFamily::kKnapsack;
  SetCoverParams set_cover;
  KnapsackParams knapsack;
  PlanningParams planning;
  GeneralMipParams general;

  int train_count = 100;
  int test_count = 30;
  uint64_t train_seed_start = 0;
  uint64_t test_seed_start = 1000000;

  TrainConfig train;

  int64_t node_limit = 1000000;
  double time_limit = 60.0;
  uint64_t random_policy_seed = 0;
  CutGenerationOptions cut_options;

  std::string out_dir = "cutrank_out";
  int workers = 1;
  // Write measured wall times into metrics files; off keeps them
  // reproducible.
  bool report_wall_time = false;

  absl::Status Validate() const;

  // Solver settings shared by collection and evaluation (policy unset).
  BncConfig Solver() const;
};

absl::StatusOr<ExperimentConfig> ParseExperimentConfig(const std::string& text);
absl::StatusOr<ExperimentConfig> ReadExperimentConfig(const std::string& path);
// Every key with its current value, in the text form above.
std::string FormatExperimentConfig(const ExperimentConfig& config);

// Instance of the configured family for one seed.
absl::StatusOr<MipInstance> GenerateInstance(const ExperimentConfig& config,
                                             uint64_t seed);

}  // namespace cutrank

#endif  // SRC_PIPELINE_EXPERIMENT_CONFIG_H_
