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

#ifndef SRC_PIPELINE_COMMANDS_H_
#define SRC_PIPELINE_COMMANDS_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "src/bnc/branch_and_cut.h"
#include "src/bnc/evaluation.h"
#include "src/pipeline/experiment_config.h"
#include "src/training/trainer.h"

namespace cutrank {

// Artifact layout under config.out_dir:
//
//   instances/train_NNNN.mipr, instances/test_NNNN.mipr, instances/manifest.csv
//   dataset/train_NNNN_rR.crds (round R), dataset/collect_log_rR.csv
//   model.crnk, train_log.csv
//   metrics.csv, summary.csv
struct ArtifactPaths {
  explicit ArtifactPaths(std::string out_dir) : root(std::move(out_dir)) {}

  std::string InstanceDir() const;
  std::string Instance(const std::string& split, int index) const;
  std::string Manifest() const;
  std::string DatasetDir() const;
  std::string Dataset(int index, int round) const;
  std::string CollectLog(int round) const;
  std::string Model() const;
  std::string TrainLog() const;
  std::string Metrics() const;
  std::string Summary() const;

  std::string root;
};

std::string InstanceName(const std::string& split, int index);

struct GenerateSummary {
  int train_written = 0;
  int test_written = 0;
};

// Writes every train and test instance plus a manifest
// (split,index,file,seed,family,rows,cols).
absl::StatusOr<GenerateSummary> CmdGenerate(const ExperimentConfig& config);

struct CollectSummary {
  int instances_collected = 0;
  int instances_skipped = 0;
  int samples = 0;
  int dropped = 0;
};

// Collects bags for every training instance. Round 0 samples at random; a
// later round needs a model and samples epsilon-greedily. Labels of each
// round are assigned within the round.
absl::StatusOr<CollectSummary> CmdCollect(const ExperimentConfig& config,
                                          const std::optional<std::string>& model_path,
                                          int round);

// Merges every collected round per instance (relabeling the merged samples
// when relabel_each_round is set), trains, and writes the model and log.
absl::StatusOr<TrainResult> CmdTrain(const ExperimentConfig& config);

// Solves the test instances without cuts and under each comparison policy,
// then writes metrics.csv (one row per instance and policy, the no-cut rows
// first) and summary.csv.
absl::StatusOr<std::vector<PolicyEvaluation>> CmdEvaluate(
    const ExperimentConfig& config, const std::optional<std::string>& model_path);

// Columns: instance,policy,status,objective,nodes,simplex_iters,wall_time,
// cuts_generated,cuts_added.
std::string SolveCsvHeader();
std::string SolveCsvRow(const std::string& instance, const std::string& policy,
                        const SolveReport& report);

absl::StatusOr<SolveReport> CmdSolve(const std::string& instance_path,
                                     const std::string& policy_name,
                                     const std::optional<std::string>& model_path,
                                     const ExperimentConfig& config);

}  // namespace cutrank

#endif  // SRC_PIPELINE_COMMANDS_H_
