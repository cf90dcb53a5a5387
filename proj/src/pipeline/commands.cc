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

#include "src/pipeline/commands.h"

#include <filesystem>
#include <map>
#include <memory>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "src/common/parallel.h"
#include "src/common/seeds.h"
#include "src/common/status_macros.h"
#include "src/mip/instance_io.h"
#include "src/training/labels.h"
#include "src/training/sampling.h"

namespace cutrank {
namespace {

namespace fs = std::filesystem;

absl::Status MakeDirectory(const std::string& path) {
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec) {
    return absl::InternalError(absl::StrCat("cannot create ", path, ": ", ec.message()));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<MipInstance>> ReadSplit(const ExperimentConfig& config,
                                                   const std::string& split, int count) {
  const ArtifactPaths paths(config.out_dir);
  std::vector<MipInstance> instances;
  for (int i = 0; i < count; ++i) {
    absl::StatusOr<MipInstance> inst = ReadInstance(paths.Instance(split, i));
    if (!inst.ok()) {
      return absl::Status(inst.status().code(),
                          absl::StrCat(paths.Instance(split, i), ": ", inst.status().message(),
                                       " (run 'generate' first)"));
    }
    instances.push_back(*std::move(inst));
  }
  return instances;
}

absl::StatusOr<std::shared_ptr<const MlpParams>> LoadModel(
    const std::optional<std::string>& path) {
  if (!path.has_value()) return std::shared_ptr<const MlpParams>();
  ASSIGN_OR_RETURN(MlpParams params, ReadModel(*path));
  return std::make_shared<const MlpParams>(std::move(params));
}

}  // namespace

std::string InstanceName(const std::string& split, int index) {
  return absl::StrFormat("%s_%04d", split, index);
}

std::string ArtifactPaths::InstanceDir() const { return root + "/instances"; }
std::string ArtifactPaths::Instance(const std::string& split, int index) const {
  return absl::StrCat(InstanceDir(), "/", InstanceName(split, index), ".mipr");
}
std::string ArtifactPaths::Manifest() const { return InstanceDir() + "/manifest.csv"; }
std::string ArtifactPaths::DatasetDir() const { return root + "/dataset"; }
std::string ArtifactPaths::Dataset(int index, int round) const {
  return absl::StrCat(DatasetDir(), "/", InstanceName("train", index), "_r", round, ".crds");
}
std::string ArtifactPaths::CollectLog(int round) const {
  return absl::StrCat(DatasetDir(), "/collect_log_r", round, ".csv");
}
std::string ArtifactPaths::Model() const { return root + "/model.crnk"; }
std::string ArtifactPaths::TrainLog() const { return root + "/train_log.csv"; }
std::string ArtifactPaths::Metrics() const { return root + "/metrics.csv"; }
std::string ArtifactPaths::Summary() const { return root + "/summary.csv"; }

absl::StatusOr<GenerateSummary> CmdGenerate(const ExperimentConfig& config) {
  RETURN_IF_ERROR(config.Validate());
  const ArtifactPaths paths(config.out_dir);
  RETURN_IF_ERROR(MakeDirectory(paths.InstanceDir()));
  std::string manifest = "split,index,file,seed,family,rows,cols\n";
  GenerateSummary summary;
  for (const auto& [split, count, seed_start] :
       {std::tuple<std::string, int, uint64_t>{"train", config.train_count,
                                               config.train_seed_start},
        std::tuple<std::string, int, uint64_t>{"test", config.test_count,
                                               config.test_seed_start}}) {
    for (int i = 0; i < count; ++i) {
      const uint64_t seed = seed_start + static_cast<uint64_t>(i);
      absl::StatusOr<MipInstance> inst = GenerateInstance(config, seed);
      if (!inst.ok()) {
        return absl::Status(inst.status().code(),
                            absl::StrCat("generating ", split, " instance ", i, " (seed ",
                                         seed, "): ", inst.status().message()));
      }
      RETURN_IF_ERROR(WriteInstance(*inst, paths.Instance(split, i)));
      absl::StrAppend(&manifest, split, ",", i, ",", InstanceName(split, i), ".mipr,", seed,
                      ",", FamilyName(inst->family), ",", inst->num_rows(), ",",
                      inst->num_variables(), "\n");
      if (split == "train") {
        ++summary.train_written;
      } else {
        ++summary.test_written;
      }
    }
  }
  RETURN_IF_ERROR(WriteTextFile(paths.Manifest(), manifest));
  return summary;
}

absl::StatusOr<CollectSummary> CmdCollect(const ExperimentConfig& config,
                                          const std::optional<std::string>& model_path,
                                          int round) {
  RETURN_IF_ERROR(config.Validate());
  if (round < 0) return absl::InvalidArgumentError("round must be nonnegative");
  if (round > 0 && !model_path.has_value()) {
    return absl::InvalidArgumentError("active rounds need a model");
  }
  ASSIGN_OR_RETURN(std::shared_ptr<const MlpParams> model, LoadModel(model_path));
  ASSIGN_OR_RETURN(std::vector<MipInstance> instances,
                   ReadSplit(config, "train", config.train_count));
  const ArtifactPaths paths(config.out_dir);
  RETURN_IF_ERROR(MakeDirectory(paths.DatasetDir()));

  TrainConfig train = config.train;
  if (round > 0) train.seed = MixSeed(config.train.seed, static_cast<uint64_t>(round));
  const BncConfig solver = config.Solver();
  std::vector<absl::StatusOr<InstanceSamples>> results(instances.size());
  ParallelFor(static_cast<int>(instances.size()), config.workers, [&](int i) {
    const std::string id = InstanceName("train", i);
    results[i] = model != nullptr
                     ? CollectActive(instances[i], id, *model, train, solver)
                     : CollectRandom(instances[i], id, train, solver);
    if (results[i].ok()) AssignLabels(results[i]->samples, train.lambda_percent);
  });

  CollectSummary summary;
  std::string log = "instance,status,samples,dropped,message\n";
  for (size_t i = 0; i < results.size(); ++i) {
    const std::string id = InstanceName("train", static_cast<int>(i));
    const std::string file = paths.Dataset(static_cast<int>(i), round);
    if (!results[i].ok()) {
      // Skipped instances leave no dataset file behind.
      std::error_code ec;
      fs::remove(file, ec);
      ++summary.instances_skipped;
      std::string message(results[i].status().message());
      for (char& c : message) {
        if (c == ',' || c == '\n') c = ';';
      }
      absl::StrAppend(&log, id, ",skipped,0,0,", message, "\n");
      continue;
    }
    const InstanceSamples& s = *results[i];
    RETURN_IF_ERROR(WriteInstanceSamples(s, file));
    ++summary.instances_collected;
    summary.samples += static_cast<int>(s.samples.size());
    summary.dropped += s.dropped;
    absl::StrAppend(&log, id, ",collected,", s.samples.size(), ",", s.dropped, ",\n");
  }
  RETURN_IF_ERROR(WriteTextFile(paths.CollectLog(round), log));
  return summary;
}

absl::StatusOr<TrainResult> CmdTrain(const ExperimentConfig& config) {
  RETURN_IF_ERROR(config.Validate());
  const ArtifactPaths paths(config.out_dir);
  Dataset data;
  for (int i = 0; i < config.train_count; ++i) {
    InstanceSamples merged;
    bool found = false;
    for (int round = 0;; ++round) {
      const std::string file = paths.Dataset(i, round);
      if (!fs::exists(file)) {
        // Rounds may skip an instance; stop at the first missing round log.
        if (!fs::exists(paths.CollectLog(round))) break;
        continue;
      }
      ASSIGN_OR_RETURN(InstanceSamples s, ReadInstanceSamples(file));
      if (!found) {
        merged = std::move(s);
        found = true;
        continue;
      }
      // Bags index the pool, which is a pure function of the instance.
      if (s.pool.cuts != merged.pool.cuts) {
        return absl::DataLossError(absl::StrCat(file, ": pool differs from round 0"));
      }
      merged.dropped += s.dropped;
      for (TrainingSample& t : s.samples) merged.samples.push_back(std::move(t));
    }
    if (found) data.instances.push_back(std::move(merged));
  }
  if (data.num_samples() == 0) {
    return absl::FailedPreconditionError(
        absl::StrCat("no training samples under ", paths.DatasetDir(), " (run 'collect' first)"));
  }
  if (config.train.relabel_each_round) data.AssignAllLabels(config.train.lambda_percent);
  ASSIGN_OR_RETURN(std::vector<LabeledPoint> points, TrainingPoints(data));
  ASSIGN_OR_RETURN(TrainResult result, Train(points, config.train));
  RETURN_IF_ERROR(WriteModel(result.params, paths.Model()));
  RETURN_IF_ERROR(WriteTextFile(paths.TrainLog(), LossTraceCsv(result.trace)));
  return result;
}

absl::StatusOr<std::vector<PolicyEvaluation>> CmdEvaluate(
    const ExperimentConfig& config, const std::optional<std::string>& model_path) {
  RETURN_IF_ERROR(config.Validate());
  ASSIGN_OR_RETURN(std::shared_ptr<const MlpParams> model, LoadModel(model_path));
  ASSIGN_OR_RETURN(std::vector<MipInstance> instances,
                   ReadSplit(config, "test", config.test_count));
  std::vector<std::string> names;
  for (int i = 0; i < config.test_count; ++i) names.push_back(InstanceName("test", i));

  const BncConfig solver = config.Solver();
  ASSIGN_OR_RETURN(std::vector<SolveReport> baselines,
                   SolveBaselines(instances, solver, config.workers));
  std::vector<PolicyEvaluation> evaluations;
  ASSIGN_OR_RETURN(PolicyEvaluation none,
                   MetricsFromReports(names, PolicyKindName(PolicyKind::kNone), baselines,
                                      baselines, solver.feedback_mode));
  evaluations.push_back(std::move(none));
  for (const SelectionPolicy& policy : ComparisonPolicies(config.random_policy_seed, model)) {
    BncConfig with = solver;
    with.policy = policy;
    ASSIGN_OR_RETURN(PolicyEvaluation e,
                     EvaluatePolicy(names, instances, with, baselines, config.workers));
    evaluations.push_back(std::move(e));
  }

  const ArtifactPaths paths(config.out_dir);
  RETURN_IF_ERROR(MakeDirectory(paths.root));
  std::string metrics = MetricsCsvHeader();
  std::string summary = SummaryCsvHeader();
  for (const PolicyEvaluation& e : evaluations) {
    metrics += MetricsCsvRows(e, config.report_wall_time);
    summary += SummaryCsvRow(e);
  }
  RETURN_IF_ERROR(WriteTextFile(paths.Metrics(), metrics));
  RETURN_IF_ERROR(WriteTextFile(paths.Summary(), summary));
  return evaluations;
}

std::string SolveCsvHeader() {
  return "instance,policy,status,objective,nodes,simplex_iters,wall_time,cuts_generated,"
         "cuts_added\n";
}

std::string SolveCsvRow(const std::string& instance, const std::string& policy,
                        const SolveReport& r) {
  return absl::StrCat(instance, ",", policy, ",", SolveStatusName(r.status), ",",
                      FormatDouble(r.objective), ",", r.nodes_visited, ",",
                      r.simplex_iterations_total, ",", FormatDouble(r.wall_time), ",",
                      r.cuts_generated, ",", r.cuts_added, "\n");
}

absl::StatusOr<SolveReport> CmdSolve(const std::string& instance_path,
                                     const std::string& policy_name,
                                     const std::optional<std::string>& model_path,
                                     const ExperimentConfig& config) {
  ASSIGN_OR_RETURN(MipInstance instance, ReadInstance(instance_path));
  ASSIGN_OR_RETURN(PolicyKind kind, ParsePolicyKind(policy_name));
  BncConfig solver = config.Solver();
  switch (kind) {
    case PolicyKind::kNone:
      break;
    case PolicyKind::kRandom:
      solver.policy = SelectionPolicy::Random(config.random_policy_seed);
      break;
    case PolicyKind::kCutRanking: {
      if (!model_path.has_value()) {
        return absl::InvalidArgumentError("cut_ranking needs --model");
      }
      ASSIGN_OR_RETURN(std::shared_ptr<const MlpParams> model, LoadModel(model_path));
      solver.policy = SelectionPolicy::CutRanking(std::move(model));
      break;
    }
    case PolicyKind::kFixed:
      return absl::InvalidArgumentError("the fixed policy is internal to collection");
    default:
      solver.policy = SelectionPolicy::Heuristic(kind);
  }
  return SolveMip(instance, solver);
}

}  // namespace cutrank
