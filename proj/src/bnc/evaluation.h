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

#ifndef SRC_BNC_EVALUATION_H_
#define SRC_BNC_EVALUATION_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "src/bnc/branch_and_cut.h"
#include "src/mip/mip_instance.h"

namespace cutrank {

// (base - with) / base, and 0 when base <= 0.
double ReductionRatio(double base, double with);

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;  // population
  int count = 0;
};

MeanStd Summarize(const std::vector<double>& values);

// One (instance, policy) row of the metrics table. Ratios are absent when
// either this solve or the baseline solve hit a limit.
struct MetricsRow {
  std::string instance;
  std::string policy;
  SolveStatus status = SolveStatus::kOptimal;
  int64_t nodes = 0;
  int64_t simplex_iters = 0;
  double wall_time = 0.0;
  std::optional<double> r_time;
  std::optional<double> r_nodes;
};

struct PolicyEvaluation {
  std::string policy;
  std::vector<MetricsRow> rows;
  MeanStd r_time;
  MeanStd r_nodes;
  int excluded = 0;
};

// Builds the table from finished solves. r_time uses the counter selected by
// mode. Lists must be parallel.
absl::StatusOr<PolicyEvaluation> MetricsFromReports(
    const std::vector<std::string>& names, const std::string& policy,
    const std::vector<SolveReport>& reports,
    const std::vector<SolveReport>& baselines, FeedbackMode mode);

// Solves every instance under config and compares with baseline no-cut
// solves of the same instances, fanning out over workers.
absl::StatusOr<PolicyEvaluation> EvaluatePolicy(
    const std::vector<std::string>& names,
    const std::vector<MipInstance>& instances, const BncConfig& config,
    const std::vector<SolveReport>& baselines, int workers = 1);

// Baseline reports: the same config with no cuts.
absl::StatusOr<std::vector<SolveReport>> SolveBaselines(
    const std::vector<MipInstance>& instances, const BncConfig& config,
    int workers = 1);

// Columns: instance,policy,status,nodes,simplex_iters,wall_time,r_time,r_nodes.
// Missing ratios are written as NA. wall_time is written as 0 unless
// include_wall_time, which keeps the file reproducible.
std::string MetricsCsvHeader();
std::string MetricsCsvRows(const PolicyEvaluation& evaluation, bool include_wall_time);

// Columns: policy,count,excluded,r_time_mean,r_time_std,r_nodes_mean,r_nodes_std.
std::string SummaryCsvHeader();
std::string SummaryCsvRow(const PolicyEvaluation& evaluation);

}  // namespace cutrank

#endif  // SRC_BNC_EVALUATION_H_
