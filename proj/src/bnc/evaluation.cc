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

#include "src/bnc/evaluation.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "src/common/parallel.h"
#include "src/common/status_macros.h"
#include "src/mip/instance_io.h"

namespace cutrank {
namespace {

std::string FormatOptional(const std::optional<double>& value) {
  return value.has_value() ? FormatDouble(*value) : "NA";
}

absl::StatusOr<std::vector<SolveReport>> SolveAll(
    const std::vector<MipInstance>& instances, const BncConfig& config,
    int workers) {
  std::vector<absl::StatusOr<SolveReport>> results(instances.size());
  ParallelFor(static_cast<int>(instances.size()), workers,
              [&](int i) { results[i] = SolveMip(instances[i], config); });
  std::vector<SolveReport> reports;
  reports.reserve(results.size());
  for (size_t i = 0; i < results.size(); ++i) {
    if (!results[i].ok()) {
      return absl::Status(results[i].status().code(),
                          absl::StrCat("instance ", i, ": ", results[i].status().message()));
    }
    reports.push_back(*std::move(results[i]));
  }
  return reports;
}

}  // namespace

double ReductionRatio(double base, double with) {
  if (base <= 0.0) return 0.0;
  return (base - with) / base;
}

MeanStd Summarize(const std::vector<double>& values) {
  MeanStd s;
  s.count = static_cast<int>(values.size());
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / s.count;
  double squares = 0.0;
  for (double v : values) squares += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(squares / s.count);
  return s;
}

absl::StatusOr<PolicyEvaluation> MetricsFromReports(
    const std::vector<std::string>& names, const std::string& policy,
    const std::vector<SolveReport>& reports,
    const std::vector<SolveReport>& baselines, FeedbackMode mode) {
  if (names.size() != reports.size() || reports.size() != baselines.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "validation error: ", names.size(), " names, ", reports.size(),
        " reports and ", baselines.size(), " baselines"));
  }
  PolicyEvaluation eval;
  eval.policy = policy;
  std::vector<double> r_time;
  std::vector<double> r_nodes;
  for (size_t i = 0; i < reports.size(); ++i) {
    const SolveReport& r = reports[i];
    const SolveReport& b = baselines[i];
    MetricsRow row;
    row.instance = names[i];
    row.policy = policy;
    row.status = r.status;
    row.nodes = r.nodes_visited;
    row.simplex_iters = r.simplex_iterations_total;
    row.wall_time = r.wall_time;
    if (r.Solved() && b.Solved()) {
      row.r_time = ReductionRatio(b.Effort(mode), r.Effort(mode));
      row.r_nodes = ReductionRatio(static_cast<double>(b.nodes_visited),
                                   static_cast<double>(r.nodes_visited));
      r_time.push_back(*row.r_time);
      r_nodes.push_back(*row.r_nodes);
    } else {
      ++eval.excluded;
    }
    eval.rows.push_back(std::move(row));
  }
  eval.r_time = Summarize(r_time);
  eval.r_nodes = Summarize(r_nodes);
  return eval;
}

absl::StatusOr<std::vector<SolveReport>> SolveBaselines(
    const std::vector<MipInstance>& instances, const BncConfig& config,
    int workers) {
  BncConfig none = config;
  none.policy = SelectionPolicy::None();
  return SolveAll(instances, none, workers);
}

absl::StatusOr<PolicyEvaluation> EvaluatePolicy(
    const std::vector<std::string>& names,
    const std::vector<MipInstance>& instances, const BncConfig& config,
    const std::vector<SolveReport>& baselines, int workers) {
  if (names.size() != instances.size() || instances.size() != baselines.size()) {
    return absl::InvalidArgumentError("validation error: mismatched instance lists");
  }
  ASSIGN_OR_RETURN(std::vector<SolveReport> reports, SolveAll(instances, config, workers));
  return MetricsFromReports(names, config.policy.Name(), reports, baselines,
                            config.feedback_mode);
}

std::string MetricsCsvHeader() {
  return "instance,policy,status,nodes,simplex_iters,wall_time,r_time,r_nodes\n";
}

std::string MetricsCsvRows(const PolicyEvaluation& evaluation, bool include_wall_time) {
  std::string out;
  for (const MetricsRow& row : evaluation.rows) {
    absl::StrAppend(&out, row.instance, ",", row.policy, ",", SolveStatusName(row.status),
                    ",", row.nodes, ",", row.simplex_iters, ",",
                    FormatDouble(include_wall_time ? row.wall_time : 0.0), ",",
                    FormatOptional(row.r_time), ",", FormatOptional(row.r_nodes), "\n");
  }
  return out;
}

std::string SummaryCsvHeader() {
  return "policy,count,excluded,r_time_mean,r_time_std,r_nodes_mean,r_nodes_std\n";
}

std::string SummaryCsvRow(const PolicyEvaluation& e) {
  return absl::StrCat(e.policy, ",", e.r_time.count, ",", e.excluded, ",",
                      FormatDouble(e.r_time.mean), ",", FormatDouble(e.r_time.stddev), ",",
                      FormatDouble(e.r_nodes.mean), ",", FormatDouble(e.r_nodes.stddev),
                      "\n");
}

}  // namespace cutrank
