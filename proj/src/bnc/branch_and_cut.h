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

#ifndef SRC_BNC_BRANCH_AND_CUT_H_
#define SRC_BNC_BRANCH_AND_CUT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "src/cuts/candidate_cuts.h"
#include "src/cuts/cut.h"
#include "src/mip/mip_instance.h"
#include "src/mip/problem_property.h"
#include "src/scoring/selection.h"

namespace cutrank {

// What T measures in r = (T - T') / T.
enum class FeedbackMode {
  kWallClock,
  // Simplex iterations summed over every node LP of the tree.
  kDeterministicWork,
};

std::string FeedbackModeName(FeedbackMode mode);
absl::StatusOr<FeedbackMode> ParseFeedbackMode(const std::string& name);

struct BncConfig {
  SelectionPolicy policy;
  double k_percent = 30.0;
  int64_t node_limit = 1000000;
  double time_limit = 60.0;  // seconds
  FeedbackMode feedback_mode = FeedbackMode::kDeterministicWork;
  std::string branching = "most_fractional";
  std::string node_selection = "best_bound";
  uint64_t seed = 0;
  CutGenerationOptions cut_options;

  absl::Status Validate() const;
};

enum class SolveStatus {
  kOptimal,
  kFeasible,      // a limit was hit with an incumbent in hand
  kLimitReached,  // a limit was hit before any incumbent
  kInfeasible,
  kUnbounded,
};

std::string SolveStatusName(SolveStatus status);

struct SolveReport {
  SolveStatus status = SolveStatus::kLimitReached;
  std::vector<double> incumbent;
  double objective = 0.0;
  int64_t nodes_visited = 0;
  int64_t simplex_iterations_total = 0;
  double wall_time = 0.0;
  int cuts_generated = 0;
  int cuts_added = 0;
  int64_t failed_nodes = 0;
  double root_bound = 0.0;
  // Bound key of every node taken from the queue, in order.
  std::vector<double> bound_trace;

  // Effort under the given feedback mode.
  double Effort(FeedbackMode mode) const;
  bool Solved() const {
    return status == SolveStatus::kOptimal || status == SolveStatus::kInfeasible;
  }
};

// Root LP and candidate pool of an instance, computed once and shared by
// solves that differ only in which cuts are selected.
struct RootContext {
  const MipInstance* instance = nullptr;
  LpSolution root_lp;
  // Set when the root LP is optimal.
  std::optional<ProblemProperty> property;
  CutPool pool;
};

absl::StatusOr<RootContext> PrepareRoot(const MipInstance& instance,
                                        const CutGenerationOptions& options,
                                        bool generate_pool = true);

// Branch-and-bound on the LP relaxation with cuts only at the root: the
// policy picks cuts from the pool, they are appended as rows and the root is
// re-solved. The shared pre-cut root solve is not counted in the report.
absl::StatusOr<SolveReport> SolveFromRoot(const RootContext& root,
                                          const BncConfig& config);

absl::StatusOr<SolveReport> SolveMip(const MipInstance& instance,
                                     const BncConfig& config);

}  // namespace cutrank

#endif  // SRC_BNC_BRANCH_AND_CUT_H_
