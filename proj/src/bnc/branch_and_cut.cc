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

#include "src/bnc/branch_and_cut.h"

#include <chrono>
#include <cmath>
#include <limits>
#include <queue>

#include "absl/strings/str_cat.h"
#include "src/common/status_macros.h"
#include "src/common/tolerances.h"
#include "src/lp/simplex.h"

namespace cutrank {
namespace {

struct BoundChange {
  int variable;
  double lower;
  double upper;
};

struct Node {
  double key;  // lower bound inherited from the parent LP
  int64_t sequence;
  std::vector<BoundChange> changes;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.key != b.key) return a.key > b.key;
    return a.sequence > b.sequence;
  }
};

// Most fractional integer variable, ties to the lowest index; -1 if integral.
// Re-solves the continuous part of x over the original rows with the integer
// variables fixed, so the reported point does not depend on which cut rows
// were present in the tree. Node counters are not touched.
void PolishIncumbent(const MipInstance& instance, std::vector<double>& x,
                     double& value) {
  bool has_continuous = false;
  LinearProgram lp = instance.Relaxation();
  for (int j = 0; j < instance.num_variables(); ++j) {
    if (instance.integrality[j]) {
      lp.lower_bounds[j] = x[j];
      lp.upper_bounds[j] = x[j];
    } else {
      has_continuous = true;
    }
  }
  if (!has_continuous) return;
  absl::StatusOr<LpSolution> sol = SolveLp(lp);
  if (!sol.ok() || sol->status != LpStatus::kOptimal) return;
  std::vector<double> polished = sol->x;
  double polished_value = 0.0;
  for (int j = 0; j < instance.num_variables(); ++j) {
    if (instance.integrality[j]) polished[j] = x[j];
    polished_value += instance.objective[j] * polished[j];
  }
  if (polished_value > value + kFeasibilityTolerance * std::max(1.0, std::abs(value))) return;
  x = std::move(polished);
  value = polished_value;
}

int BranchingVariable(const MipInstance& instance, const std::vector<double>& x) {
  int best = -1;
  double best_distance = kIntegralityTolerance;
  for (int j = 0; j < instance.num_variables(); ++j) {
    if (!instance.integrality[j]) continue;
    const double frac = x[j] - std::floor(x[j]);
    const double distance = std::min(frac, 1.0 - frac);
    if (distance > best_distance) {
      best_distance = distance;
      best = j;
    }
  }
  return best;
}

}  // namespace

std::string FeedbackModeName(FeedbackMode mode) {
  return mode == FeedbackMode::kWallClock ? "wall_clock" : "deterministic_work";
}

absl::StatusOr<FeedbackMode> ParseFeedbackMode(const std::string& name) {
  if (name == "wall_clock") return FeedbackMode::kWallClock;
  if (name == "deterministic_work") return FeedbackMode::kDeterministicWork;
  return absl::InvalidArgumentError(absl::StrCat("unknown feedback mode '", name, "'"));
}

absl::Status BncConfig::Validate() const {
  if (node_limit <= 0) return absl::InvalidArgumentError("node_limit must be positive");
  if (!(time_limit > 0.0)) return absl::InvalidArgumentError("time_limit must be positive");
  if (!(k_percent > 0.0 && k_percent <= 100.0)) {
    return absl::InvalidArgumentError("K must lie in (0, 100]");
  }
  if (branching != "most_fractional") {
    return absl::InvalidArgumentError(absl::StrCat("unsupported branching rule '", branching, "'"));
  }
  if (node_selection != "best_bound") {
    return absl::InvalidArgumentError(
        absl::StrCat("unsupported node selection rule '", node_selection, "'"));
  }
  return policy.Validate();
}

std::string SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kFeasible:
      return "feasible";
    case SolveStatus::kLimitReached:
      return "limit_reached";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

double SolveReport::Effort(FeedbackMode mode) const {
  return mode == FeedbackMode::kWallClock
             ? wall_time
             : static_cast<double>(simplex_iterations_total);
}

absl::StatusOr<RootContext> PrepareRoot(const MipInstance& instance,
                                        const CutGenerationOptions& options,
                                        bool generate_pool) {
  RETURN_IF_ERROR(instance.Validate());
  RootContext root;
  root.instance = &instance;
  ASSIGN_OR_RETURN(root.root_lp, SolveLp(instance.Relaxation()));
  if (root.root_lp.status != LpStatus::kOptimal) return root;
  ProblemProperty property;
  property.instance = &instance;
  property.x_lp_star = root.root_lp.x;
  property.root_lp = root.root_lp;
  if (generate_pool) {
    absl::StatusOr<CutPool> pool = CandidateCuts(instance, property, options);
    // A singular root basis leaves the pool empty; the solve still proceeds.
    if (pool.ok()) root.pool = *std::move(pool);
  }
  root.property = std::move(property);
  return root;
}

absl::StatusOr<SolveReport> SolveFromRoot(const RootContext& root,
                                          const BncConfig& config) {
  RETURN_IF_ERROR(config.Validate());
  if (root.instance == nullptr) return absl::InvalidArgumentError("root has no instance");
  const MipInstance& instance = *root.instance;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  };

  SolveReport report;
  if (!root.property.has_value()) {
    // The relaxation itself decides the outcome; its solve is the root node.
    report.nodes_visited = 1;
    report.simplex_iterations_total = root.root_lp.iteration_count;
    switch (root.root_lp.status) {
      case LpStatus::kInfeasible:
        report.status = SolveStatus::kInfeasible;
        break;
      case LpStatus::kUnbounded:
        report.status = SolveStatus::kUnbounded;
        break;
      default:
        report.failed_nodes = 1;
        report.status = SolveStatus::kLimitReached;
    }
    report.wall_time = elapsed();
    return report;
  }

  LinearProgram lp = instance.Relaxation();
  report.cuts_generated = config.policy.kind == PolicyKind::kNone ? 0 : root.pool.size();
  ASSIGN_OR_RETURN(std::vector<int> selected,
                   SelectCuts(root.pool, *root.property, config.policy, config.k_percent));
  for (int i : selected) lp.rows.push_back(CutAsRow(root.pool.cuts[i]));
  report.cuts_added = static_cast<int>(selected.size());

  const std::vector<double> base_lower = lp.lower_bounds;
  const std::vector<double> base_upper = lp.upper_bounds;
  double incumbent_value = kInfinity;
  std::priority_queue<Node, std::vector<Node>, NodeOrder> queue;
  int64_t sequence = 0;
  queue.push(Node{-kInfinity, sequence++, {}});
  bool limit_hit = false;
  bool root_done = false;

  while (!queue.empty()) {
    if (report.nodes_visited >= config.node_limit || elapsed() > config.time_limit) {
      limit_hit = true;
      break;
    }
    Node node = queue.top();
    queue.pop();
    report.bound_trace.push_back(node.key);
    if (node.key >= incumbent_value - kGapTolerance) continue;

    lp.lower_bounds = base_lower;
    lp.upper_bounds = base_upper;
    for (const BoundChange& c : node.changes) {
      lp.lower_bounds[c.variable] = c.lower;
      lp.upper_bounds[c.variable] = c.upper;
    }
    ASSIGN_OR_RETURN(LpSolution sol, SolveLp(lp));
    ++report.nodes_visited;
    report.simplex_iterations_total += sol.iteration_count;

    const bool is_root = !root_done;
    root_done = true;
    if (sol.status == LpStatus::kInfeasible) continue;
    if (sol.status != LpStatus::kOptimal) {
      if (is_root && sol.status == LpStatus::kUnbounded) {
        report.status = SolveStatus::kUnbounded;
        report.wall_time = elapsed();
        return report;
      }
      ++report.failed_nodes;
      continue;
    }
    // Guard against LP noise so bounds never decrease down the tree.
    const double bound = std::max(node.key, sol.objective_value);
    if (is_root) report.root_bound = bound;
    if (bound >= incumbent_value - kGapTolerance) continue;

    const int branch = BranchingVariable(instance, sol.x);
    if (branch < 0) {
      std::vector<double> x = sol.x;
      double value = 0.0;
      for (int j = 0; j < instance.num_variables(); ++j) {
        if (instance.integrality[j]) x[j] = std::round(x[j]);
        value += instance.objective[j] * x[j];
      }
      if (value < incumbent_value) {
        incumbent_value = value;
        report.incumbent = std::move(x);
      }
      continue;
    }
    const double v = sol.x[branch];
    Node down{bound, sequence++, node.changes};
    down.changes.push_back({branch, lp.lower_bounds[branch], std::floor(v)});
    Node up{bound, sequence++, std::move(node.changes)};
    up.changes.push_back({branch, std::ceil(v), lp.upper_bounds[branch]});
    queue.push(std::move(down));
    queue.push(std::move(up));
  }

  const bool have_incumbent = !report.incumbent.empty();
  if (have_incumbent) {
    PolishIncumbent(instance, report.incumbent, incumbent_value);
    report.objective = incumbent_value;
  }
  if (limit_hit || report.failed_nodes > 0) {
    report.status = have_incumbent ? SolveStatus::kFeasible : SolveStatus::kLimitReached;
  } else {
    report.status = have_incumbent ? SolveStatus::kOptimal : SolveStatus::kInfeasible;
  }
  report.wall_time = elapsed();
  return report;
}

absl::StatusOr<SolveReport> SolveMip(const MipInstance& instance,
                                     const BncConfig& config) {
  ASSIGN_OR_RETURN(RootContext root,
                   PrepareRoot(instance, config.cut_options,
                               config.policy.kind != PolicyKind::kNone));
  return SolveFromRoot(root, config);
}

}  // namespace cutrank
