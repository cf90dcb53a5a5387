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

#ifndef SRC_SCORING_SELECTION_H_
#define SRC_SCORING_SELECTION_H_

#include <cstdint>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "src/cuts/cut.h"
#include "src/mip/problem_property.h"
#include "src/scoring/mlp.h"

namespace cutrank {

// ceil(k_percent / 100 * pool_size), at least 1 for a nonempty pool.
int SelectionCount(int pool_size, double k_percent);

// Indices of the SelectionCount highest scores, ties to the lower index,
// returned in ascending order.
absl::StatusOr<std::vector<int>> SelectTopK(std::span<const double> scores,
                                            double k_percent);

// Uniform random subset of SelectionCount indices, ascending.
std::vector<int> SelectRandom(int pool_size, double k_percent,
                              std::mt19937_64& rng);

enum class PolicyKind {
  kNone,  // no cuts
  kRandom,
  kViolation,
  kNormViolation,
  kDistance,
  kParallelism,
  kCutRanking,
  kFixed,  // an explicit subset of the pool, used while collecting bags
};

std::string PolicyKindName(PolicyKind kind);
absl::StatusOr<PolicyKind> ParsePolicyKind(const std::string& name);

struct SelectionPolicy {
  PolicyKind kind = PolicyKind::kNone;
  uint64_t seed = 0;                          // kRandom
  std::shared_ptr<const MlpParams> model;     // kCutRanking
  std::vector<int> fixed;                     // kFixed

  static SelectionPolicy None() { return {}; }
  static SelectionPolicy Random(uint64_t seed);
  static SelectionPolicy Heuristic(PolicyKind kind);
  static SelectionPolicy CutRanking(std::shared_ptr<const MlpParams> model);
  static SelectionPolicy Fixed(std::vector<int> indices);

  absl::Status Validate() const;
  std::string Name() const { return PolicyKindName(kind); }
};

// The six policies compared in evaluations: Random, four heuristics and,
// when a model is given, CutRanking.
std::vector<SelectionPolicy> ComparisonPolicies(
    uint64_t random_seed, std::shared_ptr<const MlpParams> model);

// Per-cut scores for the scoring kinds (heuristics and CutRanking).
// CutRanking standardizes features with statistics of this pool.
absl::StatusOr<std::vector<double>> ScoreCuts(const CutPool& pool,
                                              const ProblemProperty& property,
                                              const SelectionPolicy& policy);

// Indices into pool.cuts of the cuts the policy adds, ascending.
absl::StatusOr<std::vector<int>> SelectCuts(const CutPool& pool,
                                            const ProblemProperty& property,
                                            const SelectionPolicy& policy,
                                            double k_percent);

}  // namespace cutrank

#endif  // SRC_SCORING_SELECTION_H_
