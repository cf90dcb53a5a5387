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

#include "src/scoring/selection.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "src/common/status_macros.h"
#include "src/features/cut_features.h"
#include "src/scoring/heuristics.h"

namespace cutrank {
namespace {

constexpr PolicyKind kAllKinds[] = {
    PolicyKind::kNone,          PolicyKind::kRandom,   PolicyKind::kViolation,
    PolicyKind::kNormViolation, PolicyKind::kDistance, PolicyKind::kParallelism,
    PolicyKind::kCutRanking,    PolicyKind::kFixed};

HeuristicKind ToHeuristic(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kNormViolation:
      return HeuristicKind::kNormViolation;
    case PolicyKind::kDistance:
      return HeuristicKind::kDistance;
    case PolicyKind::kParallelism:
      return HeuristicKind::kParallelism;
    default:
      return HeuristicKind::kViolation;
  }
}

}  // namespace

int SelectionCount(int pool_size, double k_percent) {
  if (pool_size <= 0) return 0;
  // Round away representation noise before the ceiling, so 30% of 20 is 6.
  const double exact = k_percent / 100.0 * pool_size;
  const double snapped = std::round(exact * 1e9) / 1e9;
  const int count = static_cast<int>(std::ceil(snapped));
  return std::clamp(count, 1, pool_size);
}

absl::StatusOr<std::vector<int>> SelectTopK(std::span<const double> scores,
                                            double k_percent) {
  if (!(k_percent > 0.0 && k_percent <= 100.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("K must lie in (0, 100], got ", k_percent));
  }
  for (double s : scores) {
    if (std::isnan(s)) return absl::InvalidArgumentError("NaN score");
  }
  const int n = static_cast<int>(scores.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return scores[a] > scores[b]; });
  order.resize(SelectionCount(n, k_percent));
  std::sort(order.begin(), order.end());
  return order;
}

std::vector<int> SelectRandom(int pool_size, double k_percent,
                              std::mt19937_64& rng) {
  const int count = SelectionCount(pool_size, k_percent);
  std::vector<int> indices(pool_size);
  std::iota(indices.begin(), indices.end(), 0);
  // Partial Fisher-Yates.
  for (int i = 0; i < count; ++i) {
    std::uniform_int_distribution<int> pick(i, pool_size - 1);
    std::swap(indices[i], indices[pick(rng)]);
  }
  indices.resize(count);
  std::sort(indices.begin(), indices.end());
  return indices;
}

std::string PolicyKindName(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kNone:
      return "none";
    case PolicyKind::kRandom:
      return "random";
    case PolicyKind::kViolation:
      return "violation";
    case PolicyKind::kNormViolation:
      return "norm_violation";
    case PolicyKind::kDistance:
      return "distance";
    case PolicyKind::kParallelism:
      return "parallelism";
    case PolicyKind::kCutRanking:
      return "cut_ranking";
    case PolicyKind::kFixed:
      return "fixed";
  }
  return "unknown";
}

absl::StatusOr<PolicyKind> ParsePolicyKind(const std::string& name) {
  for (PolicyKind kind : kAllKinds) {
    if (PolicyKindName(kind) == name) return kind;
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown policy '", name, "'"));
}

SelectionPolicy SelectionPolicy::Random(uint64_t seed) {
  SelectionPolicy p;
  p.kind = PolicyKind::kRandom;
  p.seed = seed;
  return p;
}

SelectionPolicy SelectionPolicy::Heuristic(PolicyKind kind) {
  SelectionPolicy p;
  p.kind = kind;
  return p;
}

SelectionPolicy SelectionPolicy::CutRanking(std::shared_ptr<const MlpParams> model) {
  SelectionPolicy p;
  p.kind = PolicyKind::kCutRanking;
  p.model = std::move(model);
  return p;
}

SelectionPolicy SelectionPolicy::Fixed(std::vector<int> indices) {
  SelectionPolicy p;
  p.kind = PolicyKind::kFixed;
  p.fixed = std::move(indices);
  return p;
}

absl::Status SelectionPolicy::Validate() const {
  if (kind == PolicyKind::kCutRanking) {
    if (model == nullptr) return absl::InvalidArgumentError("cut_ranking without a model");
    RETURN_IF_ERROR(model->Validate());
  }
  if (kind == PolicyKind::kFixed) {
    for (size_t i = 0; i < fixed.size(); ++i) {
      if (fixed[i] < 0 || (i > 0 && fixed[i] <= fixed[i - 1])) {
        return absl::InvalidArgumentError("fixed indices must be ascending and distinct");
      }
    }
  }
  return absl::OkStatus();
}

std::vector<SelectionPolicy> ComparisonPolicies(
    uint64_t random_seed, std::shared_ptr<const MlpParams> model) {
  std::vector<SelectionPolicy> policies = {
      SelectionPolicy::Random(random_seed),
      SelectionPolicy::Heuristic(PolicyKind::kViolation),
      SelectionPolicy::Heuristic(PolicyKind::kNormViolation),
      SelectionPolicy::Heuristic(PolicyKind::kDistance),
      SelectionPolicy::Heuristic(PolicyKind::kParallelism)};
  if (model != nullptr) policies.push_back(SelectionPolicy::CutRanking(std::move(model)));
  return policies;
}

absl::StatusOr<std::vector<double>> ScoreCuts(const CutPool& pool,
                                              const ProblemProperty& property,
                                              const SelectionPolicy& policy) {
  RETURN_IF_ERROR(policy.Validate());
  std::vector<double> scores;
  scores.reserve(pool.size());
  switch (policy.kind) {
    case PolicyKind::kViolation:
    case PolicyKind::kNormViolation:
    case PolicyKind::kDistance:
    case PolicyKind::kParallelism:
      for (const Cut& cut : pool.cuts) {
        scores.push_back(HeuristicScore(cut, property, ToHeuristic(policy.kind)));
      }
      return scores;
    case PolicyKind::kCutRanking: {
      if (pool.empty()) return scores;
      std::vector<FeatureVector> features;
      features.reserve(pool.size());
      for (const Cut& cut : pool.cuts) {
        features.push_back(ComputeCutFeatures(cut, property));
      }
      ASSIGN_OR_RETURN(FeatureStats stats, ZScoreFit(features));
      for (const FeatureVector& f : features) {
        const FeatureVector z = ZScoreApply(f, stats);
        ASSIGN_OR_RETURN(ClassProbabilities p, Forward(*policy.model, z));
        scores.push_back(p.positive);
      }
      return scores;
    }
    default:
      return absl::InvalidArgumentError(
          absl::StrCat("policy '", policy.Name(), "' does not score cuts"));
  }
}

absl::StatusOr<std::vector<int>> SelectCuts(const CutPool& pool,
                                            const ProblemProperty& property,
                                            const SelectionPolicy& policy,
                                            double k_percent) {
  RETURN_IF_ERROR(policy.Validate());
  if (policy.kind == PolicyKind::kNone || pool.empty()) return std::vector<int>{};
  if (policy.kind == PolicyKind::kFixed) {
    for (int i : policy.fixed) {
      if (i >= pool.size()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "fixed index ", i, " outside a pool of ", pool.size()));
      }
    }
    return policy.fixed;
  }
  if (policy.kind == PolicyKind::kRandom) {
    const uint64_t instance_seed =
        property.instance != nullptr ? property.instance->seed : 0;
    std::mt19937_64 rng(policy.seed ^ (instance_seed * 0x9E3779B97F4A7C15ULL));
    return SelectRandom(pool.size(), k_percent, rng);
  }
  ASSIGN_OR_RETURN(std::vector<double> scores, ScoreCuts(pool, property, policy));
  return SelectTopK(scores, k_percent);
}

}  // namespace cutrank
