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

#include "src/training/sampling.h"

#include <map>
#include <random>

#include "absl/strings/str_cat.h"
#include "src/bnc/evaluation.h"
#include "src/common/seeds.h"
#include "src/common/status_macros.h"
#include "src/scoring/selection.h"

namespace cutrank {
namespace {

constexpr uint64_t kSubsetStream = 1;
constexpr uint64_t kCoinStream = 2;

absl::StatusOr<InstanceSamples> Collect(const MipInstance& instance,
                                        const std::string& instance_id,
                                        const MlpParams* model,
                                        double epsilon, const TrainConfig& config,
                                        const BncConfig& solver) {
  RETURN_IF_ERROR(config.Validate());
  ASSIGN_OR_RETURN(RootContext root, PrepareRoot(instance, solver.cut_options));
  if (!root.property.has_value()) {
    return absl::FailedPreconditionError(absl::StrCat(
        instance_id, ": root LP is ", LpStatusName(root.root_lp.status)));
  }
  if (root.pool.empty()) {
    return absl::FailedPreconditionError(absl::StrCat(instance_id, ": candidate pool is empty"));
  }

  InstanceSamples out;
  out.instance_id = instance_id;
  out.pool = root.pool;
  std::vector<FeatureVector> raw;
  for (const Cut& cut : root.pool.cuts) raw.push_back(ComputeCutFeatures(cut, *root.property));
  ASSIGN_OR_RETURN(out.stats, ZScoreFit(raw));
  std::vector<FeatureVector> standardized;
  for (const FeatureVector& f : raw) standardized.push_back(ZScoreApply(f, out.stats));

  BncConfig base = solver;
  base.feedback_mode = config.feedback_mode;
  base.k_percent = config.k_percent;
  base.policy = SelectionPolicy::None();
  ASSIGN_OR_RETURN(SolveReport baseline, SolveFromRoot(root, base));
  if (!baseline.Solved()) {
    return absl::FailedPreconditionError(absl::StrCat(
        instance_id, ": no-cut solve ended ", SolveStatusName(baseline.status)));
  }
  const double t_base = baseline.Effort(config.feedback_mode);

  std::vector<int> greedy_bag;
  if (model != nullptr) {
    auto shared = std::make_shared<const MlpParams>(*model);
    ASSIGN_OR_RETURN(greedy_bag, SelectCuts(root.pool, *root.property,
                                            SelectionPolicy::CutRanking(shared),
                                            config.k_percent));
  }
  const std::vector<BagDraw> draws = DrawBags(
      root.pool.size(), config.k_percent, greedy_bag, epsilon, config.bags_per_instance,
      MixSeed(config.seed, instance.seed, kSubsetStream),
      MixSeed(config.seed, instance.seed, kCoinStream));

  // Solves are deterministic in DeterministicWork mode, so repeated bags
  // reuse their report.
  std::map<std::vector<int>, SolveReport> cache;
  for (const BagDraw& draw : draws) {
    const SolveReport* report = nullptr;
    auto it = cache.find(draw.bag);
    if (it != cache.end() && config.feedback_mode == FeedbackMode::kDeterministicWork) {
      report = &it->second;
    } else {
      BncConfig with = base;
      with.policy = SelectionPolicy::Fixed(draw.bag);
      absl::StatusOr<SolveReport> solved = SolveFromRoot(root, with);
      if (!solved.ok()) {
        ++out.dropped;
        continue;
      }
      report = &(cache[draw.bag] = *std::move(solved));
    }
    if (!report->Solved()) {
      ++out.dropped;
      continue;
    }
    TrainingSample sample;
    sample.bag = draw.bag;
    sample.greedy = draw.greedy;
    std::vector<CutFeatures> members;
    for (int i : draw.bag) members.push_back(standardized[i]);
    ASSIGN_OR_RETURN(sample.features, AggregateBag(members));
    sample.t_base = t_base;
    sample.t_bag = report->Effort(config.feedback_mode);
    sample.r = ReductionRatio(sample.t_base, sample.t_bag);
    out.samples.push_back(std::move(sample));
  }
  return out;
}

}  // namespace

std::vector<BagDraw> DrawBags(int pool_size, double k_percent,
                              const std::vector<int>& greedy_bag, double epsilon,
                              int count, uint64_t subset_seed, uint64_t coin_seed) {
  std::mt19937_64 subsets(subset_seed);
  std::mt19937_64 coins(coin_seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<BagDraw> draws;
  draws.reserve(count);
  for (int b = 0; b < count; ++b) {
    BagDraw draw;
    const double flip = coin(coins);
    if (greedy_bag.empty() || flip < epsilon) {
      draw.bag = SelectRandom(pool_size, k_percent, subsets);
    } else {
      draw.bag = greedy_bag;
      draw.greedy = true;
    }
    draws.push_back(std::move(draw));
  }
  return draws;
}

absl::StatusOr<InstanceSamples> CollectRandom(const MipInstance& instance,
                                              const std::string& instance_id,
                                              const TrainConfig& config,
                                              const BncConfig& solver) {
  return Collect(instance, instance_id, nullptr, 1.0, config, solver);
}

absl::StatusOr<InstanceSamples> CollectActive(const MipInstance& instance,
                                              const std::string& instance_id,
                                              const MlpParams& model,
                                              const TrainConfig& config,
                                              const BncConfig& solver) {
  RETURN_IF_ERROR(model.Validate());
  return Collect(instance, instance_id, &model, config.epsilon, config, solver);
}

}  // namespace cutrank
