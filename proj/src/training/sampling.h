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

#ifndef SRC_TRAINING_SAMPLING_H_
#define SRC_TRAINING_SAMPLING_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "src/bnc/branch_and_cut.h"
#include "src/cuts/cut.h"
#include "src/features/cut_features.h"
#include "src/mip/mip_instance.h"
#include "src/scoring/mlp.h"
#include "src/training/train_config.h"

namespace cutrank {

// One bag C' of an instance with its feedback r = (t_base - t_bag) / t_base.
struct TrainingSample {
  std::vector<int> bag;     // ascending indices into the instance pool
  BagFeatures features{};   // mean of the standardized member features
  double t_base = 0.0;
  double t_bag = 0.0;
  double r = 0.0;
  bool greedy = false;      // drawn from the model rather than at random
  int label = -1;           // -1 until labels are assigned
};

// Everything collected for one instance. Features are standardized with
// statistics of the instance's own candidate pool.
struct InstanceSamples {
  std::string instance_id;
  CutPool pool;
  FeatureStats stats;
  std::vector<TrainingSample> samples;
  int dropped = 0;  // bags whose solve hit a limit or failed
};

// A bag to solve and whether it came from the greedy branch.
struct BagDraw {
  std::vector<int> bag;
  bool greedy = false;
};

// Epsilon-greedy bag stream: for each bag a coin from its own stream decides
// between greedy_bag (probability 1 - epsilon) and a uniform random subset
// drawn from the subset stream. epsilon = 1 gives exactly the bags of a pure
// random stream with the same subset seed.
std::vector<BagDraw> DrawBags(int pool_size, double k_percent,
                              const std::vector<int>& greedy_bag, double epsilon,
                              int count, uint64_t subset_seed, uint64_t coin_seed);

// Random sampling: bags_per_instance uniform subsets of ceil(K% * pool).
absl::StatusOr<InstanceSamples> CollectRandom(const MipInstance& instance,
                                              const std::string& instance_id,
                                              const TrainConfig& config,
                                              const BncConfig& solver);

// Active sampling: greedy bags are the model's top K%.
absl::StatusOr<InstanceSamples> CollectActive(const MipInstance& instance,
                                              const std::string& instance_id,
                                              const MlpParams& model,
                                              const TrainConfig& config,
                                              const BncConfig& solver);

}  // namespace cutrank

#endif  // SRC_TRAINING_SAMPLING_H_
