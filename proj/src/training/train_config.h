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

#ifndef SRC_TRAINING_TRAIN_CONFIG_H_
#define SRC_TRAINING_TRAIN_CONFIG_H_

#include <cstdint>

#include "absl/status/status.h"
#include "src/bnc/branch_and_cut.h"

namespace cutrank {

struct TrainConfig {
  double k_percent = 30.0;
  double lambda_percent = 50.0;
  double gamma = 0.1;
  double learning_rate = 1e-2;
  double epsilon = 0.1;
  int epochs = 300;
  int batch_size = 32;
  int bags_per_instance = 100;
  FeedbackMode feedback_mode = FeedbackMode::kDeterministicWork;
  uint64_t seed = 0;
  // Re-rank labels of an instance after each active collection round.
  bool relabel_each_round = true;

  absl::Status Validate() const;
};

}  // namespace cutrank

#endif  // SRC_TRAINING_TRAIN_CONFIG_H_
