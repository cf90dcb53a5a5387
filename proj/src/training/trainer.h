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

#ifndef SRC_TRAINING_TRAINER_H_
#define SRC_TRAINING_TRAINER_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "src/scoring/mlp.h"
#include "src/training/dataset.h"
#include "src/training/train_config.h"

namespace cutrank {

// L = L_ce + gamma * Omega with L_ce the summed cross-entropy and
// Omega = ||theta||_2^2.
struct LossTerms {
  double cross_entropy = 0.0;
  double regularization = 0.0;  // Omega, before the gamma factor
  double total = 0.0;
};

// Loss over data; when gradient is non-null it receives dL/dtheta.
LossTerms LossAndGradient(const MlpParams& params, std::span<const LabeledPoint> data,
                          double gamma, MlpParams* gradient);

struct EpochLoss {
  int epoch = 0;
  LossTerms loss;
};

struct TrainResult {
  MlpParams params;
  std::vector<EpochLoss> trace;
};

// Mini-batch gradient descent from InitializeMlp(config.seed), or from init
// when given. Each batch B of an epoch over S samples steps along
// sum_B grad(cross-entropy) + gamma * |B| / S * grad(Omega), so one epoch
// applies the regularizer once in total. Batch order is reshuffled every
// epoch from config.seed. Fails if the loss becomes non-finite.
absl::StatusOr<TrainResult> Train(std::span<const LabeledPoint> data,
                                  const TrainConfig& config,
                                  const std::optional<MlpParams>& init = std::nullopt);

// Fraction of points whose score falls on the side of 0.5 given by the label.
double Accuracy(const MlpParams& params, std::span<const LabeledPoint> data);

// Columns: epoch,L_ce,omega,total.
std::string LossTraceCsv(const std::vector<EpochLoss>& trace);

}  // namespace cutrank

#endif  // SRC_TRAINING_TRAINER_H_
