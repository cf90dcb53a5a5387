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

#include "src/training/trainer.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "absl/strings/str_cat.h"
#include "src/common/status_macros.h"
#include "src/mip/instance_io.h"

namespace cutrank {

LossTerms LossAndGradient(const MlpParams& params, std::span<const LabeledPoint> data,
                          double gamma, MlpParams* gradient) {
  if (gradient != nullptr) *gradient = MlpParams::Zeros();
  LossTerms loss;
  for (const LabeledPoint& p : data) {
    loss.cross_entropy += CrossEntropy(params, p.x, p.label, gradient);
  }
  loss.regularization = params.SquaredNorm();
  loss.total = loss.cross_entropy + gamma * loss.regularization;
  if (gradient != nullptr) gradient->AddScaled(params, 2.0 * gamma);
  return loss;
}

absl::StatusOr<TrainResult> Train(std::span<const LabeledPoint> data,
                                  const TrainConfig& config,
                                  const std::optional<MlpParams>& init) {
  RETURN_IF_ERROR(config.Validate());
  if (data.empty()) return absl::FailedPreconditionError("no training samples");
  for (const LabeledPoint& p : data) {
    if (p.label != 0 && p.label != 1) {
      return absl::FailedPreconditionError("training sample without a label");
    }
  }
  TrainResult result;
  result.params = init.has_value() ? *init : InitializeMlp(config.seed);
  RETURN_IF_ERROR(result.params.Validate());

  const int n = static_cast<int>(data.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(config.seed);
  MlpParams gradient = MlpParams::Zeros();
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    for (int start = 0; start < n; start += config.batch_size) {
      const int end = std::min(n, start + config.batch_size);
      gradient = MlpParams::Zeros();
      for (int k = start; k < end; ++k) {
        const LabeledPoint& p = data[order[k]];
        CrossEntropy(result.params, p.x, p.label, &gradient);
      }
      const double share = static_cast<double>(end - start) / n;
      gradient.AddScaled(result.params, 2.0 * config.gamma * share);
      result.params.AddScaled(gradient, -config.learning_rate);
    }
    const LossTerms loss = LossAndGradient(result.params, data, config.gamma, nullptr);
    if (!std::isfinite(loss.total)) {
      return absl::FailedPreconditionError(absl::StrCat(
          "loss became non-finite at epoch ", epoch, " with learning_rate ",
          config.learning_rate, "; lower learning_rate (for example by 10x) and retry"));
    }
    result.trace.push_back({epoch, loss});
  }
  return result;
}

double Accuracy(const MlpParams& params, std::span<const LabeledPoint> data) {
  if (data.empty()) return 0.0;
  int correct = 0;
  for (const LabeledPoint& p : data) {
    auto probs = Forward(params, p.x);
    if (!probs.ok()) continue;
    const int predicted = probs->positive >= 0.5 ? 1 : 0;
    if (predicted == p.label) ++correct;
  }
  return static_cast<double>(correct) / data.size();
}

std::string LossTraceCsv(const std::vector<EpochLoss>& trace) {
  std::string out = "epoch,L_ce,omega,total\n";
  for (const EpochLoss& e : trace) {
    absl::StrAppend(&out, e.epoch, ",", FormatDouble(e.loss.cross_entropy), ",",
                    FormatDouble(e.loss.regularization), ",", FormatDouble(e.loss.total),
                    "\n");
  }
  return out;
}

}  // namespace cutrank
