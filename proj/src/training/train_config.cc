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

#include "src/training/train_config.h"

namespace cutrank {

absl::Status TrainConfig::Validate() const {
  if (!(k_percent > 0.0 && k_percent <= 100.0)) {
    return absl::InvalidArgumentError("k_percent must lie in (0, 100]");
  }
  if (!(lambda_percent > 0.0 && lambda_percent < 100.0)) {
    return absl::InvalidArgumentError("lambda_percent must lie in (0, 100)");
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    return absl::InvalidArgumentError("epsilon must lie in [0, 1]");
  }
  if (!(gamma > 0.0)) return absl::InvalidArgumentError("gamma must be positive");
  if (!(learning_rate > 0.0)) return absl::InvalidArgumentError("learning_rate must be positive");
  if (epochs < 0) return absl::InvalidArgumentError("epochs must be nonnegative");
  if (batch_size <= 0) return absl::InvalidArgumentError("batch_size must be positive");
  if (bags_per_instance <= 0) {
    return absl::InvalidArgumentError("bags_per_instance must be positive");
  }
  return absl::OkStatus();
}

}  // namespace cutrank
