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

#ifndef SRC_TRAINING_LABELS_H_
#define SRC_TRAINING_LABELS_H_

#include <span>

#include "src/training/sampling.h"

namespace cutrank {

// ceil(lambda_percent / 100 * num_samples).
int PositiveCount(int num_samples, double lambda_percent);

// Labels the PositiveCount samples with the highest feedback 1 and the rest
// 0. Ties go to the earlier sample. Applies to one instance at a time.
void AssignLabels(std::span<TrainingSample> samples, double lambda_percent);

}  // namespace cutrank

#endif  // SRC_TRAINING_LABELS_H_
