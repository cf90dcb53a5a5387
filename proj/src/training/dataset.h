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

#ifndef SRC_TRAINING_DATASET_H_
#define SRC_TRAINING_DATASET_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "src/features/cut_features.h"
#include "src/training/sampling.h"

namespace cutrank {

// Samples of every instance, kept grouped so labels stay per instance.
struct Dataset {
  std::vector<InstanceSamples> instances;

  int num_samples() const;
  void AssignAllLabels(double lambda_percent);
};

struct LabeledPoint {
  FeatureVector x{};
  int label = 0;
};

// Fails if any sample is unlabeled.
absl::StatusOr<std::vector<LabeledPoint>> TrainingPoints(const Dataset& data);

// CRDS1 text format, one file per instance:
//
//   CRDS1
//   instance <id>
//   dropped <count>
//   mean <14 values>
//   stddev <14 values>
//   pool <l>
//   cut <kind> <source_row or -> <beta> <nnz> <index>:<value> ...
//   samples <h>
//   sample <label> <greedy> <t_base> <t_bag> <r> <k> <k indices> <14 features>
//   end
std::string SerializeInstanceSamples(const InstanceSamples& samples);
absl::StatusOr<InstanceSamples> ParseInstanceSamples(const std::string& text);
absl::Status WriteInstanceSamples(const InstanceSamples& samples, const std::string& path);
absl::StatusOr<InstanceSamples> ReadInstanceSamples(const std::string& path);

}  // namespace cutrank

#endif  // SRC_TRAINING_DATASET_H_
