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

#include "src/training/labels.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace cutrank {

int PositiveCount(int num_samples, double lambda_percent) {
  if (num_samples <= 0) return 0;
  const double exact = lambda_percent / 100.0 * num_samples;
  const int count = static_cast<int>(std::ceil(std::round(exact * 1e9) / 1e9));
  return std::clamp(count, 0, num_samples);
}

void AssignLabels(std::span<TrainingSample> samples, double lambda_percent) {
  const int n = static_cast<int>(samples.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return samples[a].r > samples[b].r; });
  const int positives = PositiveCount(n, lambda_percent);
  for (int k = 0; k < n; ++k) samples[order[k]].label = k < positives ? 1 : 0;
}

}  // namespace cutrank
