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

#ifndef SRC_CUTS_COVER_H_
#define SRC_CUTS_COVER_H_

#include <optional>
#include <vector>

#include "src/cuts/cut.h"
#include "src/mip/mip_instance.h"

namespace cutrank {

// A row of the instance rewritten as sum a_k x_k <= b. Greater-equal rows
// are negated and equality rows produce both directions.
struct LessEqualRow {
  SparseVector coefficients;
  double rhs = 0.0;
  int source_row = 0;
};
std::vector<LessEqualRow> LessEqualRows(const MipInstance& instance);

// True when every variable with a nonzero coefficient is binary.
bool IsAllBinary(const LessEqualRow& row, const MipInstance& instance);

// Minimal cover of weights against capacity: positions whose weights sum
// above capacity, such that dropping any one brings the sum back to at most
// capacity. Greedy by descending weight (ties by position), then shrunk by
// trying removals in ascending weight order. nullopt if sum(weights) <= capacity.
std::optional<std::vector<int>> GreedyMinimalCover(
    const std::vector<double>& weights, double capacity);

// x'_1 + ... + x'_l <= l - 1 for a minimal cover of every knapsack row
// (all-binary, nonnegative coefficients and rhs).
std::vector<Cut> GenerateCoverCuts(const MipInstance& instance,
                                   int max_cuts = 50);

}  // namespace cutrank

#endif  // SRC_CUTS_COVER_H_
