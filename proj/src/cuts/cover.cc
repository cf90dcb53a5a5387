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

#include "src/cuts/cover.h"

#include <algorithm>
#include <numeric>

namespace cutrank {

std::vector<LessEqualRow> LessEqualRows(const MipInstance& instance) {
  std::vector<LessEqualRow> out;
  for (int i = 0; i < instance.num_rows(); ++i) {
    const LinearRow& row = instance.rows[i];
    if (row.sense != RowSense::kGreaterEqual) {
      out.push_back({row.coefficients, row.rhs, i});
    }
    if (row.sense != RowSense::kLessEqual) {
      LessEqualRow negated{row.coefficients, -row.rhs, i};
      for (SparseEntry& e : negated.coefficients) e.value = -e.value;
      out.push_back(std::move(negated));
    }
  }
  return out;
}

bool IsAllBinary(const LessEqualRow& row, const MipInstance& instance) {
  if (row.coefficients.empty()) return false;
  for (const SparseEntry& e : row.coefficients) {
    if (e.value != 0.0 && !instance.IsBinary(e.index)) return false;
  }
  return true;
}

std::optional<std::vector<int>> GreedyMinimalCover(
    const std::vector<double>& weights, double capacity) {
  std::vector<int> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] > weights[b]; });
  std::vector<int> cover;
  double sum = 0.0;
  for (int k : order) {
    if (sum > capacity) break;
    cover.push_back(k);
    sum += weights[k];
  }
  if (sum <= capacity) return std::nullopt;
  // cover is in descending weight order; try removals from the lightest.
  std::vector<int> kept;
  for (auto it = cover.rbegin(); it != cover.rend(); ++it) {
    if (sum - weights[*it] > capacity) {
      sum -= weights[*it];
    } else {
      kept.push_back(*it);
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<Cut> GenerateCoverCuts(const MipInstance& instance, int max_cuts) {
  std::vector<Cut> cuts;
  for (const LessEqualRow& row : LessEqualRows(instance)) {
    if (static_cast<int>(cuts.size()) >= max_cuts) break;
    if (row.rhs < 0.0 || !IsAllBinary(row, instance)) continue;
    std::vector<double> weights;
    std::vector<int> vars;
    bool knapsack = true;
    for (const SparseEntry& e : row.coefficients) {
      if (e.value < 0.0) knapsack = false;
      if (e.value > 0.0) {
        weights.push_back(e.value);
        vars.push_back(e.index);
      }
    }
    if (!knapsack) continue;
    const auto cover = GreedyMinimalCover(weights, row.rhs);
    if (!cover) continue;
    Cut cut;
    cut.kind = CutKind::kCover;
    cut.source_row = row.source_row;
    std::vector<int> members;
    for (int k : *cover) members.push_back(vars[k]);
    std::sort(members.begin(), members.end());
    for (int j : members) cut.alpha.push_back({j, 1.0});
    cut.beta = static_cast<double>(members.size()) - 1.0;
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

}  // namespace cutrank
