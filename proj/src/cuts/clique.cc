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

#include "src/cuts/clique.h"

#include <algorithm>
#include <set>

#include "src/cuts/cover.h"

namespace cutrank {

ConflictGraph::ConflictGraph(const MipInstance& instance)
    : adjacency_(instance.num_variables(),
                 std::vector<char>(instance.num_variables(), 0)),
      degree_(instance.num_variables(), 0) {
  for (const LessEqualRow& row : LessEqualRows(instance)) {
    if (!IsAllBinary(row, instance)) continue;
    double min_activity = 0.0;
    for (const SparseEntry& e : row.coefficients) {
      min_activity += std::min(0.0, e.value);
    }
    const auto& c = row.coefficients;
    for (size_t p = 0; p < c.size(); ++p) {
      for (size_t q = p + 1; q < c.size(); ++q) {
        const double both = min_activity - std::min(0.0, c[p].value) -
                            std::min(0.0, c[q].value) + c[p].value + c[q].value;
        if (both <= row.rhs + 1e-9) continue;
        const int i = c[p].index;
        const int j = c[q].index;
        if (i == j || adjacency_[i][j]) continue;
        adjacency_[i][j] = adjacency_[j][i] = 1;
        ++degree_[i];
        ++degree_[j];
      }
    }
  }
}

std::vector<Cut> GenerateCliqueCuts(const MipInstance& instance, int max_cuts) {
  std::vector<Cut> cuts;
  const ConflictGraph graph(instance);
  std::set<std::vector<int>> emitted;
  for (int seed = 0; seed < graph.num_vertices(); ++seed) {
    if (static_cast<int>(cuts.size()) >= max_cuts) break;
    if (graph.Degree(seed) < 2) continue;
    std::vector<int> candidates;
    for (int j = 0; j < graph.num_vertices(); ++j) {
      if (graph.Adjacent(seed, j)) candidates.push_back(j);
    }
    std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      return graph.Degree(a) > graph.Degree(b);
    });
    std::vector<int> clique = {seed};
    for (int v : candidates) {
      const bool joins = std::all_of(clique.begin(), clique.end(),
                                     [&](int u) { return graph.Adjacent(u, v); });
      if (joins) clique.push_back(v);
    }
    if (clique.size() < 3) continue;
    std::sort(clique.begin(), clique.end());
    if (!emitted.insert(clique).second) continue;
    Cut cut;
    cut.kind = CutKind::kClique;
    cut.beta = 1.0;
    for (int j : clique) cut.alpha.push_back({j, 1.0});
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

}  // namespace cutrank
