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

#ifndef SRC_CUTS_CLIQUE_H_
#define SRC_CUTS_CLIQUE_H_

#include <vector>

#include "src/cuts/cut.h"
#include "src/mip/mip_instance.h"

namespace cutrank {

// Pairwise conflicts among binary variables: (i, j) conflict when some
// all-binary row cannot hold with x_i = x_j = 1, judged against the row's
// minimum activity over the remaining variables.
class ConflictGraph {
 public:
  explicit ConflictGraph(const MipInstance& instance);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  bool Adjacent(int i, int j) const { return adjacency_[i][j] != 0; }
  int Degree(int i) const { return degree_[i]; }

 private:
  std::vector<std::vector<char>> adjacency_;
  std::vector<int> degree_;
};

// sum_{j in Q} x_j <= 1 for greedily grown maximal cliques Q with |Q| >= 3.
// Each binary variable seeds one growth (in index order); candidates are
// added by descending degree. Duplicate cliques are emitted once.
std::vector<Cut> GenerateCliqueCuts(const MipInstance& instance,
                                    int max_cuts = 50);

}  // namespace cutrank

#endif  // SRC_CUTS_CLIQUE_H_
