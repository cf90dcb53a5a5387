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

#include "src/scoring/heuristics.h"

#include "src/features/cut_features.h"

namespace cutrank {

std::string HeuristicName(HeuristicKind kind) {
  switch (kind) {
    case HeuristicKind::kViolation:
      return "violation";
    case HeuristicKind::kNormViolation:
      return "norm_violation";
    case HeuristicKind::kDistance:
      return "distance";
    case HeuristicKind::kParallelism:
      return "parallelism";
  }
  return "unknown";
}

double HeuristicScore(const Cut& cut, const ProblemProperty& property,
                      HeuristicKind kind) {
  switch (kind) {
    case HeuristicKind::kViolation:
      return CutViolation(cut, property.x_lp_star);
    case HeuristicKind::kNormViolation:
      return NormalizedViolation(cut, property.x_lp_star);
    case HeuristicKind::kDistance:
      return EuclideanDistance(cut, property.x_lp_star);
    case HeuristicKind::kParallelism:
      return ObjectiveParallelism(cut, property.instance->objective);
  }
  return 0.0;
}

}  // namespace cutrank
