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

#ifndef SRC_SCORING_HEURISTICS_H_
#define SRC_SCORING_HEURISTICS_H_

#include <string>

#include "absl/status/statusor.h"
#include "src/cuts/cut.h"
#include "src/mip/problem_property.h"

namespace cutrank {

// Manually designed ranking rules. Higher scores rank first for every kind.
enum class HeuristicKind { kViolation, kNormViolation, kDistance, kParallelism };

std::string HeuristicName(HeuristicKind kind);

// Violation is alpha^T x* - beta; the others match the raw feature columns.
double HeuristicScore(const Cut& cut, const ProblemProperty& property,
                      HeuristicKind kind);

}  // namespace cutrank

#endif  // SRC_SCORING_HEURISTICS_H_
