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

#ifndef SRC_COMMON_TOLERANCES_H_
#define SRC_COMMON_TOLERANCES_H_

#include <limits>

namespace cutrank {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Primal feasibility tolerance for LP solutions.
inline constexpr double kFeasibilityTolerance = 1e-7;
// Reduced-cost tolerance for declaring an LP basis optimal.
inline constexpr double kOptimalityTolerance = 1e-9;
// Smallest magnitude accepted as a simplex pivot element.
inline constexpr double kPivotTolerance = 1e-9;
// Fractionality below which a Gomory row or coefficient counts as integral.
inline constexpr double kFractionalityTolerance = 1e-5;
// Integrality tolerance for branching and incumbent acceptance.
inline constexpr double kIntegralityTolerance = 1e-6;
// Absolute gap below which a node is pruned against the incumbent.
inline constexpr double kGapTolerance = 1e-9;

}  // namespace cutrank

#endif  // SRC_COMMON_TOLERANCES_H_
