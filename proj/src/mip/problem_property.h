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

#ifndef SRC_MIP_PROBLEM_PROPERTY_H_
#define SRC_MIP_PROBLEM_PROPERTY_H_

#include <vector>

#include "absl/status/statusor.h"
#include "src/lp/linear_program.h"
#include "src/mip/mip_instance.h"

namespace cutrank {

// The root LP optimum paired with the instance data it was computed from.
// Holds a non-owning pointer: the instance must outlive the property.
struct ProblemProperty {
  const MipInstance* instance = nullptr;
  std::vector<double> x_lp_star;
  LpSolution root_lp;
};

// Solves the root LP relaxation. Infeasible or unbounded relaxations and
// numerical failures are returned as errors.
absl::StatusOr<ProblemProperty> ComputeProblemProperty(
    const MipInstance& instance);

}  // namespace cutrank

#endif  // SRC_MIP_PROBLEM_PROPERTY_H_
