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

#include "src/mip/problem_property.h"

#include "absl/strings/str_cat.h"
#include "src/common/status_macros.h"
#include "src/lp/simplex.h"

namespace cutrank {

absl::StatusOr<ProblemProperty> ComputeProblemProperty(
    const MipInstance& instance) {
  RETURN_IF_ERROR(instance.Validate());
  ASSIGN_OR_RETURN(LpSolution root, SolveLp(instance.Relaxation()));
  if (root.status != LpStatus::kOptimal) {
    return absl::FailedPreconditionError(absl::StrCat(
        "root LP relaxation is ", LpStatusName(root.status)));
  }
  ProblemProperty property;
  property.instance = &instance;
  property.x_lp_star = root.x;
  property.root_lp = std::move(root);
  return property;
}

}  // namespace cutrank
