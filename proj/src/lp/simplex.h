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

#ifndef SRC_LP_SIMPLEX_H_
#define SRC_LP_SIMPLEX_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "src/lp/linear_program.h"

namespace cutrank {

struct SimplexOptions {
  // Consecutive non-improving pivots tolerated under Dantzig pricing before
  // switching to Bland's rule until the objective moves again.
  int degenerate_pivot_budget = 50;
  // 0 selects a limit proportional to the problem size.
  int64_t iteration_limit = 0;
};

// Two-phase primal simplex on a dense tableau of the standard form.
//
// Returns an error only for malformed input. Solver outcomes, including
// stalls and solutions that fail the final feasibility check, are reported
// through LpSolution::status. Deterministic for a fixed input.
absl::StatusOr<LpSolution> SolveLp(const LinearProgram& lp,
                                   const SimplexOptions& options = {});

}  // namespace cutrank

#endif  // SRC_LP_SIMPLEX_H_
