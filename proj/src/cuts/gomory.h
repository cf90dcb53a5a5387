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

#ifndef SRC_CUTS_GOMORY_H_
#define SRC_CUTS_GOMORY_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "src/cuts/cut.h"
#include "src/lp/tableau.h"
#include "src/mip/problem_property.h"

namespace cutrank {

// A cut in the column space of a tableau: coefficients . y <= rhs.
struct TableauCut {
  std::vector<double> coefficients;
  double rhs = 0.0;
};

// Integer rounding of a tableau row y_B + a . y = b:
//   (-a + floor(a)) . y <= -b + floor(b).
// Entries within kFractionalityTolerance of an integer are snapped first.
TableauCut FractionalRoundingCut(std::span<const double> row, double rhs);

// Gomory mixed-integer cut of the same row, for rows whose nonbasic columns
// include continuous ones; integral[c] marks integer-valued columns.
TableauCut MixedIntegerRoundingCut(std::span<const double> row, double rhs,
                                   const std::vector<bool>& integral);

struct GomoryOptions {
  int max_cuts = 50;
};

// One cut per tableau row whose basic column is integer-valued and
// fractional at the root optimum. Rows touching only integer-valued columns
// use the rounding cut above; other rows use the mixed-integer form. Cuts
// are mapped back to the original variables by substituting the slack and
// shift definitions of each column, and are kept only if x*_LP violates them.
absl::StatusOr<std::vector<Cut>> GenerateGomoryCuts(
    const SimplexTableau& tableau, const ProblemProperty& property,
    const GomoryOptions& options = {});

}  // namespace cutrank

#endif  // SRC_CUTS_GOMORY_H_
