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

#ifndef SRC_LP_TABLEAU_H_
#define SRC_LP_TABLEAU_H_

#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "src/lp/linear_program.h"
#include "src/lp/standard_form.h"

namespace cutrank {

// B^-1 (A | I) and B^-1 b for an optimal basis B of the standard form.
// Column c of a row matches column c of StandardForm.
struct SimplexTableau {
  int num_rows = 0;
  int num_columns = 0;
  std::vector<double> rows;  // row-major
  std::vector<double> rhs;
  std::vector<int> basic_vars;

  double at(int r, int c) const {
    return rows[static_cast<size_t>(r) * num_columns + c];
  }
  std::span<const double> row(int r) const {
    return {rows.data() + static_cast<size_t>(r) * num_columns,
            static_cast<size_t>(num_columns)};
  }
};

// Fails with an internal error when the basis is singular or the solution is
// not optimal.
absl::StatusOr<SimplexTableau> ExtractTableau(const LinearProgram& lp,
                                              const LpSolution& solution);

absl::StatusOr<SimplexTableau> ExtractTableau(const StandardForm& sf,
                                              const std::vector<int>& basis);

}  // namespace cutrank

#endif  // SRC_LP_TABLEAU_H_
