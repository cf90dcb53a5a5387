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

#ifndef SRC_LP_STANDARD_FORM_H_
#define SRC_LP_STANDARD_FORM_H_

#include <vector>

#include "absl/status/statusor.h"
#include "src/lp/linear_program.h"

namespace cutrank {

// y = offset + terms . x over the original variables x.
struct AffineExpr {
  SparseVector terms;
  double offset = 0.0;
};

// The canonical form every LP is reduced to before pivoting:
//
//   min cost^T y  s.t.  matrix y + s = rhs,  y >= 0, s >= 0.
//
// Each original variable becomes one column y = sign * (x - offset): finite
// lower bounds are shifted to zero, variables with only an upper bound are
// reflected, and free variables are split into two columns. Finite upper
// bounds become extra rows (after the constraint rows) unless a singleton
// constraint row already implies them. Greater-equal rows are negated and
// equality rows are split into a pair of opposite less-equal rows.
//
// Columns are numbered [structural y | one slack per row].
struct StandardForm {
  struct Structural {
    int variable = 0;
    double sign = 1.0;
    double offset = 0.0;
  };

  int num_original = 0;
  int num_structural = 0;
  int num_rows = 0;
  std::vector<double> matrix;  // row-major, num_rows x num_structural
  std::vector<double> rhs;
  std::vector<double> cost;
  std::vector<Structural> structural;
  // Original row index for constraint rows, -(j + 1) for the bound row of j.
  std::vector<int> row_origin;
  bool has_split_columns = false;

  int num_columns() const { return num_structural + num_rows; }
  double at(int row, int column) const {
    return matrix[static_cast<size_t>(row) * num_structural + column];
  }

  // Expresses column value as an affine function of the original variables.
  // Not available for the two halves of a split free variable.
  absl::StatusOr<AffineExpr> ColumnInOriginalSpace(int column) const;

  // Maps structural column values back to the original variables.
  std::vector<double> ToOriginal(const std::vector<double>& y) const;
};

absl::StatusOr<StandardForm> BuildStandardForm(const LinearProgram& lp);

}  // namespace cutrank

#endif  // SRC_LP_STANDARD_FORM_H_
