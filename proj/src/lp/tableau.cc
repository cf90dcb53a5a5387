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

#include "src/lp/tableau.h"

#include <cmath>
#include <set>

#include "Eigen/Dense"
#include "absl/strings/str_cat.h"
#include "src/common/status_macros.h"

namespace cutrank {

absl::StatusOr<SimplexTableau> ExtractTableau(const StandardForm& sf,
                                              const std::vector<int>& basis) {
  const int m = sf.num_rows;
  const int n = sf.num_columns();
  if (static_cast<int>(basis.size()) != m) {
    return absl::InvalidArgumentError(
        absl::StrCat("basis has ", basis.size(), " entries for ", m, " rows"));
  }
  if (std::set<int>(basis.begin(), basis.end()).size() != basis.size()) {
    return absl::InvalidArgumentError("basis indices are not distinct");
  }
  for (int col : basis) {
    if (col < 0 || col >= n) {
      return absl::InvalidArgumentError(
          absl::StrCat("basis index ", col, " out of range"));
    }
  }

  Eigen::MatrixXd full = Eigen::MatrixXd::Zero(m, n + 1);
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k < sf.num_structural; ++k) full(r, k) = sf.at(r, k);
    full(r, sf.num_structural + r) = 1.0;
    full(r, n) = sf.rhs[r];
  }
  Eigen::MatrixXd b(m, m);
  for (int i = 0; i < m; ++i) b.col(i) = full.col(basis[i]);

  const Eigen::FullPivLU<Eigen::MatrixXd> lu(b);
  if (m > 0 && !lu.isInvertible()) {
    return absl::InternalError("numerical failure: singular basis matrix");
  }
  const Eigen::MatrixXd solved = m > 0 ? Eigen::MatrixXd(lu.solve(full))
                                       : Eigen::MatrixXd(0, n + 1);
  if (!solved.allFinite()) {
    return absl::InternalError("numerical failure: non-finite tableau");
  }

  SimplexTableau tableau;
  tableau.num_rows = m;
  tableau.num_columns = n;
  tableau.basic_vars = basis;
  tableau.rows.resize(static_cast<size_t>(m) * n);
  tableau.rhs.resize(m);
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < n; ++c) {
      const double v = solved(r, c);
      tableau.rows[static_cast<size_t>(r) * n + c] =
          std::abs(v) < 1e-12 ? 0.0 : v;
    }
    tableau.rhs[r] = solved(r, n);
  }
  // Basic columns are unit vectors by construction; remove rounding noise.
  for (int i = 0; i < m; ++i) {
    for (int r = 0; r < m; ++r) {
      tableau.rows[static_cast<size_t>(r) * n + basis[i]] = r == i ? 1.0 : 0.0;
    }
  }
  return tableau;
}

absl::StatusOr<SimplexTableau> ExtractTableau(const LinearProgram& lp,
                                              const LpSolution& solution) {
  if (solution.status != LpStatus::kOptimal) {
    return absl::FailedPreconditionError(
        "tableau requested for a non-optimal LP solution");
  }
  ASSIGN_OR_RETURN(const StandardForm sf, BuildStandardForm(lp));
  return ExtractTableau(sf, solution.basis);
}

}  // namespace cutrank
