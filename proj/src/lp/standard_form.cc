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

#include "src/lp/standard_form.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"
#include "src/common/status_macros.h"
#include "src/common/tolerances.h"

namespace cutrank {
namespace {

// Tightest upper bound on x_j implied by singleton constraint rows.
std::vector<double> SingletonUpperBounds(const LinearProgram& lp) {
  std::vector<double> implied(lp.num_variables(), kInfinity);
  for (const LinearRow& row : lp.rows) {
    if (row.coefficients.size() != 1) continue;
    const SparseEntry& e = row.coefficients.front();
    double bound = kInfinity;
    if (row.sense == RowSense::kLessEqual && e.value > 0.0) {
      bound = row.rhs / e.value;
    } else if (row.sense == RowSense::kGreaterEqual && e.value < 0.0) {
      bound = row.rhs / e.value;
    }
    implied[e.index] = std::min(implied[e.index], bound);
  }
  return implied;
}

}  // namespace

absl::StatusOr<AffineExpr> StandardForm::ColumnInOriginalSpace(
    int column) const {
  if (column < 0 || column >= num_columns()) {
    return absl::OutOfRangeError(absl::StrCat("column ", column));
  }
  if (column < num_structural) {
    if (has_split_columns) {
      for (int k = 0; k < num_structural; ++k) {
        if (k != column && structural[k].variable == structural[column].variable) {
          return absl::FailedPreconditionError(
              "split free variable has no affine image");
        }
      }
    }
    const Structural& s = structural[column];
    return AffineExpr{{{s.variable, s.sign}}, -s.sign * s.offset};
  }
  // slack_r = rhs_r - sum_k matrix[r][k] * sign_k * (x_j - offset_k)
  const int r = column - num_structural;
  AffineExpr expr;
  expr.offset = rhs[r];
  std::vector<double> dense(num_original, 0.0);
  for (int k = 0; k < num_structural; ++k) {
    const double a = at(r, k);
    if (a == 0.0) continue;
    const Structural& s = structural[k];
    dense[s.variable] -= a * s.sign;
    expr.offset += a * s.sign * s.offset;
  }
  for (int j = 0; j < num_original; ++j) {
    if (dense[j] != 0.0) expr.terms.push_back({j, dense[j]});
  }
  return expr;
}

std::vector<double> StandardForm::ToOriginal(const std::vector<double>& y) const {
  std::vector<double> x(num_original, 0.0);
  std::vector<bool> seen(num_original, false);
  for (int k = 0; k < num_structural; ++k) {
    const Structural& s = structural[k];
    if (!seen[s.variable]) {
      x[s.variable] = s.offset;
      seen[s.variable] = true;
    }
    x[s.variable] += s.sign * y[k];
  }
  return x;
}

absl::StatusOr<StandardForm> BuildStandardForm(const LinearProgram& lp) {
  RETURN_IF_ERROR(lp.Validate());
  StandardForm sf;
  const int n = lp.num_variables();
  sf.num_original = n;

  // Column layout; first_column[j] and, for split variables, a second column.
  std::vector<std::vector<int>> columns_of(n);
  for (int j = 0; j < n; ++j) {
    const double lo = lp.lower_bounds[j];
    const double up = lp.upper_bounds[j];
    auto add = [&](double sign, double offset) {
      columns_of[j].push_back(static_cast<int>(sf.structural.size()));
      sf.structural.push_back({j, sign, offset});
    };
    if (std::isfinite(lo)) {
      add(1.0, lo);
    } else if (std::isfinite(up)) {
      add(-1.0, up);
    } else {
      add(1.0, 0.0);
      add(-1.0, 0.0);
      sf.has_split_columns = true;
    }
  }
  sf.num_structural = static_cast<int>(sf.structural.size());
  sf.cost.assign(sf.num_structural, 0.0);
  for (int k = 0; k < sf.num_structural; ++k) {
    sf.cost[k] = lp.objective[sf.structural[k].variable] * sf.structural[k].sign;
  }

  std::vector<std::vector<double>> dense_rows;
  auto emit = [&](std::vector<double> row, double rhs, int origin) {
    dense_rows.push_back(std::move(row));
    sf.rhs.push_back(rhs);
    sf.row_origin.push_back(origin);
  };

  for (int i = 0; i < lp.num_rows(); ++i) {
    const LinearRow& row = lp.rows[i];
    std::vector<double> dense(sf.num_structural, 0.0);
    double rhs = row.rhs;
    for (const SparseEntry& e : row.coefficients) {
      for (int k : columns_of[e.index]) {
        dense[k] += e.value * sf.structural[k].sign;
      }
      rhs -= e.value * sf.structural[columns_of[e.index].front()].offset;
    }
    if (row.sense == RowSense::kLessEqual || row.sense == RowSense::kEqual) {
      emit(dense, rhs, i);
    }
    if (row.sense == RowSense::kGreaterEqual || row.sense == RowSense::kEqual) {
      for (double& v : dense) v = -v;
      emit(std::move(dense), -rhs, i);
    }
  }

  const std::vector<double> implied = SingletonUpperBounds(lp);
  for (int j = 0; j < n; ++j) {
    const double lo = lp.lower_bounds[j];
    const double up = lp.upper_bounds[j];
    if (!std::isfinite(lo) || !std::isfinite(up)) continue;
    if (implied[j] <= up) continue;
    std::vector<double> dense(sf.num_structural, 0.0);
    dense[columns_of[j].front()] = 1.0;
    emit(std::move(dense), up - lo, -(j + 1));
  }

  sf.num_rows = static_cast<int>(dense_rows.size());
  sf.matrix.reserve(static_cast<size_t>(sf.num_rows) * sf.num_structural);
  for (const auto& row : dense_rows) {
    sf.matrix.insert(sf.matrix.end(), row.begin(), row.end());
  }
  return sf;
}

}  // namespace cutrank
