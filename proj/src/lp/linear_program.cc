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

#include "src/lp/linear_program.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "src/common/tolerances.h"

namespace cutrank {

double Dot(const SparseVector& a, const std::vector<double>& x) {
  double sum = 0.0;
  for (const SparseEntry& e : a) sum += e.value * x[e.index];
  return sum;
}

absl::Status LinearProgram::Validate() const {
  const int n = num_variables();
  if (static_cast<int>(lower_bounds.size()) != n ||
      static_cast<int>(upper_bounds.size()) != n) {
    return absl::InvalidArgumentError(
        absl::StrCat("bound vectors must have length ", n));
  }
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(objective[j])) {
      return absl::InvalidArgumentError(
          absl::StrCat("objective coefficient ", j, " is not finite"));
    }
    if (std::isnan(lower_bounds[j]) || std::isnan(upper_bounds[j]) ||
        lower_bounds[j] == kInfinity || upper_bounds[j] == -kInfinity) {
      return absl::InvalidArgumentError(
          absl::StrCat("variable ", j, " has an invalid bound"));
    }
    if (lower_bounds[j] > upper_bounds[j]) {
      return absl::InvalidArgumentError(absl::StrCat(
          "variable ", j, " has lower bound ", lower_bounds[j],
          " above upper bound ", upper_bounds[j]));
    }
  }
  for (int i = 0; i < num_rows(); ++i) {
    const LinearRow& row = rows[i];
    if (!std::isfinite(row.rhs)) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", i, " has a non-finite rhs"));
    }
    if (static_cast<int>(row.coefficients.size()) > n) {
      return absl::InvalidArgumentError(
          absl::StrCat("row ", i, " has more than ", n, " coefficients"));
    }
    for (const SparseEntry& e : row.coefficients) {
      if (e.index < 0 || e.index >= n) {
        return absl::InvalidArgumentError(
            absl::StrCat("row ", i, " references variable ", e.index));
      }
      if (!std::isfinite(e.value)) {
        return absl::InvalidArgumentError(
            absl::StrCat("row ", i, " has a non-finite coefficient"));
      }
    }
  }
  return absl::OkStatus();
}

double MaxScaledViolation(const LinearProgram& lp,
                          const std::vector<double>& x) {
  double worst = 0.0;
  for (const LinearRow& row : lp.rows) {
    const double activity = Dot(row.coefficients, x);
    const double scale = std::max(1.0, std::abs(row.rhs));
    double violation = 0.0;
    switch (row.sense) {
      case RowSense::kLessEqual:
        violation = activity - row.rhs;
        break;
      case RowSense::kGreaterEqual:
        violation = row.rhs - activity;
        break;
      case RowSense::kEqual:
        violation = std::abs(activity - row.rhs);
        break;
    }
    worst = std::max(worst, violation / scale);
  }
  for (int j = 0; j < lp.num_variables(); ++j) {
    worst = std::max(worst, (lp.lower_bounds[j] - x[j]) /
                                std::max(1.0, std::abs(lp.lower_bounds[j])));
    if (std::isfinite(lp.upper_bounds[j])) {
      worst = std::max(worst, (x[j] - lp.upper_bounds[j]) /
                                  std::max(1.0, std::abs(lp.upper_bounds[j])));
    }
  }
  return worst;
}

std::string LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kNumericalFailure:
      return "numerical_failure";
  }
  return "unknown";
}

}  // namespace cutrank
