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

#ifndef SRC_LP_LINEAR_PROGRAM_H_
#define SRC_LP_LINEAR_PROGRAM_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"

namespace cutrank {

enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

struct SparseEntry {
  int index = 0;
  double value = 0.0;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

using SparseVector = std::vector<SparseEntry>;

double Dot(const SparseVector& a, const std::vector<double>& x);

struct LinearRow {
  SparseVector coefficients;
  RowSense sense = RowSense::kLessEqual;
  double rhs = 0.0;

  friend bool operator==(const LinearRow&, const LinearRow&) = default;
};

// min objective^T x  s.t. rows, lower_bounds <= x <= upper_bounds.
// Bounds may be +-kInfinity. Immutable once handed to the solver.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<LinearRow> rows;
  std::vector<double> lower_bounds;
  std::vector<double> upper_bounds;

  int num_variables() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }

  // Checks dimensions, index ranges, finiteness and bound ordering.
  absl::Status Validate() const;

  friend bool operator==(const LinearProgram&, const LinearProgram&) = default;
};

// Largest violation of any row or bound at x, scaled by max(1, |rhs|).
double MaxScaledViolation(const LinearProgram& lp, const std::vector<double>& x);

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kNumericalFailure };

std::string LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kNumericalFailure;
  std::vector<double> x;
  double objective_value = 0.0;
  // Basic columns of the standard form (see standard_form.h), one per row.
  std::vector<int> basis;
  int64_t iteration_count = 0;
};

}  // namespace cutrank

#endif  // SRC_LP_LINEAR_PROGRAM_H_
