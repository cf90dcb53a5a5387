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

#ifndef SRC_MIP_MIP_INSTANCE_H_
#define SRC_MIP_MIP_INSTANCE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "src/lp/linear_program.h"

namespace cutrank {

enum class InstanceFamily { kSetCover, kKnapsack, kPlanning, kGeneral, kCustom };

std::string FamilyName(InstanceFamily family);
absl::StatusOr<InstanceFamily> ParseFamily(const std::string& name);

// min objective^T x  s.t. rows, bounds, x_j integer where integrality[j].
struct MipInstance {
  std::vector<double> objective;
  std::vector<LinearRow> rows;
  std::vector<double> lower_bounds;
  std::vector<double> upper_bounds;
  std::vector<bool> integrality;
  InstanceFamily family = InstanceFamily::kCustom;
  uint64_t seed = 0;

  int num_variables() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  int num_integer() const;

  // Integer variable with bounds exactly [0, 1].
  bool IsBinary(int j) const {
    return integrality[j] && lower_bounds[j] == 0.0 && upper_bounds[j] == 1.0;
  }

  absl::Status Validate() const;
  LinearProgram Relaxation() const;

  // Rows, bounds and integrality, each within tolerance.
  bool IsFeasible(const std::vector<double>& x, double tolerance) const;

  friend bool operator==(const MipInstance&, const MipInstance&) = default;
};

}  // namespace cutrank

#endif  // SRC_MIP_MIP_INSTANCE_H_
