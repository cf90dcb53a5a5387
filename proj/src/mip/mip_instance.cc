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

#include "src/mip/mip_instance.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "src/common/status_macros.h"

namespace cutrank {

std::string FamilyName(InstanceFamily family) {
  switch (family) {
    case InstanceFamily::kSetCover:
      return "set_cover";
    case InstanceFamily::kKnapsack:
      return "knapsack";
    case InstanceFamily::kPlanning:
      return "planning";
    case InstanceFamily::kGeneral:
      return "general";
    case InstanceFamily::kCustom:
      return "custom";
  }
  return "custom";
}

absl::StatusOr<InstanceFamily> ParseFamily(const std::string& name) {
  for (InstanceFamily f :
       {InstanceFamily::kSetCover, InstanceFamily::kKnapsack,
        InstanceFamily::kPlanning, InstanceFamily::kGeneral,
        InstanceFamily::kCustom}) {
    if (FamilyName(f) == name) return f;
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown family '", name, "'"));
}

int MipInstance::num_integer() const {
  return static_cast<int>(
      std::count(integrality.begin(), integrality.end(), true));
}

absl::Status MipInstance::Validate() const {
  if (static_cast<int>(integrality.size()) != num_variables()) {
    return absl::InvalidArgumentError("integrality mask has wrong length");
  }
  return Relaxation().Validate();
}

LinearProgram MipInstance::Relaxation() const {
  return LinearProgram{objective, rows, lower_bounds, upper_bounds};
}

bool MipInstance::IsFeasible(const std::vector<double>& x,
                             double tolerance) const {
  if (static_cast<int>(x.size()) != num_variables()) return false;
  for (int j = 0; j < num_variables(); ++j) {
    if (integrality[j] && std::abs(x[j] - std::round(x[j])) > tolerance) {
      return false;
    }
  }
  return MaxScaledViolation(Relaxation(), x) <= tolerance;
}

}  // namespace cutrank
