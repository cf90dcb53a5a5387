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

#include "src/cuts/cut.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <utility>

#include "absl/strings/str_cat.h"

namespace cutrank {
namespace {

using CutKey = std::vector<int64_t>;

CutKey NormalizedKey(const Cut& cut) {
  double scale = 0.0;
  for (const SparseEntry& e : cut.alpha) scale = std::max(scale, std::abs(e.value));
  CutKey key;
  key.reserve(2 * cut.alpha.size() + 1);
  for (const SparseEntry& e : cut.alpha) {
    key.push_back(e.index);
    key.push_back(std::llround(e.value / scale * 1e9));
  }
  key.push_back(std::llround(cut.beta / scale * 1e9));
  return key;
}

}  // namespace

std::string CutKindName(CutKind kind) {
  switch (kind) {
    case CutKind::kGomory:
      return "gomory";
    case CutKind::kCover:
      return "cover";
    case CutKind::kClique:
      return "clique";
  }
  return "gomory";
}

absl::StatusOr<CutKind> ParseCutKind(const std::string& name) {
  for (CutKind kind : {CutKind::kGomory, CutKind::kCover, CutKind::kClique}) {
    if (CutKindName(kind) == name) return kind;
  }
  return absl::InvalidArgumentError(absl::StrCat("unknown cut kind '", name, "'"));
}

absl::Status ValidateCut(const Cut& cut, int num_variables) {
  if (cut.alpha.empty()) {
    return absl::InvalidArgumentError("cut has no nonzero coefficient");
  }
  if (!std::isfinite(cut.beta)) {
    return absl::InvalidArgumentError("cut rhs is not finite");
  }
  int previous = -1;
  for (const SparseEntry& e : cut.alpha) {
    if (e.index <= previous || e.index >= num_variables) {
      return absl::InvalidArgumentError(
          absl::StrCat("cut index ", e.index, " out of order or range"));
    }
    previous = e.index;
    if (!std::isfinite(e.value) || e.value == 0.0) {
      return absl::InvalidArgumentError("cut coefficient is zero or not finite");
    }
    if (std::abs(e.value) > kMaxCutCoefficient) {
      return absl::InvalidArgumentError("cut coefficient exceeds the cap");
    }
  }
  return absl::OkStatus();
}

double CutViolation(const Cut& cut, const std::vector<double>& x) {
  return Dot(cut.alpha, x) - cut.beta;
}

LinearRow CutAsRow(const Cut& cut) {
  return LinearRow{cut.alpha, RowSense::kLessEqual, cut.beta};
}

CutPool MergeCuts(const std::vector<std::vector<Cut>>& groups) {
  CutPool pool;
  std::set<CutKey> seen;
  for (const auto& group : groups) {
    for (const Cut& cut : group) {
      if (!seen.insert(NormalizedKey(cut)).second) continue;
      pool.cuts.push_back(cut);
      switch (cut.kind) {
        case CutKind::kGomory:
          ++pool.num_gomory;
          break;
        case CutKind::kCover:
          ++pool.num_cover;
          break;
        case CutKind::kClique:
          ++pool.num_clique;
          break;
      }
    }
  }
  return pool;
}

}  // namespace cutrank
