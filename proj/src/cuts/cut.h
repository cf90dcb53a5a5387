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

#ifndef SRC_CUTS_CUT_H_
#define SRC_CUTS_CUT_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "src/lp/linear_program.h"

namespace cutrank {

enum class CutKind { kGomory, kCover, kClique };

std::string CutKindName(CutKind kind);
absl::StatusOr<CutKind> ParseCutKind(const std::string& name);

// alpha^T x <= beta over the original variables.
struct Cut {
  SparseVector alpha;
  double beta = 0.0;
  CutKind kind = CutKind::kGomory;
  std::optional<int> source_row;

  friend bool operator==(const Cut&, const Cut&) = default;
};

// Coefficients larger than this (in absolute value) mark a cut as unsafe.
inline constexpr double kMaxCutCoefficient = 1e6;

// At least one nonzero, finite data, indices in [0, num_variables), sorted
// and distinct, and ||alpha||_inf within kMaxCutCoefficient.
absl::Status ValidateCut(const Cut& cut, int num_variables);

// alpha^T x - beta; positive means x violates the cut.
double CutViolation(const Cut& cut, const std::vector<double>& x);

LinearRow CutAsRow(const Cut& cut);

struct CutPool {
  std::vector<Cut> cuts;
  int num_gomory = 0;
  int num_cover = 0;
  int num_clique = 0;

  int size() const { return static_cast<int>(cuts.size()); }
  bool empty() const { return cuts.empty(); }

  friend bool operator==(const CutPool&, const CutPool&) = default;
};

// Concatenates cut lists in order, dropping any cut identical to an earlier
// one after scaling to unit max-norm. Recomputes per-kind counts.
CutPool MergeCuts(const std::vector<std::vector<Cut>>& groups);

}  // namespace cutrank

#endif  // SRC_CUTS_CUT_H_
