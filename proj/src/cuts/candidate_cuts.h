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

#ifndef SRC_CUTS_CANDIDATE_CUTS_H_
#define SRC_CUTS_CANDIDATE_CUTS_H_

#include "absl/status/statusor.h"
#include "src/cuts/cut.h"
#include "src/lp/tableau.h"
#include "src/mip/mip_instance.h"
#include "src/mip/problem_property.h"

namespace cutrank {

struct CutGenerationOptions {
  int max_gomory = 50;
  int max_cover = 50;
  int max_clique = 50;
};

// The root candidate set: Gomory cuts (by tableau row), then cover cuts (by
// source row), then clique cuts (by seed variable), deduplicated. A pure
// function of the instance and its root LP.
absl::StatusOr<CutPool> CandidateCuts(const MipInstance& instance,
                                      const ProblemProperty& property,
                                      const SimplexTableau& tableau,
                                      const CutGenerationOptions& options = {});

// Same, extracting the tableau from the property's root LP.
absl::StatusOr<CutPool> CandidateCuts(const MipInstance& instance,
                                      const ProblemProperty& property,
                                      const CutGenerationOptions& options = {});

}  // namespace cutrank

#endif  // SRC_CUTS_CANDIDATE_CUTS_H_
