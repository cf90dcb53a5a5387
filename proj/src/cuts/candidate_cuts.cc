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

#include "src/cuts/candidate_cuts.h"

#include "src/common/status_macros.h"
#include "src/cuts/clique.h"
#include "src/cuts/cover.h"
#include "src/cuts/gomory.h"

namespace cutrank {

absl::StatusOr<CutPool> CandidateCuts(const MipInstance& instance,
                                      const ProblemProperty& property,
                                      const SimplexTableau& tableau,
                                      const CutGenerationOptions& options) {
  ASSIGN_OR_RETURN(std::vector<Cut> gomory,
                   GenerateGomoryCuts(tableau, property, {options.max_gomory}));
  return MergeCuts({std::move(gomory),
                    GenerateCoverCuts(instance, options.max_cover),
                    GenerateCliqueCuts(instance, options.max_clique)});
}

absl::StatusOr<CutPool> CandidateCuts(const MipInstance& instance,
                                      const ProblemProperty& property,
                                      const CutGenerationOptions& options) {
  ASSIGN_OR_RETURN(const SimplexTableau tableau,
                   ExtractTableau(instance.Relaxation(), property.root_lp));
  return CandidateCuts(instance, property, tableau, options);
}

}  // namespace cutrank
