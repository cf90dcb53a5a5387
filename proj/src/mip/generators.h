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

// Seeded generators for the synthetic instance families. Each generator is a
// pure function of its parameters and seed.

#ifndef SRC_MIP_GENERATORS_H_
#define SRC_MIP_GENERATORS_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "src/mip/mip_instance.h"

namespace cutrank {

// Minimum-cost cover of n_elements by n_sets binary columns; one >= 1 row
// per element. Costs are integers drawn from [1, max_cost].
struct SetCoverParams {
  int n_elements = 200;
  int n_sets = 200;
  double density = 0.1;
  int max_cost = 100;
  // Redraws allowed for an element left uncovered before giving up.
  int repair_attempts = 100;
};
absl::StatusOr<MipInstance> GenerateSetCover(const SetCoverParams& params,
                                             uint64_t seed);

// Bounded-integer knapsack written as min -value^T x. One capacity row plus
// one row x_i <= count_i per item. Capacity is half the total weight of all
// copies. zero_one forces every count to 1 (binary variables).
struct KnapsackParams {
  int n_items = 700;
  int max_number = 10;
  int max_value = 10;
  int max_weight = 10;
  bool zero_one = false;
};
absl::StatusOr<MipInstance> GenerateKnapsack(const KnapsackParams& params,
                                             uint64_t seed);

// Fixed-charge production and transport. Variables, in order: shipments
// x[f][d], transfers t[f][g] (f != g), production p[f], open flags y[f]
// (binary). Rows: demand cover, receiving limit (per demand), flow balance
// and capacity linking (per factory). Size is (2D + 2F) x (FD + F^2 + F).
struct PlanningParams {
  int n_factories = 20;
  int n_demands = 50;
  int max_demand = 20;
  int max_unit_cost = 10;
};
absl::StatusOr<MipInstance> GeneratePlanning(const PlanningParams& params,
                                             uint64_t seed);

// Dense random packing MIP around a planted integer point: data in
// [0, max_coef], bounds [0, max_bound], the first ceil(integer_fraction * n)
// variables integer.
struct GeneralMipParams {
  int n_vars = 30;
  int n_cons = 30;
  double integer_fraction = 0.5;
  int max_coef = 10;
  int max_bound = 5;
};
absl::StatusOr<MipInstance> GenerateGeneralMip(const GeneralMipParams& params,
                                               uint64_t seed);

}  // namespace cutrank

#endif  // SRC_MIP_GENERATORS_H_
