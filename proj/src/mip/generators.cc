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

#include "src/mip/generators.h"

#include <cmath>
#include <random>
#include <vector>

#include "absl/strings/str_cat.h"
#include "src/common/tolerances.h"

namespace cutrank {
namespace {

int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

absl::Status RequirePositive(int value, const char* name) {
  if (value < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat(name, " must be >= 1, got ", value));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<MipInstance> GenerateSetCover(const SetCoverParams& params,
                                             uint64_t seed) {
  if (auto s = RequirePositive(params.n_elements, "n_elements"); !s.ok()) return s;
  if (auto s = RequirePositive(params.n_sets, "n_sets"); !s.ok()) return s;
  if (auto s = RequirePositive(params.max_cost, "max_cost"); !s.ok()) return s;
  if (!(params.density > 0.0 && params.density <= 1.0)) {
    return absl::InvalidArgumentError("density must lie in (0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution member(params.density);

  MipInstance inst;
  inst.family = InstanceFamily::kSetCover;
  inst.seed = seed;
  const int n = params.n_sets;
  for (int j = 0; j < n; ++j) {
    inst.objective.push_back(UniformInt(rng, 1, params.max_cost));
  }
  inst.lower_bounds.assign(n, 0.0);
  inst.upper_bounds.assign(n, 1.0);
  inst.integrality.assign(n, true);

  for (int i = 0; i < params.n_elements; ++i) {
    LinearRow row;
    row.sense = RowSense::kGreaterEqual;
    row.rhs = 1.0;
    for (int attempt = 0; row.coefficients.empty(); ++attempt) {
      if (attempt > params.repair_attempts) {
        return absl::ResourceExhaustedError(absl::StrCat(
            "generation error: element ", i, " left uncovered after ",
            params.repair_attempts, " redraws at density ", params.density));
      }
      for (int j = 0; j < n; ++j) {
        if (member(rng)) row.coefficients.push_back({j, 1.0});
      }
    }
    inst.rows.push_back(std::move(row));
  }
  return inst;
}

absl::StatusOr<MipInstance> GenerateKnapsack(const KnapsackParams& params,
                                             uint64_t seed) {
  if (auto s = RequirePositive(params.n_items, "n_items"); !s.ok()) return s;
  if (auto s = RequirePositive(params.max_number, "max_number"); !s.ok()) return s;
  if (auto s = RequirePositive(params.max_value, "max_value"); !s.ok()) return s;
  if (auto s = RequirePositive(params.max_weight, "max_weight"); !s.ok()) return s;
  std::mt19937_64 rng(seed);
  const int n = params.n_items;

  MipInstance inst;
  inst.family = InstanceFamily::kKnapsack;
  inst.seed = seed;
  std::vector<int> counts(n), weights(n);
  for (int j = 0; j < n; ++j) {
    const int value = UniformInt(rng, 1, params.max_value);
    weights[j] = UniformInt(rng, 1, params.max_weight);
    counts[j] = params.zero_one ? 1 : UniformInt(rng, 1, params.max_number);
    inst.objective.push_back(-value);
  }
  inst.lower_bounds.assign(n, 0.0);
  inst.integrality.assign(n, true);
  for (int j = 0; j < n; ++j) inst.upper_bounds.push_back(counts[j]);

  long long total = 0;
  LinearRow capacity;
  capacity.sense = RowSense::kLessEqual;
  for (int j = 0; j < n; ++j) {
    capacity.coefficients.push_back({j, static_cast<double>(weights[j])});
    total += static_cast<long long>(weights[j]) * counts[j];
  }
  capacity.rhs = static_cast<double>(total / 2);
  inst.rows.push_back(std::move(capacity));
  for (int j = 0; j < n; ++j) {
    inst.rows.push_back(
        LinearRow{{{j, 1.0}}, RowSense::kLessEqual, static_cast<double>(counts[j])});
  }
  return inst;
}

absl::StatusOr<MipInstance> GeneratePlanning(const PlanningParams& params,
                                             uint64_t seed) {
  if (auto s = RequirePositive(params.n_factories, "n_factories"); !s.ok()) return s;
  if (auto s = RequirePositive(params.n_demands, "n_demands"); !s.ok()) return s;
  if (auto s = RequirePositive(params.max_demand, "max_demand"); !s.ok()) return s;
  if (auto s = RequirePositive(params.max_unit_cost, "max_unit_cost"); !s.ok()) return s;
  std::mt19937_64 rng(seed);
  const int nf = params.n_factories;
  const int nd = params.n_demands;

  auto ship = [&](int f, int d) { return f * nd + d; };
  std::vector<std::vector<int>> transfer(nf, std::vector<int>(nf, -1));
  int next = nf * nd;
  for (int f = 0; f < nf; ++f) {
    for (int g = 0; g < nf; ++g) {
      if (f != g) transfer[f][g] = next++;
    }
  }
  auto produce = [&](int f) { return nf * nd + nf * (nf - 1) + f; };
  auto open = [&](int f) { return nf * nd + nf * (nf - 1) + nf + f; };
  const int n = nf * nd + nf * nf + nf;

  MipInstance inst;
  inst.family = InstanceFamily::kPlanning;
  inst.seed = seed;
  inst.objective.assign(n, 0.0);
  inst.lower_bounds.assign(n, 0.0);
  inst.upper_bounds.assign(n, kInfinity);
  inst.integrality.assign(n, false);

  std::vector<int> demand(nd);
  long long total_demand = 0;
  for (int d = 0; d < nd; ++d) {
    demand[d] = UniformInt(rng, 1, params.max_demand);
    total_demand += demand[d];
  }
  std::vector<int> capacity(nf);
  for (int f = 0; f < nf; ++f) {
    const double share = std::uniform_real_distribution<double>(1.5, 3.0)(rng);
    capacity[f] = static_cast<int>(
        std::ceil(share * static_cast<double>(total_demand) / nf));
  }
  const int c = params.max_unit_cost;
  for (int f = 0; f < nf; ++f) {
    for (int d = 0; d < nd; ++d) inst.objective[ship(f, d)] = UniformInt(rng, 1, c);
    for (int g = 0; g < nf; ++g) {
      if (f != g) inst.objective[transfer[f][g]] = UniformInt(rng, 1, (c + 1) / 2);
    }
    inst.objective[produce(f)] = UniformInt(rng, 1, (c + 1) / 2);
    // Fixed charges dominate unit costs.
    inst.objective[open(f)] = UniformInt(rng, 2 * capacity[f], 6 * capacity[f]);
    inst.upper_bounds[open(f)] = 1.0;
    inst.integrality[open(f)] = true;
  }

  for (int d = 0; d < nd; ++d) {
    LinearRow row{{}, RowSense::kGreaterEqual, static_cast<double>(demand[d])};
    for (int f = 0; f < nf; ++f) row.coefficients.push_back({ship(f, d), 1.0});
    inst.rows.push_back(std::move(row));
  }
  for (int d = 0; d < nd; ++d) {
    LinearRow row{{}, RowSense::kLessEqual,
                  static_cast<double>(demand[d] + (demand[d] + 1) / 2)};
    for (int f = 0; f < nf; ++f) row.coefficients.push_back({ship(f, d), 1.0});
    inst.rows.push_back(std::move(row));
  }
  for (int f = 0; f < nf; ++f) {
    // shipped + sent - received - produced <= 0
    LinearRow row{{}, RowSense::kLessEqual, 0.0};
    for (int d = 0; d < nd; ++d) row.coefficients.push_back({ship(f, d), 1.0});
    for (int g = 0; g < nf; ++g) {
      if (g != f) row.coefficients.push_back({transfer[f][g], 1.0});
    }
    for (int g = 0; g < nf; ++g) {
      if (g != f) row.coefficients.push_back({transfer[g][f], -1.0});
    }
    row.coefficients.push_back({produce(f), -1.0});
    inst.rows.push_back(std::move(row));
  }
  for (int f = 0; f < nf; ++f) {
    inst.rows.push_back(LinearRow{
        {{produce(f), 1.0}, {open(f), -static_cast<double>(capacity[f])}},
        RowSense::kLessEqual,
        0.0});
  }
  return inst;
}

absl::StatusOr<MipInstance> GenerateGeneralMip(const GeneralMipParams& params,
                                               uint64_t seed) {
  if (auto s = RequirePositive(params.n_vars, "n_vars"); !s.ok()) return s;
  if (auto s = RequirePositive(params.n_cons, "n_cons"); !s.ok()) return s;
  if (auto s = RequirePositive(params.max_coef, "max_coef"); !s.ok()) return s;
  if (auto s = RequirePositive(params.max_bound, "max_bound"); !s.ok()) return s;
  if (!(params.integer_fraction > 0.0 && params.integer_fraction <= 1.0)) {
    return absl::InvalidArgumentError("integer_fraction must lie in (0, 1]");
  }
  std::mt19937_64 rng(seed);
  const int n = params.n_vars;
  const int num_int = static_cast<int>(std::ceil(params.integer_fraction * n));

  MipInstance inst;
  inst.family = InstanceFamily::kGeneral;
  inst.seed = seed;
  inst.lower_bounds.assign(n, 0.0);
  inst.upper_bounds.assign(n, static_cast<double>(params.max_bound));
  inst.integrality.assign(n, false);
  for (int j = 0; j < num_int; ++j) inst.integrality[j] = true;
  for (int j = 0; j < n; ++j) {
    inst.objective.push_back(-UniformInt(rng, 1, params.max_coef));
  }
  std::vector<double> planted(n);
  for (int j = 0; j < n; ++j) planted[j] = UniformInt(rng, 0, params.max_bound);
  for (int i = 0; i < params.n_cons; ++i) {
    LinearRow row{{}, RowSense::kLessEqual, 0.0};
    double activity = 0.0;
    for (int j = 0; j < n; ++j) {
      const int a = UniformInt(rng, 0, params.max_coef);
      if (a == 0) continue;
      row.coefficients.push_back({j, static_cast<double>(a)});
      activity += a * planted[j];
    }
    row.rhs = activity + UniformInt(rng, 0, params.max_coef);
    inst.rows.push_back(std::move(row));
  }
  return inst;
}

}  // namespace cutrank
