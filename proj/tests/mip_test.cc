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

#include <cmath>
#include <filesystem>
#include <random>

#include "gtest/gtest.h"
#include "src/bnc/branch_and_cut.h"
#include "src/common/tolerances.h"
#include "src/mip/generators.h"
#include "src/mip/instance_io.h"
#include "src/mip/mip_instance.h"
#include "src/mip/problem_property.h"
#include "tests/oracles.h"

namespace cutrank {
namespace {

std::vector<int> KnapsackData(const MipInstance& inst, std::vector<int>* weights,
                              std::vector<int>* counts) {
  std::vector<int> values;
  for (int j = 0; j < inst.num_variables(); ++j) {
    values.push_back(static_cast<int>(-inst.objective[j]));
    counts->push_back(static_cast<int>(inst.upper_bounds[j]));
  }
  weights->assign(inst.num_variables(), 0);
  for (const SparseEntry& e : inst.rows[0].coefficients) {
    (*weights)[e.index] = static_cast<int>(e.value);
  }
  return values;
}

TEST(SetCoverTest, DefaultSizeContract) {
  auto inst = GenerateSetCover(SetCoverParams{}, 3);
  ASSERT_TRUE(inst.ok()) << inst.status();
  EXPECT_EQ(inst->num_rows(), 200);
  EXPECT_EQ(inst->num_variables(), 200);
  for (int j = 0; j < 200; ++j) EXPECT_TRUE(inst->IsBinary(j));
}

TEST(SetCoverTest, SingleForcedCover) {
  SetCoverParams p;
  p.n_elements = 1;
  p.n_sets = 1;
  p.density = 1.0;
  auto inst = GenerateSetCover(p, 9);
  ASSERT_TRUE(inst.ok());
  ASSERT_EQ(inst->num_rows(), 1);
  EXPECT_EQ(inst->rows[0].sense, RowSense::kGreaterEqual);
  EXPECT_EQ(inst->rows[0].rhs, 1.0);
  auto best = testing::BruteForceMip(*inst);
  ASSERT_TRUE(best.has_value());
  EXPECT_EQ(best->x[0], 1.0);
}

TEST(SetCoverTest, SmallInstancesHaveAFeasibleCover) {
  SetCoverParams p;
  p.n_elements = 5;
  p.n_sets = 8;
  p.density = 0.3;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = GenerateSetCover(p, seed);
    ASSERT_TRUE(inst.ok());
    EXPECT_FALSE(testing::FeasibleIntegerPoints(*inst).empty()) << "seed " << seed;
  }
}

TEST(SetCoverTest, HopelessDensityIsAGenerationError) {
  SetCoverParams p;
  p.n_elements = 50;
  p.n_sets = 2;
  p.density = 1e-6;
  p.repair_attempts = 3;
  auto inst = GenerateSetCover(p, 1);
  ASSERT_FALSE(inst.ok());
  EXPECT_EQ(inst.status().code(), absl::StatusCode::kResourceExhausted);
  EXPECT_NE(inst.status().message().find("generation error"), std::string::npos);
}

TEST(KnapsackTest, DefaultSizeContract) {
  auto inst = GenerateKnapsack(KnapsackParams{}, 4);
  ASSERT_TRUE(inst.ok());
  EXPECT_EQ(inst->num_rows(), 701);
  EXPECT_EQ(inst->num_variables(), 700);
}

TEST(KnapsackTest, SingleItemSelectedIffItFits) {
  KnapsackParams p;
  p.n_items = 1;
  p.max_number = 1;
  p.max_value = 1;
  p.max_weight = 1;
  for (uint64_t seed = 0; seed < 3; ++seed) {
    auto inst = GenerateKnapsack(p, seed);
    ASSERT_TRUE(inst.ok());
    EXPECT_TRUE(inst->IsBinary(0));
    const double weight = inst->rows[0].coefficients[0].value;
    auto best = testing::BruteForceMip(*inst);
    ASSERT_TRUE(best.has_value());
    EXPECT_EQ(best->x[0] == 1.0, inst->rows[0].rhs >= weight);
  }
}

TEST(KnapsackTest, OptimumMatchesDynamicProgramming) {
  KnapsackParams p;
  p.n_items = 8;
  p.max_number = 5;
  p.max_value = 10;
  p.max_weight = 10;
  for (uint64_t seed = 0; seed < 5; ++seed) {
    auto inst = GenerateKnapsack(p, seed);
    ASSERT_TRUE(inst.ok());
    std::vector<int> weights, counts;
    std::vector<int> values = KnapsackData(*inst, &weights, &counts);
    const double dp = testing::KnapsackDp(values, weights, counts,
                                          static_cast<int>(inst->rows[0].rhs));
    auto report = SolveMip(*inst, BncConfig{});
    ASSERT_TRUE(report.ok());
    ASSERT_EQ(report->status, SolveStatus::kOptimal);
    EXPECT_EQ(-report->objective, dp) << "seed " << seed;
  }
}

TEST(KnapsackTest, ZeroOneVariantIsBinary) {
  KnapsackParams p;
  p.n_items = 20;
  p.zero_one = true;
  auto inst = GenerateKnapsack(p, 2);
  ASSERT_TRUE(inst.ok());
  for (int j = 0; j < 20; ++j) EXPECT_TRUE(inst->IsBinary(j));
}

TEST(PlanningTest, DefaultSizeContract) {
  auto inst = GeneratePlanning(PlanningParams{}, 5);
  ASSERT_TRUE(inst.ok());
  EXPECT_EQ(inst->num_rows(), 140);
  EXPECT_EQ(inst->num_variables(), 1420);
  EXPECT_GE(inst->num_integer(), 1);
}

TEST(PlanningTest, SingleFactoryMustOpen) {
  PlanningParams p;
  p.n_factories = 1;
  p.n_demands = 1;
  auto inst = GeneratePlanning(p, 6);
  ASSERT_TRUE(inst.ok());
  auto best = testing::BruteForceMip(*inst);
  ASSERT_TRUE(best.has_value());
  const int open = inst->num_variables() - 1;
  EXPECT_EQ(best->x[open], 1.0);
  auto property = ComputeProblemProperty(*inst);
  ASSERT_TRUE(property.ok());
  EXPECT_LT(property->root_lp.objective_value, best->objective - 1e-6);
}

TEST(PlanningTest, OptimumMatchesPatternEnumeration) {
  PlanningParams p;
  p.n_factories = 2;
  p.n_demands = 3;
  for (uint64_t seed = 0; seed < 2; ++seed) {
    auto inst = GeneratePlanning(p, seed);
    ASSERT_TRUE(inst.ok());
    auto best = testing::BruteForceMip(*inst);
    ASSERT_TRUE(best.has_value());
    auto report = SolveMip(*inst, BncConfig{});
    ASSERT_TRUE(report.ok());
    ASSERT_EQ(report->status, SolveStatus::kOptimal);
    EXPECT_NEAR(report->objective, best->objective, 1e-6);
  }
}

TEST(GeneralMipTest, DefaultSizeContractAndPlantedPoint) {
  auto inst = GenerateGeneralMip(GeneralMipParams{}, 8);
  ASSERT_TRUE(inst.ok());
  EXPECT_EQ(inst->num_rows(), 30);
  EXPECT_EQ(inst->num_variables(), 30);
  EXPECT_EQ(inst->num_integer(), 15);
  // The relaxation is feasible and x = 0 always satisfies A x <= b, A >= 0.
  EXPECT_TRUE(inst->IsFeasible(std::vector<double>(30, 0.0), 0.0));
  auto property = ComputeProblemProperty(*inst);
  EXPECT_TRUE(property.ok());
}

TEST(GeneralMipTest, BranchAndBoundMatchesGridTimesLp) {
  GeneralMipParams p;
  p.n_vars = 4;
  p.n_cons = 4;
  for (uint64_t seed = 0; seed < 5; ++seed) {
    auto inst = GenerateGeneralMip(p, seed);
    ASSERT_TRUE(inst.ok());
    auto best = testing::BruteForceMip(*inst);
    ASSERT_TRUE(best.has_value());
    auto report = SolveMip(*inst, BncConfig{});
    ASSERT_TRUE(report.ok());
    ASSERT_EQ(report->status, SolveStatus::kOptimal);
    EXPECT_NEAR(report->objective, best->objective, 1e-6) << "seed " << seed;
  }
}

TEST(GeneratorTest, SameSeedSameInstance) {
  EXPECT_EQ(*GenerateSetCover(SetCoverParams{}, 1), *GenerateSetCover(SetCoverParams{}, 1));
  EXPECT_EQ(*GenerateKnapsack(KnapsackParams{}, 1), *GenerateKnapsack(KnapsackParams{}, 1));
  EXPECT_EQ(*GeneratePlanning(PlanningParams{}, 1), *GeneratePlanning(PlanningParams{}, 1));
  EXPECT_EQ(*GenerateGeneralMip(GeneralMipParams{}, 1),
            *GenerateGeneralMip(GeneralMipParams{}, 1));
  EXPECT_FALSE(*GenerateKnapsack(KnapsackParams{}, 1) == *GenerateKnapsack(KnapsackParams{}, 2));
}

TEST(GeneratorTest, RejectsNonPositiveParameters) {
  KnapsackParams k;
  k.n_items = 0;
  EXPECT_FALSE(GenerateKnapsack(k, 0).ok());
  PlanningParams p;
  p.n_demands = -1;
  EXPECT_FALSE(GeneratePlanning(p, 0).ok());
  GeneralMipParams g;
  g.n_cons = 0;
  EXPECT_FALSE(GenerateGeneralMip(g, 0).ok());
}

TEST(InstanceIoTest, RoundTripIsBitIdentical) {
  std::vector<MipInstance> instances = {
      *GenerateSetCover(SetCoverParams{20, 15, 0.3, 100, 100}, 1),
      *GenerateKnapsack(KnapsackParams{12, 3, 7, 9, false}, 2),
      *GeneratePlanning(PlanningParams{3, 4, 20, 10}, 3),
      *GenerateGeneralMip(GeneralMipParams{6, 5, 0.5, 10, 5}, 4)};
  MipInstance odd = instances[3];
  odd.objective[0] = 0.1 + 0.2;  // not exactly representable in short decimal
  odd.lower_bounds[1] = -kInfinity;
  odd.rows[0].rhs = 1e-300;
  instances.push_back(odd);
  for (const MipInstance& inst : instances) {
    auto parsed = ParseInstance(SerializeInstance(inst));
    ASSERT_TRUE(parsed.ok()) << parsed.status();
    EXPECT_EQ(*parsed, inst);
  }
}

TEST(InstanceIoTest, FileRoundTrip) {
  const std::string path =
      (std::filesystem::temp_directory_path() / "cutrank_mip_test.mipr").string();
  MipInstance inst = *GenerateKnapsack(KnapsackParams{10, 4, 5, 6, false}, 7);
  ASSERT_TRUE(WriteInstance(inst, path).ok());
  auto read = ReadInstance(path);
  ASSERT_TRUE(read.ok());
  EXPECT_EQ(*read, inst);
  std::filesystem::remove(path);
}

TEST(InstanceIoTest, TruncatedFileIsAParseError) {
  MipInstance inst = *GenerateKnapsack(KnapsackParams{5, 2, 3, 4, false}, 1);
  std::string text = SerializeInstance(inst);
  text.resize(text.size() / 2);
  auto parsed = ParseInstance(text);
  ASSERT_FALSE(parsed.ok());
  EXPECT_NE(parsed.status().message().find("parse error at line"), std::string::npos);
}

TEST(InstanceIoTest, MalformedFieldNamesTheLine) {
  const std::string text =
      "MIPR1\nfamily custom\nseed 0\nvariables 1\nrows 0\nv 0 abc I 1\nend\n";
  auto parsed = ParseInstance(text);
  ASSERT_FALSE(parsed.ok());
  EXPECT_NE(parsed.status().message().find("line 6"), std::string::npos)
      << parsed.status();
}

TEST(InstanceIoTest, HandWrittenFileMatchesInMemoryInstance) {
  // min -x0 - 2 x1  s.t.  x0 + x1 <= 3.5,  x0 - x1 >= -1,  x0 in [0, 4] int,
  // x1 >= 0 continuous.
  const std::string text =
      "MIPR1\n"
      "family custom\n"
      "seed 42\n"
      "variables 2\n"
      "rows 2\n"
      "v 0 4 I -1\n"
      "v 0 inf C -2\n"
      "r L 3.5 2 0 1 1 1\n"
      "r G -1 2 0 1 1 -1\n"
      "end\n";
  MipInstance expected;
  expected.objective = {-1.0, -2.0};
  expected.lower_bounds = {0.0, 0.0};
  expected.upper_bounds = {4.0, kInfinity};
  expected.integrality = {true, false};
  expected.rows = {LinearRow{{{0, 1.0}, {1, 1.0}}, RowSense::kLessEqual, 3.5},
                   LinearRow{{{0, 1.0}, {1, -1.0}}, RowSense::kGreaterEqual, -1.0}};
  expected.family = InstanceFamily::kCustom;
  expected.seed = 42;
  auto parsed = ParseInstance(text);
  ASSERT_TRUE(parsed.ok()) << parsed.status();
  EXPECT_EQ(*parsed, expected);
}

TEST(ProblemPropertyTest, IntegralRelaxationGivesIntegralPoint) {
  MipInstance inst;
  inst.objective = {-1.0, -1.0};
  inst.lower_bounds = {0.0, 0.0};
  inst.upper_bounds = {1.0, 1.0};
  inst.integrality = {true, true};
  auto property = ComputeProblemProperty(inst);
  ASSERT_TRUE(property.ok());
  for (double v : property->x_lp_star) EXPECT_EQ(v, std::round(v));
}

TEST(ProblemPropertyTest, KnapsackRelaxationBoundsTheOptimum) {
  KnapsackParams p{8, 5, 10, 10, false};
  for (uint64_t seed = 0; seed < 5; ++seed) {
    MipInstance inst = *GenerateKnapsack(p, seed);
    std::vector<int> weights, counts;
    std::vector<int> values = KnapsackData(inst, &weights, &counts);
    const double dp = testing::KnapsackDp(values, weights, counts,
                                          static_cast<int>(inst.rows[0].rhs));
    auto property = ComputeProblemProperty(inst);
    ASSERT_TRUE(property.ok());
    EXPECT_GE(-property->root_lp.objective_value, dp - 1e-9);
    EXPECT_LE(MaxScaledViolation(inst.Relaxation(), property->x_lp_star),
              kFeasibilityTolerance);
  }
}

TEST(ProblemPropertyTest, RepeatedCallsAreIdentical) {
  MipInstance inst = *GenerateGeneralMip(GeneralMipParams{}, 3);
  auto a = ComputeProblemProperty(inst);
  auto b = ComputeProblemProperty(inst);
  ASSERT_TRUE(a.ok() && b.ok());
  EXPECT_EQ(a->x_lp_star, b->x_lp_star);
}

TEST(ProblemPropertyTest, InfeasibleRelaxationIsAnError) {
  MipInstance inst;
  inst.objective = {1.0};
  inst.lower_bounds = {0.0};
  inst.upper_bounds = {1.0};
  inst.integrality = {true};
  inst.rows = {LinearRow{{{0, 1.0}}, RowSense::kGreaterEqual, 2.0}};
  EXPECT_FALSE(ComputeProblemProperty(inst).ok());
}

}  // namespace
}  // namespace cutrank
