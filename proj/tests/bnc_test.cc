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
#include <random>

#include "gtest/gtest.h"
#include "src/bnc/branch_and_cut.h"
#include "src/bnc/evaluation.h"
#include "src/common/tolerances.h"
#include "src/mip/generators.h"
#include "tests/oracles.h"

namespace cutrank {
namespace {

std::vector<SelectionPolicy> AllPolicies() {
  return ComparisonPolicies(77, std::make_shared<const MlpParams>(InitializeMlp(3)));
}

BncConfig WithPolicy(const SelectionPolicy& policy) {
  BncConfig config;
  config.policy = policy;
  return config;
}

TEST(BranchAndCutTest, IntegralRootIsSolvedAtTheRoot) {
  MipInstance inst;
  inst.objective = {-1.0, -2.0};
  inst.lower_bounds = {0.0, 0.0};
  inst.upper_bounds = {3.0, 2.0};
  inst.integrality = {true, true};
  inst.rows = {LinearRow{{{0, 1.0}, {1, 1.0}}, RowSense::kLessEqual, 4.0}};
  for (const SelectionPolicy& policy : AllPolicies()) {
    auto report = SolveMip(inst, WithPolicy(policy));
    ASSERT_TRUE(report.ok());
    EXPECT_EQ(report->status, SolveStatus::kOptimal);
    EXPECT_EQ(report->nodes_visited, 1);
    EXPECT_EQ(report->objective, -6.0);
  }
}

TEST(BranchAndCutTest, TwelveItemKnapsackMatchesDynamicProgramming) {
  KnapsackParams params;
  params.n_items = 12;
  params.max_value = 30;
  params.max_weight = 30;
  params.max_number = 4;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    MipInstance inst = *GenerateKnapsack(params, seed);
    const double dp = testing::KnapsackOptimum(inst);
    for (const SelectionPolicy& policy : AllPolicies()) {
      auto report = SolveMip(inst, WithPolicy(policy));
      ASSERT_TRUE(report.ok());
      ASSERT_EQ(report->status, SolveStatus::kOptimal);
      EXPECT_EQ(-report->objective, dp) << "seed " << seed << " " << policy.Name();
      EXPECT_TRUE(inst.IsFeasible(report->incumbent, kFeasibilityTolerance));
    }
  }
}

TEST(BranchAndCutTest, RepeatedSolvesAreIdentical) {
  KnapsackParams params;
  params.n_items = 40;
  params.max_value = 100;
  params.max_weight = 100;
  MipInstance inst = *GenerateKnapsack(params, 5);
  for (const SelectionPolicy& policy : AllPolicies()) {
    auto a = SolveMip(inst, WithPolicy(policy));
    auto b = SolveMip(inst, WithPolicy(policy));
    ASSERT_TRUE(a.ok() && b.ok());
    EXPECT_EQ(a->incumbent, b->incumbent);
    EXPECT_EQ(a->objective, b->objective);
    EXPECT_EQ(a->nodes_visited, b->nodes_visited);
    EXPECT_EQ(a->simplex_iterations_total, b->simplex_iterations_total);
    EXPECT_EQ(a->bound_trace, b->bound_trace);
    EXPECT_EQ(a->cuts_added, b->cuts_added);
  }
}

TEST(BranchAndCutTest, BestBoundSequenceNeverDecreases) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    MipInstance inst = testing::RandomSmallMip(rng, 6, 2, 5);
    for (const SelectionPolicy& policy : AllPolicies()) {
      auto report = SolveMip(inst, WithPolicy(policy));
      ASSERT_TRUE(report.ok());
      for (size_t k = 1; k < report->bound_trace.size(); ++k) {
        EXPECT_GE(report->bound_trace[k], report->bound_trace[k - 1] - 1e-12);
      }
    }
  }
}

TEST(BranchAndCutTest, CutsNeverChangeTheOptimum) {
  std::mt19937_64 rng(13);
  int with_cuts = 0;
  for (int trial = 0; trial < 100; ++trial) {
    MipInstance inst = testing::RandomSmallMip(rng, 6, 2, 5);
    auto brute = testing::BruteForceMip(inst);
    auto base = SolveMip(inst, BncConfig{});
    ASSERT_TRUE(base.ok());
    if (!brute.has_value()) {
      EXPECT_EQ(base->status, SolveStatus::kInfeasible) << "trial " << trial;
      continue;
    }
    ASSERT_EQ(base->status, SolveStatus::kOptimal) << "trial " << trial;
    EXPECT_NEAR(base->objective, brute->objective, 1e-6) << "trial " << trial;
    for (const SelectionPolicy& policy : AllPolicies()) {
      auto report = SolveMip(inst, WithPolicy(policy));
      ASSERT_TRUE(report.ok());
      ASSERT_EQ(report->status, SolveStatus::kOptimal);
      EXPECT_EQ(report->objective, base->objective)
          << "trial " << trial << " policy " << policy.Name();
      if (report->cuts_added > 0) ++with_cuts;
    }
  }
  EXPECT_GT(with_cuts, 100);
}

TEST(BranchAndCutTest, NodeLimitReportsFeasibleOrLimit) {
  KnapsackParams params;
  params.n_items = 60;
  params.max_value = 100;
  params.max_weight = 100;
  MipInstance inst = *GenerateKnapsack(params, 2);
  BncConfig config;
  config.node_limit = 2;
  auto report = SolveMip(inst, config);
  ASSERT_TRUE(report.ok());
  EXPECT_LE(report->nodes_visited, 2);
  EXPECT_TRUE(report->status == SolveStatus::kFeasible ||
              report->status == SolveStatus::kLimitReached ||
              report->status == SolveStatus::kOptimal);
  EXPECT_FALSE(report->status == SolveStatus::kOptimal && report->nodes_visited == 2 &&
               report->bound_trace.size() > 2);
  config.node_limit = 0;
  EXPECT_FALSE(SolveMip(inst, config).ok());
}

TEST(BranchAndCutTest, InfeasibleAndUnboundedInstances) {
  MipInstance inst;
  inst.objective = {1.0};
  inst.lower_bounds = {0.0};
  inst.upper_bounds = {1.0};
  inst.integrality = {true};
  inst.rows = {LinearRow{{{0, 2.0}}, RowSense::kEqual, 1.0}};
  auto report = SolveMip(inst, BncConfig{});
  ASSERT_TRUE(report.ok());
  EXPECT_EQ(report->status, SolveStatus::kInfeasible);
  inst.rows = {LinearRow{{{0, 1.0}}, RowSense::kGreaterEqual, 3.0}};
  EXPECT_EQ(SolveMip(inst, BncConfig{})->status, SolveStatus::kInfeasible);
  inst.upper_bounds = {kInfinity};
  inst.objective = {-1.0};
  EXPECT_EQ(SolveMip(inst, BncConfig{})->status, SolveStatus::kUnbounded);
}

TEST(EvaluationTest, ReductionRatioExamples) {
  EXPECT_DOUBLE_EQ(ReductionRatio(10.0, 8.0), 0.2);
  EXPECT_EQ(ReductionRatio(10.0, 10.0), 0.0);
  EXPECT_EQ(ReductionRatio(4.0, 6.0), -0.5);
  EXPECT_EQ(ReductionRatio(0.0, 3.0), 0.0);
}

TEST(EvaluationTest, SummaryMatchesOnePassStatistics) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> normal(0.3, 0.5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> values(std::uniform_int_distribution<int>(1, 60)(rng));
    for (double& v : values) v = normal(rng);
    // Welford's update.
    double mean = 0.0, m2 = 0.0;
    int count = 0;
    for (double v : values) {
      ++count;
      const double delta = v - mean;
      mean += delta / count;
      m2 += delta * (v - mean);
    }
    MeanStd s = Summarize(values);
    EXPECT_EQ(s.count, count);
    EXPECT_NEAR(s.mean, mean, 1e-12);
    EXPECT_NEAR(s.stddev, std::sqrt(m2 / count), 1e-12);
  }
  EXPECT_EQ(Summarize({}).count, 0);
}

TEST(EvaluationTest, NoCutsMeansZeroReduction) {
  KnapsackParams params;
  params.n_items = 30;
  params.max_value = 100;
  params.max_weight = 100;
  std::vector<MipInstance> instances;
  std::vector<std::string> names;
  for (uint64_t seed = 0; seed < 4; ++seed) {
    instances.push_back(*GenerateKnapsack(params, seed));
    names.push_back("k" + std::to_string(seed));
  }
  auto baselines = SolveBaselines(instances, BncConfig{});
  ASSERT_TRUE(baselines.ok());
  auto none = EvaluatePolicy(names, instances, BncConfig{}, *baselines);
  ASSERT_TRUE(none.ok());
  EXPECT_EQ(none->r_nodes.mean, 0.0);
  EXPECT_EQ(none->r_time.mean, 0.0);
  for (const MetricsRow& row : none->rows) {
    EXPECT_EQ(row.r_nodes, 0.0);
    EXPECT_EQ(row.r_time, 0.0);
  }
  BncConfig random;
  random.policy = SelectionPolicy::Random(1);
  auto parallel = EvaluatePolicy(names, instances, random, *baselines, 3);
  auto serial = EvaluatePolicy(names, instances, random, *baselines, 1);
  ASSERT_TRUE(parallel.ok() && serial.ok());
  EXPECT_EQ(MetricsCsvRows(*parallel, false), MetricsCsvRows(*serial, false));
  EXPECT_EQ(SummaryCsvRow(*parallel), SummaryCsvRow(*serial));
}

TEST(EvaluationTest, RatiosAndExclusions) {
  SolveReport base;
  base.status = SolveStatus::kOptimal;
  base.nodes_visited = 10;
  base.simplex_iterations_total = 50;
  SolveReport with = base;
  with.nodes_visited = 8;
  with.simplex_iterations_total = 40;
  SolveReport limited = base;
  limited.status = SolveStatus::kFeasible;
  auto eval = MetricsFromReports({"a", "b"}, "violation", {with, limited}, {base, base},
                                 FeedbackMode::kDeterministicWork);
  ASSERT_TRUE(eval.ok());
  EXPECT_EQ(eval->excluded, 1);
  EXPECT_EQ(eval->r_nodes.count, 1);
  EXPECT_DOUBLE_EQ(eval->r_nodes.mean, 0.2);
  EXPECT_DOUBLE_EQ(eval->r_time.mean, 0.2);
  EXPECT_FALSE(eval->rows[1].r_nodes.has_value());
  const std::string csv = MetricsCsvRows(*eval, false);
  EXPECT_NE(csv.find("b,violation,feasible,10,50,0,NA,NA"), std::string::npos) << csv;
  EXPECT_EQ(MetricsCsvHeader(), "instance,policy,status,nodes,simplex_iters,wall_time,r_time,r_nodes\n");

  auto mismatched = MetricsFromReports({"a", "b"}, "violation", {with}, {base, base},
                                       FeedbackMode::kDeterministicWork);
  EXPECT_FALSE(mismatched.ok());
  EXPECT_NE(mismatched.status().message().find("validation error"), std::string::npos);
}

TEST(EvaluationTest, FeedbackModesRoundTrip) {
  for (FeedbackMode mode : {FeedbackMode::kWallClock, FeedbackMode::kDeterministicWork}) {
    EXPECT_EQ(*ParseFeedbackMode(FeedbackModeName(mode)), mode);
  }
  EXPECT_FALSE(ParseFeedbackMode("cpu").ok());
  SolveReport r;
  r.simplex_iterations_total = 7;
  r.wall_time = 0.5;
  EXPECT_EQ(r.Effort(FeedbackMode::kDeterministicWork), 7.0);
  EXPECT_EQ(r.Effort(FeedbackMode::kWallClock), 0.5);
}

}  // namespace
}  // namespace cutrank
