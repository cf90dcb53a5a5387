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

#include <algorithm>
#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "src/features/cut_features.h"
#include "tests/oracles.h"

namespace cutrank {
namespace {

struct FeatureCase {
  MipInstance instance;
  ProblemProperty property;
  Cut cut;
  std::vector<double> dense_alpha;
};

// Builds the property by hand; features only read x* and the instance.
void RandomCase(std::mt19937_64& rng, FeatureCase& c) {
  std::uniform_real_distribution<double> real(-5.0, 5.0);
  const int n = std::uniform_int_distribution<int>(1, 12)(rng);
  c.instance = MipInstance{};
  c.instance.objective.resize(n);
  c.instance.lower_bounds.assign(n, 0.0);
  c.instance.upper_bounds.assign(n, 10.0);
  c.instance.integrality.resize(n);
  std::vector<double> x(n);
  for (int j = 0; j < n; ++j) {
    c.instance.objective[j] = real(rng);
    c.instance.integrality[j] = rng() % 3 != 0;
    x[j] = std::uniform_real_distribution<double>(0.0, 10.0)(rng);
  }
  c.cut = Cut{};
  c.dense_alpha.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    if (rng() % 3 == 0) continue;
    c.dense_alpha[j] = real(rng);
    c.cut.alpha.push_back({j, c.dense_alpha[j]});
  }
  if (c.cut.alpha.empty()) {
    c.dense_alpha[0] = 1.5;
    c.cut.alpha.push_back({0, 1.5});
  }
  c.cut.beta = rng() % 10 == 0 ? 0.0 : real(rng) * 4.0;
  c.property = ProblemProperty{};
  c.property.instance = &c.instance;
  c.property.x_lp_star = x;
}

void ExpectNear(double got, double want, double tol, const std::string& what) {
  EXPECT_LE(std::abs(got - want), tol * std::max(1.0, std::abs(want)))
      << what << ": got " << got << " want " << want;
}

TEST(FeatureTest, FourVariableExample) {
  MipInstance inst;
  inst.objective = {2.0, 4.0, 1.0, 1.0};
  inst.lower_bounds.assign(4, 0.0);
  inst.upper_bounds.assign(4, 1.0);
  inst.integrality.assign(4, true);
  ProblemProperty property;
  property.instance = &inst;
  property.x_lp_star = {0.75, 0.75, 0.0, 0.0};
  Cut cut{{{0, 1.0}, {1, 1.0}}, 1.0, CutKind::kCover, 0};
  CutFeatures f = ComputeCutFeatures(cut, property);
  EXPECT_EQ(f[kSupport], 0.5);
  EXPECT_EQ(f[kIntegralSupport], 1.0);
  EXPECT_EQ(f[kCoefMean], 1.0);
  EXPECT_EQ(f[kCoefStd], 0.0);
  EXPECT_EQ(f[kObjMean], 3.0);
  EXPECT_EQ(f[kObjMax], 4.0);
  EXPECT_EQ(f[kObjMin], 2.0);
  EXPECT_EQ(f[kObjStd], 1.0);
  EXPECT_EQ(f[kNormViolation], 0.5);
  EXPECT_NEAR(f[kDistance], 0.5 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(f[kParallelism], 6.0 / (std::sqrt(22.0) * std::sqrt(2.0)), 1e-15);
  EXPECT_NEAR(f[kExpectedImprovement], std::sqrt(22.0) * 0.5 / std::sqrt(2.0), 1e-15);
}

TEST(FeatureTest, MatchesScalarOracleOnRandomPairs) {
  std::mt19937_64 rng(101);
  FeatureCase c;
  for (int trial = 0; trial < 1000; ++trial) {
    RandomCase(rng, c);
    CutFeatures f = ComputeCutFeatures(c.cut, c.property);
    auto want = testing::ScalarCutFeatures(c.dense_alpha, c.cut.beta, c.instance.objective,
                                           c.property.x_lp_star, c.instance.integrality);
    for (int d = 0; d < kNumFeatures; ++d) {
      ExpectNear(f[d], want[d], 1e-9,
                 std::string(FeatureNames()[d]) + " trial " + std::to_string(trial));
    }
  }
}

TEST(FeatureTest, InvariantsHoldOnRandomPairs) {
  std::mt19937_64 rng(103);
  FeatureCase c;
  for (int trial = 0; trial < 1000; ++trial) {
    RandomCase(rng, c);
    CutFeatures f = ComputeCutFeatures(c.cut, c.property);
    for (double v : f) EXPECT_FALSE(std::isnan(v));
    EXPECT_GE(f[kSupport], 0.0);
    EXPECT_LE(f[kSupport], 1.0);
    EXPECT_GE(f[kIntegralSupport], 0.0);
    EXPECT_LE(f[kIntegralSupport], 1.0);
    EXPECT_GE(f[kNormViolation], 0.0);
    EXPECT_GE(f[kDistance], 0.0);
    EXPECT_GE(f[kParallelism], -1.0);
    EXPECT_LE(f[kParallelism], 1.0);
    EXPECT_GE(f[kExpectedImprovement], 0.0);
  }
}

TEST(FeatureTest, PositiveScalingLeavesGeometryUnchanged) {
  std::mt19937_64 rng(107);
  FeatureCase c;
  for (int trial = 0; trial < 200; ++trial) {
    RandomCase(rng, c);
    const double s = std::uniform_real_distribution<double>(0.1, 20.0)(rng);
    Cut scaled = c.cut;
    for (SparseEntry& e : scaled.alpha) e.value *= s;
    scaled.beta *= s;
    CutFeatures a = ComputeCutFeatures(c.cut, c.property);
    CutFeatures b = ComputeCutFeatures(scaled, c.property);
    for (int d : {kSupport, kIntegralSupport, kDistance, kParallelism, kExpectedImprovement}) {
      ExpectNear(b[d], a[d], 1e-9, std::string(FeatureNames()[d]));
    }
    if (c.cut.beta != 0.0) ExpectNear(b[kNormViolation], a[kNormViolation], 1e-9, "norm_violation");
    for (int d : {kCoefMean, kCoefMax, kCoefMin, kCoefStd}) {
      ExpectNear(b[d], s * a[d], 1e-9, std::string(FeatureNames()[d]));
    }
    for (int d : {kObjMean, kObjMax, kObjMin, kObjStd}) EXPECT_EQ(b[d], a[d]);
  }
}

TEST(FeatureTest, ObjectiveAlignedCutHasParallelismOne) {
  MipInstance inst;
  inst.objective = {1.0, -2.0, 3.0};
  inst.lower_bounds.assign(3, 0.0);
  inst.upper_bounds.assign(3, 1.0);
  inst.integrality.assign(3, false);
  ProblemProperty property{&inst, {0.5, 0.5, 0.5}, {}};
  Cut cut{{{0, 1.0}, {1, -2.0}, {2, 3.0}}, 7.0, CutKind::kGomory, std::nullopt};
  EXPECT_NEAR(ComputeCutFeatures(cut, property)[kParallelism], 1.0, 1e-15);
  EXPECT_EQ(ComputeCutFeatures(cut, property)[kIntegralSupport], 0.0);
  inst.objective = {0.0, 0.0, 0.0};
  EXPECT_EQ(ComputeCutFeatures(cut, property)[kParallelism], 0.0);
}

TEST(FeatureTest, ZeroRhsUsesUnguardedViolation) {
  MipInstance inst;
  inst.objective = {1.0, 1.0};
  inst.lower_bounds.assign(2, 0.0);
  inst.upper_bounds.assign(2, 1.0);
  inst.integrality.assign(2, true);
  ProblemProperty property{&inst, {0.5, 0.25}, {}};
  Cut cut{{{0, 1.0}, {1, -1.0}}, 0.0, CutKind::kGomory, std::nullopt};
  EXPECT_DOUBLE_EQ(ComputeCutFeatures(cut, property)[kNormViolation], 0.25);
}

TEST(FeatureTest, NamesAreFrozen) {
  EXPECT_EQ(FeatureCsvHeader(),
            "coef_mean,coef_max,coef_min,coef_std,obj_mean,obj_max,obj_min,obj_std,support,"
            "integral_support,norm_violation,distance,parallelism,expected_improvement");
  FeatureVector v{};
  for (int d = 0; d < kNumFeatures; ++d) v[d] = 0.1 * d - 1.0 / 3.0;
  std::string row = FeatureCsvRow(v);
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t pos; (pos = row.find(',', start)) != std::string::npos; start = pos + 1) {
    parts.push_back(row.substr(start, pos - start));
  }
  parts.push_back(row.substr(start));
  ASSERT_EQ(parts.size(), static_cast<size_t>(kNumFeatures));
  for (int d = 0; d < kNumFeatures; ++d) EXPECT_EQ(std::stod(parts[d]), v[d]);
}

TEST(ZScoreTest, SingleVectorNormalizesToZero) {
  FeatureVector v{};
  for (int d = 0; d < kNumFeatures; ++d) v[d] = d * 1.7 - 3.0;
  std::vector<FeatureVector> pop = {v};
  auto stats = ZScoreFit(pop);
  ASSERT_TRUE(stats.ok());
  for (double out : ZScoreApply(v, *stats)) EXPECT_EQ(out, 0.0);
}

TEST(ZScoreTest, TwoPointsMapToPlusMinusOne) {
  FeatureVector a{}, b{};
  a[3] = 1.0;
  b[3] = 3.0;
  std::vector<FeatureVector> pop = {a, b};
  auto stats = ZScoreFit(pop);
  ASSERT_TRUE(stats.ok());
  EXPECT_EQ(ZScoreApply(a, *stats)[3], -1.0);
  EXPECT_EQ(ZScoreApply(b, *stats)[3], 1.0);
  EXPECT_EQ(ZScoreApply(a, *stats)[0], 0.0);
}

TEST(ZScoreTest, RandomPopulationIsStandardized) {
  std::mt19937_64 rng(109);
  std::normal_distribution<double> normal(3.0, 7.0);
  std::vector<FeatureVector> pop(50);
  for (auto& v : pop) {
    for (int d = 0; d < kNumFeatures; ++d) v[d] = d == 5 ? 2.0 : normal(rng);
  }
  auto stats = ZScoreFit(pop);
  ASSERT_TRUE(stats.ok());
  for (int d = 0; d < kNumFeatures; ++d) {
    double mean = 0.0, sq = 0.0;
    for (const auto& v : pop) mean += ZScoreApply(v, *stats)[d];
    mean /= pop.size();
    for (const auto& v : pop) {
      const double o = ZScoreApply(v, *stats)[d] - mean;
      sq += o * o;
    }
    EXPECT_NEAR(mean, 0.0, 1e-9);
    EXPECT_NEAR(std::sqrt(sq / pop.size()), d == 5 ? 0.0 : 1.0, 1e-9);
  }
}

TEST(ZScoreTest, EmptyPopulationIsAnError) {
  EXPECT_FALSE(ZScoreFit({}).ok());
}

TEST(BagTest, MeanOfMembers) {
  FeatureVector a{}, b{};
  for (int d = 0; d < kNumFeatures; ++d) {
    a[d] = d;
    b[d] = -2.0 * d + 1.0;
  }
  std::vector<CutFeatures> one = {a};
  EXPECT_EQ(*AggregateBag(one), a);
  std::vector<CutFeatures> two = {a, b};
  auto bag = AggregateBag(two);
  ASSERT_TRUE(bag.ok());
  for (int d = 0; d < kNumFeatures; ++d) EXPECT_EQ((*bag)[d], (a[d] + b[d]) / 2.0);
  auto empty = AggregateBag({});
  EXPECT_FALSE(empty.ok());
  EXPECT_NE(empty.status().message().find("empty bag"), std::string::npos);
}

TEST(BagTest, SymmetricAndBounded) {
  std::mt19937_64 rng(113);
  std::uniform_real_distribution<double> real(-10.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<CutFeatures> members(std::uniform_int_distribution<int>(1, 9)(rng));
    for (auto& m : members) {
      for (double& v : m) v = real(rng);
    }
    auto bag = AggregateBag(members);
    ASSERT_TRUE(bag.ok());
    std::vector<CutFeatures> shuffled = members;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto again = AggregateBag(shuffled);
    for (int d = 0; d < kNumFeatures; ++d) {
      EXPECT_NEAR((*again)[d], (*bag)[d], 1e-12);
      double lo = 1e300, hi = -1e300;
      for (const auto& m : members) {
        lo = std::min(lo, m[d]);
        hi = std::max(hi, m[d]);
      }
      EXPECT_GE((*bag)[d], lo - 1e-12);
      EXPECT_LE((*bag)[d], hi + 1e-12);
    }
  }
}

}  // namespace
}  // namespace cutrank
