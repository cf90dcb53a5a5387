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
#include "src/bnc/evaluation.h"
#include "src/mip/generators.h"
#include "src/training/dataset.h"
#include "src/training/labels.h"
#include "src/training/sampling.h"
#include "src/training/trainer.h"
#include "tests/oracles.h"

namespace cutrank {
namespace {

std::vector<TrainingSample> WithFeedback(const std::vector<double>& r) {
  std::vector<TrainingSample> samples(r.size());
  for (size_t i = 0; i < r.size(); ++i) samples[i].r = r[i];
  return samples;
}

std::vector<int> Labels(const std::vector<TrainingSample>& samples) {
  std::vector<int> labels;
  for (const auto& s : samples) labels.push_back(s.label);
  return labels;
}

TEST(LabelTest, TopHalfExample) {
  auto samples = WithFeedback({0.3, 0.1, 0.4, 0.2});
  AssignLabels(samples, 50.0);
  EXPECT_EQ(Labels(samples), (std::vector<int>{1, 0, 1, 0}));
}

TEST(LabelTest, TiesGoToEarlierSamples) {
  auto samples = WithFeedback(std::vector<double>(7, 0.25));
  AssignLabels(samples, 50.0);
  EXPECT_EQ(Labels(samples), (std::vector<int>{1, 1, 1, 1, 0, 0, 0}));
  auto partial = WithFeedback({0.1, 0.5, 0.3, 0.3, 0.3});
  AssignLabels(partial, 50.0);
  EXPECT_EQ(Labels(partial), (std::vector<int>{0, 1, 1, 1, 0}));
}

TEST(LabelTest, CountsFollowCeiling) {
  EXPECT_EQ(PositiveCount(100, 50.0), 50);
  EXPECT_EQ(PositiveCount(3, 10.0), 1);
  EXPECT_EQ(PositiveCount(10, 90.0), 9);
  EXPECT_EQ(PositiveCount(11, 90.0), 10);
  EXPECT_EQ(PositiveCount(0, 50.0), 0);
  std::mt19937_64 rng(1);
  for (double lambda : {10.0, 50.0, 90.0}) {
    for (int trial = 0; trial < 1000; ++trial) {
      const int h = std::uniform_int_distribution<int>(1, 120)(rng);
      std::vector<double> r(h);
      for (double& v : r) v = std::uniform_int_distribution<int>(-3, 3)(rng) * 0.25;
      auto samples = WithFeedback(r);
      AssignLabels(samples, lambda);
      int positives = 0;
      double min_pos = 1e300, max_neg = -1e300;
      for (const auto& s : samples) {
        positives += s.label;
        if (s.label == 1) min_pos = std::min(min_pos, s.r);
        if (s.label == 0) max_neg = std::max(max_neg, s.r);
      }
      ASSERT_EQ(positives, static_cast<int>(std::ceil(lambda * h / 100.0 - 1e-9)));
      EXPECT_GE(min_pos, max_neg);
    }
  }
}

TEST(LabelTest, DatasetLabelsEachInstanceSeparately) {
  Dataset data;
  data.instances.resize(2);
  data.instances[0].samples = WithFeedback({0.9, 0.8, 0.7, 0.6});
  data.instances[1].samples = WithFeedback({-0.9, -0.8});
  EXPECT_FALSE(TrainingPoints(data).ok());
  data.AssignAllLabels(50.0);
  EXPECT_EQ(Labels(data.instances[0].samples), (std::vector<int>{1, 1, 0, 0}));
  EXPECT_EQ(Labels(data.instances[1].samples), (std::vector<int>{0, 1}));
  EXPECT_EQ(data.num_samples(), 6);
  EXPECT_EQ(TrainingPoints(data)->size(), 6u);
}

TEST(TrainerTest, GradientMatchesCentralDifferences) {
  std::mt19937_64 rng(2);
  for (double gamma : {0.0, 0.1}) {
    double worst = 0.0;
    for (int draw = 0; draw < 50; ++draw) {
      MlpParams p = testing::RandomMlpParams(rng, 0.4);
      auto data = testing::RandomLabeledPoints(rng, 3);
      worst = std::max(worst, testing::GradientRelativeError(p, data, gamma, 1e-5));
    }
    EXPECT_LT(worst, 1e-4) << "gamma " << gamma;
  }
}

TEST(TrainerTest, CertainPredictionsLeaveOnlyRegularization) {
  std::mt19937_64 rng(3);
  MlpParams p = testing::RandomMlpParams(rng, 0.1);
  p.biases[2](0) = 60.0;
  p.biases[2](1) = -60.0;
  auto data = testing::RandomLabeledPoints(rng, 20);
  for (auto& point : data) point.label = 1;
  LossTerms loss = LossAndGradient(p, data, 0.1, nullptr);
  EXPECT_LT(loss.cross_entropy, 1e-40);
  EXPECT_DOUBLE_EQ(loss.regularization, p.SquaredNorm());
  EXPECT_NEAR(loss.total, 0.1 * p.SquaredNorm(), 1e-12);
}

TEST(TrainerTest, RegularizerScalesQuadratically) {
  std::mt19937_64 rng(4);
  MlpParams p = testing::RandomMlpParams(rng, 1.0);
  for (double c : {0.5, 2.0, 3.0}) {
    MlpParams scaled = p;
    scaled.Scale(c);
    EXPECT_NEAR(scaled.SquaredNorm(), c * c * p.SquaredNorm(), 1e-12 * scaled.SquaredNorm());
  }
  MlpParams doubled = p;
  doubled.Scale(2.0);
  EXPECT_EQ(doubled.SquaredNorm(), 4.0 * p.SquaredNorm());
}

std::vector<LabeledPoint> PlantedLinearRule(std::mt19937_64& rng, int count) {
  std::normal_distribution<double> normal(0.0, 1.0);
  FeatureVector w;
  for (double& v : w) v = normal(rng);
  std::vector<LabeledPoint> points(count);
  for (LabeledPoint& p : points) {
    double activity = 0.3;
    for (int d = 0; d < kNumFeatures; ++d) {
      p.x[d] = normal(rng);
      activity += w[d] * p.x[d];
    }
    p.label = activity > 0.0 ? 1 : 0;
  }
  return points;
}

TEST(TrainerTest, LearnsSeparableData) {
  std::mt19937_64 rng(5);
  auto data = PlantedLinearRule(rng, 400);
  TrainConfig config;
  config.epochs = 200;
  config.seed = 9;
  auto result = Train(data, config);
  ASSERT_TRUE(result.ok()) << result.status();
  EXPECT_EQ(result->trace.size(), 200u);
  EXPECT_GE(Accuracy(result->params, data), 0.95);
}

TEST(TrainerTest, MovingAverageOfLossDoesNotIncrease) {
  std::mt19937_64 rng(6);
  auto data = PlantedLinearRule(rng, 300);
  TrainConfig config;
  config.epochs = 150;
  auto result = Train(data, config);
  ASSERT_TRUE(result.ok());
  const auto& trace = result->trace;
  for (const EpochLoss& e : trace) EXPECT_TRUE(std::isfinite(e.loss.total));
  double previous = 1e300;
  for (size_t start = 0; start + 10 <= trace.size(); ++start) {
    double window = 0.0;
    for (size_t e = start; e < start + 10; ++e) window += trace[e].loss.total;
    window /= 10.0;
    EXPECT_LE(window, previous + 1e-12) << "window starting at epoch " << start;
    previous = window;
  }
}

TEST(TrainerTest, TrainingIsDeterministic) {
  std::mt19937_64 rng(7);
  auto data = PlantedLinearRule(rng, 100);
  TrainConfig config;
  config.epochs = 20;
  auto a = Train(data, config);
  auto b = Train(data, config);
  EXPECT_EQ(a->params, b->params);
  EXPECT_EQ(LossTraceCsv(a->trace), LossTraceCsv(b->trace));
  EXPECT_EQ(LossTraceCsv(a->trace).substr(0, 21), "epoch,L_ce,omega,tota");
}

TEST(TrainerTest, DivergenceIsReported) {
  std::mt19937_64 rng(8);
  auto data = PlantedLinearRule(rng, 100);
  for (auto& p : data) {
    for (double& v : p.x) v *= 1e150;
  }
  TrainConfig config;
  config.epochs = 5;
  config.learning_rate = 1e100;
  auto result = Train(data, config);
  ASSERT_FALSE(result.ok());
  EXPECT_NE(result.status().message().find("learning_rate"), std::string::npos);
}

TEST(SamplingTest, EpsilonControlsTheGreedyFraction) {
  const std::vector<int> greedy = {1, 4, 7};
  auto mixed = DrawBags(20, 15.0, greedy, 0.5, 1000, 11, 12);
  int greedy_count = 0;
  for (const BagDraw& d : mixed) {
    if (d.greedy) {
      ++greedy_count;
      EXPECT_EQ(d.bag, greedy);
    } else {
      EXPECT_EQ(d.bag.size(), 3u);
    }
  }
  EXPECT_GE(greedy_count, 450);
  EXPECT_LE(greedy_count, 550);

  for (const BagDraw& d : DrawBags(20, 15.0, greedy, 0.0, 200, 11, 12)) {
    EXPECT_TRUE(d.greedy);
    EXPECT_EQ(d.bag, greedy);
  }
  auto explore = DrawBags(20, 15.0, greedy, 1.0, 200, 11, 12);
  std::mt19937_64 stream(11);
  for (const BagDraw& d : explore) {
    EXPECT_FALSE(d.greedy);
    EXPECT_EQ(d.bag, SelectRandom(20, 15.0, stream));
  }
}

class CollectionTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    KnapsackParams params;
    params.n_items = 40;
    params.max_value = 100;
    params.max_weight = 100;
    instance_ = new MipInstance(*GenerateKnapsack(params, 3));
  }
  static void TearDownTestSuite() { delete instance_; }
  static MipInstance* instance_;
};
MipInstance* CollectionTest::instance_ = nullptr;

TEST_F(CollectionTest, RandomCollectionProducesReplayableSamples) {
  TrainConfig config;
  auto samples = CollectRandom(*instance_, "k3", config, BncConfig{});
  ASSERT_TRUE(samples.ok()) << samples.status();
  EXPECT_EQ(samples->samples.size() + samples->dropped, 100u);
  EXPECT_EQ(samples->dropped, 0);
  const int l = samples->pool.size();
  for (const TrainingSample& s : samples->samples) {
    EXPECT_FALSE(s.greedy);
    EXPECT_EQ(static_cast<int>(s.bag.size()), SelectionCount(l, config.k_percent));
    EXPECT_TRUE(std::is_sorted(s.bag.begin(), s.bag.end()));
    EXPECT_EQ(std::adjacent_find(s.bag.begin(), s.bag.end()), s.bag.end());
    EXPECT_EQ(s.r, (s.t_base - s.t_bag) / s.t_base);
    EXPECT_EQ(s.r, ReductionRatio(s.t_base, s.t_bag));
    EXPECT_EQ(s.t_base, samples->samples[0].t_base);
    EXPECT_EQ(s.label, -1);
  }
  auto again = CollectRandom(*instance_, "k3", config, BncConfig{});
  EXPECT_EQ(SerializeInstanceSamples(*samples), SerializeInstanceSamples(*again));
}

TEST_F(CollectionTest, ExtremeEpsilonsReduceToPureStreams) {
  TrainConfig config;
  config.bags_per_instance = 20;
  const MlpParams model = InitializeMlp(4);

  config.epsilon = 1.0;
  auto active = CollectActive(*instance_, "k3", model, config, BncConfig{});
  auto random = CollectRandom(*instance_, "k3", config, BncConfig{});
  ASSERT_TRUE(active.ok() && random.ok());
  EXPECT_EQ(SerializeInstanceSamples(*active), SerializeInstanceSamples(*random));

  config.epsilon = 0.0;
  auto greedy = CollectActive(*instance_, "k3", model, config, BncConfig{});
  ASSERT_TRUE(greedy.ok());
  auto property = ComputeProblemProperty(*instance_);
  auto top = SelectCuts(greedy->pool, *property,
                        SelectionPolicy::CutRanking(std::make_shared<const MlpParams>(model)),
                        config.k_percent);
  ASSERT_TRUE(top.ok());
  for (const TrainingSample& s : greedy->samples) {
    EXPECT_TRUE(s.greedy);
    EXPECT_EQ(s.bag, *top);
    EXPECT_EQ(s.r, greedy->samples[0].r);
  }
}

TEST_F(CollectionTest, SampleFilesRoundTrip) {
  TrainConfig config;
  config.bags_per_instance = 15;
  auto samples = CollectRandom(*instance_, "k3", config, BncConfig{});
  ASSERT_TRUE(samples.ok());
  std::vector<TrainingSample> labeled = samples->samples;
  AssignLabels(labeled, 50.0);
  samples->samples = labeled;
  const std::string text = SerializeInstanceSamples(*samples);
  auto parsed = ParseInstanceSamples(text);
  ASSERT_TRUE(parsed.ok()) << parsed.status();
  EXPECT_EQ(SerializeInstanceSamples(*parsed), text);
  EXPECT_EQ(parsed->pool.cuts, samples->pool.cuts);
  EXPECT_EQ(parsed->stats, samples->stats);
  ASSERT_EQ(parsed->samples.size(), samples->samples.size());
  for (size_t i = 0; i < labeled.size(); ++i) {
    EXPECT_EQ(parsed->samples[i].features, labeled[i].features);
    EXPECT_EQ(parsed->samples[i].r, labeled[i].r);
    EXPECT_EQ(parsed->samples[i].label, labeled[i].label);
  }
  const std::string path =
      (std::filesystem::temp_directory_path() / "cutrank_training_test.crds").string();
  ASSERT_TRUE(WriteInstanceSamples(*samples, path).ok());
  EXPECT_EQ(SerializeInstanceSamples(*ReadInstanceSamples(path)), text);
  std::filesystem::remove(path);
  EXPECT_FALSE(ParseInstanceSamples(text.substr(0, text.size() - 10)).ok());
  EXPECT_FALSE(ParseInstanceSamples("CRDS2\n").ok());
}

TEST(TrainConfigTest, RejectsOutOfRangeValues) {
  EXPECT_TRUE(TrainConfig{}.Validate().ok());
  TrainConfig c;
  c.lambda_percent = 100.0;
  EXPECT_FALSE(c.Validate().ok());
  c = TrainConfig{};
  c.epsilon = 1.5;
  EXPECT_FALSE(c.Validate().ok());
  c = TrainConfig{};
  c.gamma = 0.0;
  EXPECT_FALSE(c.Validate().ok());
  c = TrainConfig{};
  c.learning_rate = -1.0;
  EXPECT_FALSE(c.Validate().ok());
}

}  // namespace
}  // namespace cutrank
