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

#ifndef SRC_FEATURES_CUT_FEATURES_H_
#define SRC_FEATURES_CUT_FEATURES_H_

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "src/cuts/cut.h"
#include "src/mip/problem_property.h"

namespace cutrank {

inline constexpr int kNumFeatures = 14;

// Frozen column order of every feature vector, CSV header included.
enum FeatureIndex {
  kCoefMean = 0,
  kCoefMax,
  kCoefMin,
  kCoefStd,
  kObjMean,
  kObjMax,
  kObjMin,
  kObjStd,
  kSupport,
  kIntegralSupport,
  kNormViolation,
  kDistance,
  kParallelism,
  kExpectedImprovement,
};

using FeatureVector = std::array<double, kNumFeatures>;
// Features of one cut, and of a bag (the mean over member cuts).
using CutFeatures = FeatureVector;
using BagFeatures = FeatureVector;

const std::array<std::string_view, kNumFeatures>& FeatureNames();

// Population statistics per dimension.
struct FeatureStats {
  FeatureVector mean{};
  FeatureVector stddev{};

  friend bool operator==(const FeatureStats&, const FeatureStats&) = default;
};

// Raw features of cut alpha^T x <= beta against the root LP optimum x* and
// objective z. Coefficient statistics range over the nonzeros of alpha,
// objective statistics over z restricted to the cut's support.
CutFeatures ComputeCutFeatures(const Cut& cut, const ProblemProperty& property);

// max{0, (alpha^T x* - beta) / |beta|}; |beta| below 1e-9 is replaced by 1.
double NormalizedViolation(const Cut& cut, const std::vector<double>& x);
// |alpha^T x* - beta| / ||alpha||_2
double EuclideanDistance(const Cut& cut, const std::vector<double>& x);
// z^T alpha / (||z||_2 ||alpha||_2), 0 when z = 0.
double ObjectiveParallelism(const Cut& cut, const std::vector<double>& z);

absl::StatusOr<FeatureStats> ZScoreFit(std::span<const FeatureVector> population);
// (v - mean) / std; a std below 1e-12 is treated as 1.
FeatureVector ZScoreApply(const FeatureVector& v, const FeatureStats& stats);

// Component-wise mean; an empty bag is an error.
absl::StatusOr<BagFeatures> AggregateBag(std::span<const CutFeatures> members);

std::string FeatureCsvHeader();
std::string FeatureCsvRow(const FeatureVector& v);

}  // namespace cutrank

#endif  // SRC_FEATURES_CUT_FEATURES_H_
