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

#include "src/features/cut_features.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "src/mip/instance_io.h"

namespace cutrank {
namespace {

struct Summary {
  double mean = 0.0;
  double max = 0.0;
  double min = 0.0;
  double stddev = 0.0;
};

Summary Summarize(const std::vector<double>& values) {
  Summary s;
  if (values.empty()) return s;
  s.max = *std::max_element(values.begin(), values.end());
  s.min = *std::min_element(values.begin(), values.end());
  for (double v : values) s.mean += v;
  s.mean /= static_cast<double>(values.size());
  double var = 0.0;
  for (double v : values) var += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(var / static_cast<double>(values.size()));
  return s;
}

double Norm(const SparseVector& v) {
  double sum = 0.0;
  for (const SparseEntry& e : v) sum += e.value * e.value;
  return std::sqrt(sum);
}

double Norm(const std::vector<double>& v) {
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

}  // namespace

const std::array<std::string_view, kNumFeatures>& FeatureNames() {
  static constexpr std::array<std::string_view, kNumFeatures> kNames = {
      "coef_mean", "coef_max", "coef_min", "coef_std",
      "obj_mean",  "obj_max",  "obj_min",  "obj_std",
      "support",   "integral_support",     "norm_violation",
      "distance",  "parallelism",          "expected_improvement"};
  return kNames;
}

double NormalizedViolation(const Cut& cut, const std::vector<double>& x) {
  const double denominator = std::abs(cut.beta) < 1e-9 ? 1.0 : std::abs(cut.beta);
  return std::max(0.0, CutViolation(cut, x) / denominator);
}

double EuclideanDistance(const Cut& cut, const std::vector<double>& x) {
  return std::abs(CutViolation(cut, x)) / Norm(cut.alpha);
}

double ObjectiveParallelism(const Cut& cut, const std::vector<double>& z) {
  const double z_norm = Norm(z);
  if (z_norm == 0.0) return 0.0;
  const double cosine = Dot(cut.alpha, z) / (z_norm * Norm(cut.alpha));
  return std::clamp(cosine, -1.0, 1.0);
}

CutFeatures ComputeCutFeatures(const Cut& cut, const ProblemProperty& property) {
  const MipInstance& instance = *property.instance;
  const std::vector<double>& z = instance.objective;
  const std::vector<double>& x = property.x_lp_star;

  std::vector<double> coefs;
  std::vector<double> objs;
  int integer_nonzeros = 0;
  for (const SparseEntry& e : cut.alpha) {
    if (e.value == 0.0) continue;
    coefs.push_back(e.value);
    objs.push_back(z[e.index]);
    if (instance.integrality[e.index]) ++integer_nonzeros;
  }
  const Summary coef = Summarize(coefs);
  const Summary obj = Summarize(objs);
  const double nnz = static_cast<double>(coefs.size());

  CutFeatures f{};
  f[kCoefMean] = coef.mean;
  f[kCoefMax] = coef.max;
  f[kCoefMin] = coef.min;
  f[kCoefStd] = coef.stddev;
  f[kObjMean] = obj.mean;
  f[kObjMax] = obj.max;
  f[kObjMin] = obj.min;
  f[kObjStd] = obj.stddev;
  f[kSupport] = nnz / instance.num_variables();
  f[kIntegralSupport] = nnz > 0 ? integer_nonzeros / nnz : 0.0;
  f[kNormViolation] = NormalizedViolation(cut, x);
  f[kDistance] = EuclideanDistance(cut, x);
  f[kParallelism] = ObjectiveParallelism(cut, z);
  f[kExpectedImprovement] = Norm(z) * f[kDistance];
  return f;
}

absl::StatusOr<FeatureStats> ZScoreFit(std::span<const FeatureVector> population) {
  if (population.empty()) {
    return absl::InvalidArgumentError("z-score fit needs a nonempty population");
  }
  FeatureStats stats;
  const double count = static_cast<double>(population.size());
  for (const FeatureVector& v : population) {
    for (int d = 0; d < kNumFeatures; ++d) stats.mean[d] += v[d];
  }
  for (double& m : stats.mean) m /= count;
  for (const FeatureVector& v : population) {
    for (int d = 0; d < kNumFeatures; ++d) {
      const double diff = v[d] - stats.mean[d];
      stats.stddev[d] += diff * diff;
    }
  }
  for (double& s : stats.stddev) s = std::sqrt(s / count);
  return stats;
}

FeatureVector ZScoreApply(const FeatureVector& v, const FeatureStats& stats) {
  FeatureVector out;
  for (int d = 0; d < kNumFeatures; ++d) {
    const double scale = stats.stddev[d] < 1e-12 ? 1.0 : stats.stddev[d];
    out[d] = (v[d] - stats.mean[d]) / scale;
  }
  return out;
}

absl::StatusOr<BagFeatures> AggregateBag(std::span<const CutFeatures> members) {
  if (members.empty()) {
    return absl::InvalidArgumentError("empty bag: no member cut features");
  }
  BagFeatures bag{};
  for (const CutFeatures& m : members) {
    for (int d = 0; d < kNumFeatures; ++d) bag[d] += m[d];
  }
  for (double& v : bag) v /= static_cast<double>(members.size());
  return bag;
}

std::string FeatureCsvHeader() {
  return absl::StrJoin(FeatureNames(), ",", [](std::string* out, std::string_view name) {
    out->append(name);
  });
}

std::string FeatureCsvRow(const FeatureVector& v) {
  return absl::StrJoin(v, ",", [](std::string* out, double d) {
    out->append(FormatDouble(d));
  });
}

}  // namespace cutrank
