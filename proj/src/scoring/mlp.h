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

#ifndef SRC_SCORING_MLP_H_
#define SRC_SCORING_MLP_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "Eigen/Dense"
#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace cutrank {

// 14 inputs, tanh hidden layers of 30 and 15 units, 2 softmax outputs.
inline constexpr std::array<int, 4> kLayerSizes = {14, 30, 15, 2};

// Parameters of the scoring network. Also used as the gradient container.
// Output unit 0 is the positive class (y = 1), unit 1 the negative class.
struct MlpParams {
  std::array<Eigen::MatrixXd, 3> weights;  // weights[l] is out x in
  std::array<Eigen::VectorXd, 3> biases;

  static MlpParams Zeros();

  static int NumParameters();
  absl::Status Validate() const;

  // ||theta||_2^2 over every weight and bias.
  double SquaredNorm() const;

  std::vector<double> Flatten() const;
  static absl::StatusOr<MlpParams> Unflatten(std::span<const double> flat);

  void AddScaled(const MlpParams& other, double scale);
  void Scale(double factor);

  friend bool operator==(const MlpParams& a, const MlpParams& b) {
    return a.Flatten() == b.Flatten();
  }
};

// Uniform in +-sqrt(6 / (fan_in + fan_out)) per layer, zero biases.
MlpParams InitializeMlp(uint64_t seed);

struct ClassProbabilities {
  double positive = 0.5;  // P(y = 1 | x), the score
  double negative = 0.5;  // P(y = 0 | x)
};

absl::StatusOr<ClassProbabilities> Forward(const MlpParams& params,
                                           std::span<const double> input);

// Cross-entropy -[y log p1 + (1 - y) log p0] of one sample; when gradient is
// non-null, adds d(cross-entropy)/d(theta) into it.
double CrossEntropy(const MlpParams& params, std::span<const double> input,
                    int label, MlpParams* gradient);

// CRNK1 text format: architecture line, then each layer's weights row by row
// and its biases, in shortest round-trip decimal form.
std::string SerializeModel(const MlpParams& params);
absl::StatusOr<MlpParams> ParseModel(const std::string& text);
absl::Status WriteModel(const MlpParams& params, const std::string& path);
absl::StatusOr<MlpParams> ReadModel(const std::string& path);

}  // namespace cutrank

#endif  // SRC_SCORING_MLP_H_
