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

#include "src/scoring/mlp.h"

#include <cmath>
#include <random>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "src/common/status_macros.h"
#include "src/mip/instance_io.h"

namespace cutrank {
namespace {

constexpr char kMagic[] = "CRNK1";

struct Activations {
  Eigen::VectorXd input;
  Eigen::VectorXd hidden1;
  Eigen::VectorXd hidden2;
  Eigen::VectorXd logits;
};

Activations Propagate(const MlpParams& p, std::span<const double> input) {
  Activations a;
  a.input = Eigen::Map<const Eigen::VectorXd>(input.data(),
                                              static_cast<Eigen::Index>(input.size()));
  a.hidden1 = (p.weights[0] * a.input + p.biases[0]).array().tanh();
  a.hidden2 = (p.weights[1] * a.hidden1 + p.biases[1]).array().tanh();
  a.logits = p.weights[2] * a.hidden2 + p.biases[2];
  return a;
}

// log P(y = 1), log P(y = 0) from the two logits.
std::pair<double, double> LogSoftmax(const Eigen::VectorXd& logits) {
  const double top = std::max(logits(0), logits(1));
  const double lse =
      top + std::log(std::exp(logits(0) - top) + std::exp(logits(1) - top));
  return {logits(0) - lse, logits(1) - lse};
}

}  // namespace

MlpParams MlpParams::Zeros() {
  MlpParams p;
  for (int l = 0; l < 3; ++l) {
    p.weights[l] = Eigen::MatrixXd::Zero(kLayerSizes[l + 1], kLayerSizes[l]);
    p.biases[l] = Eigen::VectorXd::Zero(kLayerSizes[l + 1]);
  }
  return p;
}

int MlpParams::NumParameters() {
  int count = 0;
  for (int l = 0; l < 3; ++l) count += kLayerSizes[l + 1] * (kLayerSizes[l] + 1);
  return count;
}

absl::Status MlpParams::Validate() const {
  for (int l = 0; l < 3; ++l) {
    if (weights[l].rows() != kLayerSizes[l + 1] ||
        weights[l].cols() != kLayerSizes[l] ||
        biases[l].size() != kLayerSizes[l + 1]) {
      return absl::InvalidArgumentError(
          absl::StrCat("shape error: layer ", l + 1, " does not match ",
                       kLayerSizes[l], "->", kLayerSizes[l + 1]));
    }
    if (!weights[l].allFinite() || !biases[l].allFinite()) {
      return absl::InvalidArgumentError(
          absl::StrCat("layer ", l + 1, " has non-finite parameters"));
    }
  }
  return absl::OkStatus();
}

double MlpParams::SquaredNorm() const {
  double sum = 0.0;
  for (int l = 0; l < 3; ++l) {
    sum += weights[l].squaredNorm() + biases[l].squaredNorm();
  }
  return sum;
}

std::vector<double> MlpParams::Flatten() const {
  std::vector<double> flat;
  flat.reserve(NumParameters());
  for (int l = 0; l < 3; ++l) {
    for (Eigen::Index r = 0; r < weights[l].rows(); ++r) {
      for (Eigen::Index c = 0; c < weights[l].cols(); ++c) {
        flat.push_back(weights[l](r, c));
      }
    }
    for (Eigen::Index r = 0; r < biases[l].size(); ++r) flat.push_back(biases[l](r));
  }
  return flat;
}

absl::StatusOr<MlpParams> MlpParams::Unflatten(std::span<const double> flat) {
  if (static_cast<int>(flat.size()) != NumParameters()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "shape error: expected ", NumParameters(), " parameters, got ",
        flat.size()));
  }
  MlpParams p = Zeros();
  size_t k = 0;
  for (int l = 0; l < 3; ++l) {
    for (Eigen::Index r = 0; r < p.weights[l].rows(); ++r) {
      for (Eigen::Index c = 0; c < p.weights[l].cols(); ++c) {
        p.weights[l](r, c) = flat[k++];
      }
    }
    for (Eigen::Index r = 0; r < p.biases[l].size(); ++r) p.biases[l](r) = flat[k++];
  }
  return p;
}

void MlpParams::AddScaled(const MlpParams& other, double scale) {
  for (int l = 0; l < 3; ++l) {
    weights[l] += scale * other.weights[l];
    biases[l] += scale * other.biases[l];
  }
}

void MlpParams::Scale(double factor) {
  for (int l = 0; l < 3; ++l) {
    weights[l] *= factor;
    biases[l] *= factor;
  }
}

MlpParams InitializeMlp(uint64_t seed) {
  std::mt19937_64 rng(seed);
  MlpParams p = MlpParams::Zeros();
  for (int l = 0; l < 3; ++l) {
    const double limit =
        std::sqrt(6.0 / static_cast<double>(kLayerSizes[l] + kLayerSizes[l + 1]));
    std::uniform_real_distribution<double> uniform(-limit, limit);
    for (Eigen::Index r = 0; r < p.weights[l].rows(); ++r) {
      for (Eigen::Index c = 0; c < p.weights[l].cols(); ++c) {
        p.weights[l](r, c) = uniform(rng);
      }
    }
  }
  return p;
}

absl::StatusOr<ClassProbabilities> Forward(const MlpParams& params,
                                           std::span<const double> input) {
  if (static_cast<int>(input.size()) != kLayerSizes[0]) {
    return absl::InvalidArgumentError(absl::StrCat(
        "shape error: input has ", input.size(), " features, expected ",
        kLayerSizes[0]));
  }
  RETURN_IF_ERROR(params.Validate());
  const Activations a = Propagate(params, input);
  const auto [log_pos, log_neg] = LogSoftmax(a.logits);
  return ClassProbabilities{std::exp(log_pos), std::exp(log_neg)};
}

double CrossEntropy(const MlpParams& params, std::span<const double> input,
                    int label, MlpParams* gradient) {
  const Activations a = Propagate(params, input);
  const auto [log_pos, log_neg] = LogSoftmax(a.logits);
  const double loss = label == 1 ? -log_pos : -log_neg;
  if (gradient == nullptr) return loss;

  // Softmax with cross-entropy: dL/dlogits = p - onehot(label).
  Eigen::VectorXd delta3(2);
  delta3(0) = std::exp(log_pos) - (label == 1 ? 1.0 : 0.0);
  delta3(1) = std::exp(log_neg) - (label == 1 ? 0.0 : 1.0);
  gradient->weights[2].noalias() += delta3 * a.hidden2.transpose();
  gradient->biases[2] += delta3;

  const Eigen::VectorXd delta2 =
      (params.weights[2].transpose() * delta3).array() *
      (1.0 - a.hidden2.array().square());
  gradient->weights[1].noalias() += delta2 * a.hidden1.transpose();
  gradient->biases[1] += delta2;

  const Eigen::VectorXd delta1 =
      (params.weights[1].transpose() * delta2).array() *
      (1.0 - a.hidden1.array().square());
  gradient->weights[0].noalias() += delta1 * a.input.transpose();
  gradient->biases[0] += delta1;
  return loss;
}

std::string SerializeModel(const MlpParams& params) {
  std::string out;
  absl::StrAppend(&out, kMagic, "\narch");
  for (int s : kLayerSizes) absl::StrAppend(&out, " ", s);
  out += "\n";
  for (int l = 0; l < 3; ++l) {
    absl::StrAppend(&out, "weights ", l + 1, "\n");
    for (Eigen::Index r = 0; r < params.weights[l].rows(); ++r) {
      for (Eigen::Index c = 0; c < params.weights[l].cols(); ++c) {
        absl::StrAppend(&out, c == 0 ? "" : " ", FormatDouble(params.weights[l](r, c)));
      }
      out += "\n";
    }
    absl::StrAppend(&out, "biases ", l + 1, "\n");
    for (Eigen::Index r = 0; r < params.biases[l].size(); ++r) {
      absl::StrAppend(&out, r == 0 ? "" : " ", FormatDouble(params.biases[l](r)));
    }
    out += "\n";
  }
  out += "end\n";
  return out;
}

absl::StatusOr<MlpParams> ParseModel(const std::string& text) {
  std::vector<std::string> lines = absl::StrSplit(text, '\n', absl::SkipEmpty());
  size_t at = 0;
  auto error = [&](const std::string& what) {
    return absl::InvalidArgumentError(
        absl::StrCat("model parse error at line ", at, ": ", what));
  };
  auto next = [&]() -> absl::StatusOr<std::vector<std::string>> {
    if (at >= lines.size()) return error("unexpected end of file");
    return std::vector<std::string>(absl::StrSplit(lines[at++], ' ', absl::SkipEmpty()));
  };
  auto numbers = [&](size_t count) -> absl::StatusOr<std::vector<double>> {
    ASSIGN_OR_RETURN(std::vector<std::string> tokens, next());
    if (tokens.size() != count) {
      return error(absl::StrCat("expected ", count, " values, got ", tokens.size()));
    }
    std::vector<double> values;
    for (const std::string& t : tokens) {
      auto v = ParseDouble(t);
      if (!v.ok()) return error(std::string(v.status().message()));
      values.push_back(*v);
    }
    return values;
  };

  ASSIGN_OR_RETURN(std::vector<std::string> magic, next());
  if (magic.size() != 1 || magic[0] != kMagic) return error("missing CRNK1 header");
  ASSIGN_OR_RETURN(std::vector<std::string> arch, next());
  std::vector<std::string> expected = {"arch"};
  for (int s : kLayerSizes) expected.push_back(absl::StrCat(s));
  if (arch != expected) return error("shape error: architecture must be 14 30 15 2");

  MlpParams p = MlpParams::Zeros();
  for (int l = 0; l < 3; ++l) {
    ASSIGN_OR_RETURN(std::vector<std::string> header, next());
    if (header != std::vector<std::string>{"weights", absl::StrCat(l + 1)}) {
      return error("expected weights header");
    }
    for (int r = 0; r < kLayerSizes[l + 1]; ++r) {
      ASSIGN_OR_RETURN(std::vector<double> row, numbers(kLayerSizes[l]));
      for (int c = 0; c < kLayerSizes[l]; ++c) p.weights[l](r, c) = row[c];
    }
    ASSIGN_OR_RETURN(header, next());
    if (header != std::vector<std::string>{"biases", absl::StrCat(l + 1)}) {
      return error("expected biases header");
    }
    ASSIGN_OR_RETURN(std::vector<double> bias, numbers(kLayerSizes[l + 1]));
    for (int r = 0; r < kLayerSizes[l + 1]; ++r) p.biases[l](r) = bias[r];
  }
  ASSIGN_OR_RETURN(std::vector<std::string> end, next());
  if (end != std::vector<std::string>{"end"}) return error("missing 'end'");
  RETURN_IF_ERROR(p.Validate());
  return p;
}

absl::Status WriteModel(const MlpParams& params, const std::string& path) {
  return WriteTextFile(path, SerializeModel(params));
}

absl::StatusOr<MlpParams> ReadModel(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadTextFile(path));
  return ParseModel(text);
}

}  // namespace cutrank
