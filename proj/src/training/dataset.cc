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

#include "src/training/dataset.h"

#include <charconv>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "src/common/status_macros.h"
#include "src/mip/instance_io.h"
#include "src/training/labels.h"

namespace cutrank {
namespace {

constexpr char kMagic[] = "CRDS1";

void AppendVector(std::string* out, const FeatureVector& v) {
  for (double d : v) absl::StrAppend(out, " ", FormatDouble(d));
}

class LineReader {
 public:
  explicit LineReader(const std::string& text)
      : lines_(absl::StrSplit(text, '\n', absl::SkipEmpty())) {}

  absl::Status Error(const std::string& what) const {
    return absl::InvalidArgumentError(
        absl::StrCat("dataset parse error at line ", at_, ": ", what));
  }

  // Tokens of the next line, which must start with keyword.
  absl::StatusOr<std::vector<std::string>> Next(const std::string& keyword) {
    if (at_ >= lines_.size()) return Error("unexpected end of file");
    std::vector<std::string> tokens = absl::StrSplit(lines_[at_++], ' ', absl::SkipEmpty());
    if (tokens.empty() || tokens[0] != keyword) return Error(absl::StrCat("expected '", keyword, "'"));
    return tokens;
  }

  absl::StatusOr<double> Double(const std::string& token) const {
    auto v = ParseDouble(token);
    if (!v.ok()) return Error(std::string(v.status().message()));
    return *v;
  }

  absl::StatusOr<long> Int(const std::string& token) const {
    long v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      return Error(absl::StrCat("bad integer '", token, "'"));
    }
    return v;
  }

  absl::StatusOr<FeatureVector> Vector(const std::vector<std::string>& tokens, size_t from) const {
    if (tokens.size() < from + kNumFeatures) return Error("too few feature values");
    FeatureVector v{};
    for (int d = 0; d < kNumFeatures; ++d) {
      ASSIGN_OR_RETURN(v[d], Double(tokens[from + d]));
    }
    return v;
  }

 private:
  std::vector<std::string> lines_;
  size_t at_ = 0;
};

}  // namespace

int Dataset::num_samples() const {
  int n = 0;
  for (const InstanceSamples& inst : instances) n += static_cast<int>(inst.samples.size());
  return n;
}

void Dataset::AssignAllLabels(double lambda_percent) {
  for (InstanceSamples& inst : instances) AssignLabels(inst.samples, lambda_percent);
}

absl::StatusOr<std::vector<LabeledPoint>> TrainingPoints(const Dataset& data) {
  std::vector<LabeledPoint> points;
  for (const InstanceSamples& inst : data.instances) {
    for (const TrainingSample& s : inst.samples) {
      if (s.label != 0 && s.label != 1) {
        return absl::FailedPreconditionError(
            absl::StrCat(inst.instance_id, ": unlabeled sample"));
      }
      points.push_back({s.features, s.label});
    }
  }
  return points;
}

std::string SerializeInstanceSamples(const InstanceSamples& s) {
  std::string out;
  absl::StrAppend(&out, kMagic, "\ninstance ", s.instance_id, "\ndropped ", s.dropped,
                  "\nmean");
  AppendVector(&out, s.stats.mean);
  out += "\nstddev";
  AppendVector(&out, s.stats.stddev);
  absl::StrAppend(&out, "\npool ", s.pool.size(), "\n");
  for (const Cut& cut : s.pool.cuts) {
    absl::StrAppend(&out, "cut ", CutKindName(cut.kind), " ",
                    cut.source_row.has_value() ? absl::StrCat(*cut.source_row) : "-", " ",
                    FormatDouble(cut.beta), " ", cut.alpha.size());
    for (const SparseEntry& e : cut.alpha) {
      absl::StrAppend(&out, " ", e.index, ":", FormatDouble(e.value));
    }
    out += "\n";
  }
  absl::StrAppend(&out, "samples ", s.samples.size(), "\n");
  for (const TrainingSample& t : s.samples) {
    absl::StrAppend(&out, "sample ", t.label, " ", t.greedy ? 1 : 0, " ",
                    FormatDouble(t.t_base), " ", FormatDouble(t.t_bag), " ",
                    FormatDouble(t.r), " ", t.bag.size());
    for (int i : t.bag) absl::StrAppend(&out, " ", i);
    AppendVector(&out, t.features);
    out += "\n";
  }
  out += "end\n";
  return out;
}

absl::StatusOr<InstanceSamples> ParseInstanceSamples(const std::string& text) {
  LineReader in(text);
  InstanceSamples s;
  RETURN_IF_ERROR(in.Next(kMagic).status());
  ASSIGN_OR_RETURN(auto tokens, in.Next("instance"));
  if (tokens.size() != 2) return in.Error("instance line needs one id");
  s.instance_id = tokens[1];
  ASSIGN_OR_RETURN(tokens, in.Next("dropped"));
  if (tokens.size() != 2) return in.Error("dropped line needs one count");
  ASSIGN_OR_RETURN(long dropped, in.Int(tokens[1]));
  s.dropped = static_cast<int>(dropped);
  ASSIGN_OR_RETURN(tokens, in.Next("mean"));
  ASSIGN_OR_RETURN(s.stats.mean, in.Vector(tokens, 1));
  ASSIGN_OR_RETURN(tokens, in.Next("stddev"));
  ASSIGN_OR_RETURN(s.stats.stddev, in.Vector(tokens, 1));

  ASSIGN_OR_RETURN(tokens, in.Next("pool"));
  if (tokens.size() != 2) return in.Error("pool line needs one count");
  ASSIGN_OR_RETURN(long pool_size, in.Int(tokens[1]));
  std::vector<Cut> cuts;
  for (long c = 0; c < pool_size; ++c) {
    ASSIGN_OR_RETURN(tokens, in.Next("cut"));
    if (tokens.size() < 5) return in.Error("short cut line");
    Cut cut;
    auto kind = ParseCutKind(tokens[1]);
    if (!kind.ok()) return in.Error(std::string(kind.status().message()));
    cut.kind = *kind;
    if (tokens[2] != "-") {
      ASSIGN_OR_RETURN(long source, in.Int(tokens[2]));
      cut.source_row = static_cast<int>(source);
    }
    ASSIGN_OR_RETURN(cut.beta, in.Double(tokens[3]));
    ASSIGN_OR_RETURN(long nnz, in.Int(tokens[4]));
    if (static_cast<long>(tokens.size()) != 5 + nnz) return in.Error("cut entry count mismatch");
    for (long k = 0; k < nnz; ++k) {
      std::vector<std::string> pair = absl::StrSplit(tokens[5 + k], ':');
      if (pair.size() != 2) return in.Error("cut entry must be index:value");
      ASSIGN_OR_RETURN(long index, in.Int(pair[0]));
      ASSIGN_OR_RETURN(double value, in.Double(pair[1]));
      cut.alpha.push_back({static_cast<int>(index), value});
    }
    cuts.push_back(std::move(cut));
  }
  s.pool.cuts = std::move(cuts);
  for (const Cut& cut : s.pool.cuts) {
    if (cut.kind == CutKind::kGomory) ++s.pool.num_gomory;
    if (cut.kind == CutKind::kCover) ++s.pool.num_cover;
    if (cut.kind == CutKind::kClique) ++s.pool.num_clique;
  }

  ASSIGN_OR_RETURN(tokens, in.Next("samples"));
  if (tokens.size() != 2) return in.Error("samples line needs one count");
  ASSIGN_OR_RETURN(long num_samples, in.Int(tokens[1]));
  for (long k = 0; k < num_samples; ++k) {
    ASSIGN_OR_RETURN(tokens, in.Next("sample"));
    if (tokens.size() < 7) return in.Error("short sample line");
    TrainingSample t;
    ASSIGN_OR_RETURN(long label, in.Int(tokens[1]));
    ASSIGN_OR_RETURN(long greedy, in.Int(tokens[2]));
    t.label = static_cast<int>(label);
    t.greedy = greedy != 0;
    ASSIGN_OR_RETURN(t.t_base, in.Double(tokens[3]));
    ASSIGN_OR_RETURN(t.t_bag, in.Double(tokens[4]));
    ASSIGN_OR_RETURN(t.r, in.Double(tokens[5]));
    ASSIGN_OR_RETURN(long bag_size, in.Int(tokens[6]));
    if (static_cast<long>(tokens.size()) != 7 + bag_size + kNumFeatures) {
      return in.Error("sample field count mismatch");
    }
    for (long b = 0; b < bag_size; ++b) {
      ASSIGN_OR_RETURN(long index, in.Int(tokens[7 + b]));
      if (index < 0 || index >= pool_size) return in.Error("bag index outside the pool");
      t.bag.push_back(static_cast<int>(index));
    }
    ASSIGN_OR_RETURN(t.features, in.Vector(tokens, 7 + bag_size));
    s.samples.push_back(std::move(t));
  }
  RETURN_IF_ERROR(in.Next("end").status());
  return s;
}

absl::Status WriteInstanceSamples(const InstanceSamples& samples, const std::string& path) {
  return WriteTextFile(path, SerializeInstanceSamples(samples));
}

absl::StatusOr<InstanceSamples> ReadInstanceSamples(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadTextFile(path));
  return ParseInstanceSamples(text);
}

}  // namespace cutrank
