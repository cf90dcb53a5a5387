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

#include "src/mip/instance_io.h"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <vector>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "src/common/status_macros.h"

namespace cutrank {
namespace {

constexpr char kMagic[] = "MIPR1";

class LineReader {
 public:
  explicit LineReader(const std::string& text)
      : lines_(absl::StrSplit(text, '\n')) {}

  // Next line split on spaces; fails at end of input.
  absl::StatusOr<std::vector<std::string>> Next() {
    while (index_ < lines_.size()) {
      const std::string& line = lines_[index_++];
      std::vector<std::string> tokens =
          absl::StrSplit(line, ' ', absl::SkipEmpty());
      if (!tokens.empty()) return tokens;
    }
    return Error("unexpected end of file");
  }

  absl::Status Error(const std::string& message) const {
    return absl::InvalidArgumentError(
        absl::StrCat("parse error at line ", index_, ": ", message));
  }

 private:
  std::vector<std::string> lines_;
  size_t index_ = 0;
};

template <typename T>
absl::StatusOr<T> ParseInteger(const std::string& token) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("'", token, "' is not an integer"));
  }
  return value;
}

absl::StatusOr<std::string> Keyed(LineReader& reader, const std::string& key) {
  ASSIGN_OR_RETURN(std::vector<std::string> tokens, reader.Next());
  if (tokens.size() != 2 || tokens[0] != key) {
    return reader.Error(absl::StrCat("expected '", key, " <value>'"));
  }
  return tokens[1];
}

}  // namespace

std::string FormatDouble(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

absl::StatusOr<double> ParseDouble(const std::string& token) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("'", token, "' is not a number"));
  }
  return value;
}

std::string SerializeInstance(const MipInstance& instance) {
  std::string out;
  absl::StrAppend(&out, kMagic, "\n");
  absl::StrAppend(&out, "family ", FamilyName(instance.family), "\n");
  absl::StrAppend(&out, "seed ", instance.seed, "\n");
  absl::StrAppend(&out, "variables ", instance.num_variables(), "\n");
  absl::StrAppend(&out, "rows ", instance.num_rows(), "\n");
  for (int j = 0; j < instance.num_variables(); ++j) {
    absl::StrAppend(&out, "v ", FormatDouble(instance.lower_bounds[j]), " ",
                    FormatDouble(instance.upper_bounds[j]), " ",
                    instance.integrality[j] ? "I" : "C", " ",
                    FormatDouble(instance.objective[j]), "\n");
  }
  for (const LinearRow& row : instance.rows) {
    const char* sense = row.sense == RowSense::kLessEqual  ? "L"
                        : row.sense == RowSense::kEqual    ? "E"
                                                           : "G";
    absl::StrAppend(&out, "r ", sense, " ", FormatDouble(row.rhs), " ",
                    row.coefficients.size());
    for (const SparseEntry& e : row.coefficients) {
      absl::StrAppend(&out, " ", e.index, " ", FormatDouble(e.value));
    }
    out += "\n";
  }
  out += "end\n";
  return out;
}

absl::StatusOr<MipInstance> ParseInstance(const std::string& text) {
  LineReader reader(text);
  MipInstance inst;
  {
    ASSIGN_OR_RETURN(std::vector<std::string> magic, reader.Next());
    if (magic.size() != 1 || magic[0] != kMagic) {
      return reader.Error("missing MIPR1 header");
    }
  }
  auto field = [&](const std::string& token,
                   const std::string& what) -> absl::StatusOr<double> {
    auto value = ParseDouble(token);
    if (!value.ok()) return reader.Error(absl::StrCat(what, ": ", value.status().message()));
    return *value;
  };
  {
    ASSIGN_OR_RETURN(std::string family, Keyed(reader, "family"));
    auto parsed = ParseFamily(family);
    if (!parsed.ok()) return reader.Error(std::string(parsed.status().message()));
    inst.family = *parsed;
  }
  {
    ASSIGN_OR_RETURN(std::string seed, Keyed(reader, "seed"));
    auto parsed = ParseInteger<uint64_t>(seed);
    if (!parsed.ok()) return reader.Error("seed must be an unsigned integer");
    inst.seed = *parsed;
  }
  int n = 0;
  int m = 0;
  {
    ASSIGN_OR_RETURN(std::string value, Keyed(reader, "variables"));
    auto parsed = ParseInteger<int>(value);
    if (!parsed.ok() || *parsed < 0) return reader.Error("bad variable count");
    n = *parsed;
  }
  {
    ASSIGN_OR_RETURN(std::string value, Keyed(reader, "rows"));
    auto parsed = ParseInteger<int>(value);
    if (!parsed.ok() || *parsed < 0) return reader.Error("bad row count");
    m = *parsed;
  }
  for (int j = 0; j < n; ++j) {
    ASSIGN_OR_RETURN(std::vector<std::string> t, reader.Next());
    if (t.size() != 5 || t[0] != "v") {
      return reader.Error(absl::StrCat("expected variable line ", j));
    }
    ASSIGN_OR_RETURN(double lower, field(t[1], "lower bound"));
    ASSIGN_OR_RETURN(double upper, field(t[2], "upper bound"));
    if (t[3] != "I" && t[3] != "C") return reader.Error("type must be I or C");
    ASSIGN_OR_RETURN(double objective, field(t[4], "objective"));
    inst.lower_bounds.push_back(lower);
    inst.upper_bounds.push_back(upper);
    inst.integrality.push_back(t[3] == "I");
    inst.objective.push_back(objective);
  }
  for (int i = 0; i < m; ++i) {
    ASSIGN_OR_RETURN(std::vector<std::string> t, reader.Next());
    if (t.size() < 4 || t[0] != "r") {
      return reader.Error(absl::StrCat("expected row line ", i));
    }
    LinearRow row;
    if (t[1] == "L") {
      row.sense = RowSense::kLessEqual;
    } else if (t[1] == "E") {
      row.sense = RowSense::kEqual;
    } else if (t[1] == "G") {
      row.sense = RowSense::kGreaterEqual;
    } else {
      return reader.Error("row sense must be L, E or G");
    }
    ASSIGN_OR_RETURN(row.rhs, field(t[2], "rhs"));
    auto nnz = ParseInteger<int>(t[3]);
    if (!nnz.ok() || *nnz < 0 || t.size() != 4 + 2 * static_cast<size_t>(*nnz)) {
      return reader.Error("nonzero count does not match the entries");
    }
    for (int k = 0; k < *nnz; ++k) {
      auto index = ParseInteger<int>(t[4 + 2 * k]);
      if (!index.ok() || *index < 0 || *index >= n) {
        return reader.Error(absl::StrCat("bad column index '", t[4 + 2 * k], "'"));
      }
      ASSIGN_OR_RETURN(double value, field(t[5 + 2 * k], "coefficient"));
      row.coefficients.push_back({*index, value});
    }
    inst.rows.push_back(std::move(row));
  }
  {
    ASSIGN_OR_RETURN(std::vector<std::string> t, reader.Next());
    if (t.size() != 1 || t[0] != "end") return reader.Error("missing 'end'");
  }
  if (absl::Status s = inst.Validate(); !s.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat("parse error: ", s.message()));
  }
  return inst;
}

absl::Status WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  out << text;
  out.close();
  if (!out) return absl::DataLossError(absl::StrCat("failed writing ", path));
  return absl::OkStatus();
}

absl::StatusOr<std::string> ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteInstance(const MipInstance& instance, const std::string& path) {
  return WriteTextFile(path, SerializeInstance(instance));
}

absl::StatusOr<MipInstance> ReadInstance(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadTextFile(path));
  auto parsed = ParseInstance(text);
  if (!parsed.ok()) {
    return absl::Status(parsed.status().code(),
                        absl::StrCat(path, ": ", parsed.status().message()));
  }
  return parsed;
}

}  // namespace cutrank
