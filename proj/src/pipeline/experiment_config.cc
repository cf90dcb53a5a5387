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

#include "src/pipeline/experiment_config.h"

#include <charconv>
#include <functional>
#include <map>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "src/common/status_macros.h"
#include "src/mip/instance_io.h"

namespace cutrank {
namespace {

absl::Status ParseValue(const std::string& text, int* out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *out);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return absl::InvalidArgumentError(absl::StrCat("'", text, "' is not an integer"));
  }
  return absl::OkStatus();
}

absl::Status ParseValue(const std::string& text, int64_t* out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *out);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return absl::InvalidArgumentError(absl::StrCat("'", text, "' is not an integer"));
  }
  return absl::OkStatus();
}

absl::Status ParseValue(const std::string& text, uint64_t* out) {
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *out);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("'", text, "' is not a nonnegative integer"));
  }
  return absl::OkStatus();
}

absl::Status ParseValue(const std::string& text, double* out) {
  ASSIGN_OR_RETURN(*out, ParseDouble(text));
  return absl::OkStatus();
}

absl::Status ParseValue(const std::string& text, bool* out) {
  if (text == "true" || text == "1") {
    *out = true;
  } else if (text == "false" || text == "0") {
    *out = false;
  } else {
    return absl::InvalidArgumentError(absl::StrCat("'", text, "' is not a boolean"));
  }
  return absl::OkStatus();
}

absl::Status ParseValue(const std::string& text, std::string* out) {
  if (text.empty()) return absl::InvalidArgumentError("empty value");
  *out = text;
  return absl::OkStatus();
}

absl::Status ParseValue(const std::string& text, InstanceFamily* out) {
  ASSIGN_OR_RETURN(*out, ParseFamily(text));
  return absl::OkStatus();
}

absl::Status ParseValue(const std::string& text, FeedbackMode* out) {
  ASSIGN_OR_RETURN(*out, ParseFeedbackMode(text));
  return absl::OkStatus();
}

std::string Format(int v) { return absl::StrCat(v); }
std::string Format(int64_t v) { return absl::StrCat(v); }
std::string Format(uint64_t v) { return absl::StrCat(v); }
std::string Format(double v) { return FormatDouble(v); }
std::string Format(bool v) { return v ? "true" : "false"; }
std::string Format(const std::string& v) { return v; }
std::string Format(InstanceFamily v) { return FamilyName(v); }
std::string Format(FeedbackMode v) { return FeedbackModeName(v); }

struct Field {
  std::string section;
  std::string key;
  std::function<absl::Status(const std::string&)> parse;
  std::function<std::string()> format;
};

template <typename T>
Field MakeField(const std::string& section, const std::string& key, T* target) {
  return Field{section, key,
               [target](const std::string& text) { return ParseValue(text, target); },
               [target] { return Format(*target); }};
}

// Fields in file order; bound to one config object.
std::vector<Field> Fields(ExperimentConfig& c) {
  return {
      MakeField("experiment", "family", &c.family),
      MakeField("experiment", "train_count", &c.train_count),
      MakeField("experiment", "test_count", &c.test_count),
      MakeField("experiment", "train_seed_start", &c.train_seed_start),
      MakeField("experiment", "test_seed_start", &c.test_seed_start),
      MakeField("experiment", "out_dir", &c.out_dir),
      MakeField("experiment", "workers", &c.workers),
      MakeField("experiment", "report_wall_time", &c.report_wall_time),
      MakeField("set_cover", "n_elements", &c.set_cover.n_elements),
      MakeField("set_cover", "n_sets", &c.set_cover.n_sets),
      MakeField("set_cover", "density", &c.set_cover.density),
      MakeField("set_cover", "max_cost", &c.set_cover.max_cost),
      MakeField("set_cover", "repair_attempts", &c.set_cover.repair_attempts),
      MakeField("knapsack", "n_items", &c.knapsack.n_items),
      MakeField("knapsack", "max_number", &c.knapsack.max_number),
      MakeField("knapsack", "max_value", &c.knapsack.max_value),
      MakeField("knapsack", "max_weight", &c.knapsack.max_weight),
      MakeField("knapsack", "zero_one", &c.knapsack.zero_one),
      MakeField("planning", "n_factories", &c.planning.n_factories),
      MakeField("planning", "n_demands", &c.planning.n_demands),
      MakeField("planning", "max_demand", &c.planning.max_demand),
      MakeField("planning", "max_unit_cost", &c.planning.max_unit_cost),
      MakeField("general", "n_vars", &c.general.n_vars),
      MakeField("general", "n_cons", &c.general.n_cons),
      MakeField("general", "integer_fraction", &c.general.integer_fraction),
      MakeField("general", "max_coef", &c.general.max_coef),
      MakeField("general", "max_bound", &c.general.max_bound),
      MakeField("train", "k_percent", &c.train.k_percent),
      MakeField("train", "lambda_percent", &c.train.lambda_percent),
      MakeField("train", "gamma", &c.train.gamma),
      MakeField("train", "learning_rate", &c.train.learning_rate),
      MakeField("train", "epsilon", &c.train.epsilon),
      MakeField("train", "epochs", &c.train.epochs),
      MakeField("train", "batch_size", &c.train.batch_size),
      MakeField("train", "bags_per_instance", &c.train.bags_per_instance),
      MakeField("train", "feedback_mode", &c.train.feedback_mode),
      MakeField("train", "seed", &c.train.seed),
      MakeField("train", "relabel_each_round", &c.train.relabel_each_round),
      MakeField("solver", "node_limit", &c.node_limit),
      MakeField("solver", "time_limit", &c.time_limit),
      MakeField("solver", "random_policy_seed", &c.random_policy_seed),
      MakeField("solver", "max_gomory", &c.cut_options.max_gomory),
      MakeField("solver", "max_cover", &c.cut_options.max_cover),
      MakeField("solver", "max_clique", &c.cut_options.max_clique),
  };
}

}  // namespace

absl::Status ExperimentConfig::Validate() const {
  if (train_count < 0 || test_count < 0) {
    return absl::InvalidArgumentError("instance counts must be nonnegative");
  }
  // Seed ranges [start, start + count) must not overlap.
  const uint64_t train_end = train_seed_start + static_cast<uint64_t>(train_count);
  const uint64_t test_end = test_seed_start + static_cast<uint64_t>(test_count);
  if (train_count > 0 && test_count > 0 && train_seed_start < test_end &&
      test_seed_start < train_end) {
    return absl::InvalidArgumentError(absl::StrCat(
        "train seeds [", train_seed_start, ", ", train_end, ") overlap test seeds [",
        test_seed_start, ", ", test_end, ")"));
  }
  if (workers < 1) return absl::InvalidArgumentError("workers must be at least 1");
  if (out_dir.empty()) return absl::InvalidArgumentError("out_dir is empty");
  RETURN_IF_ERROR(train.Validate());
  return Solver().Validate();
}

BncConfig ExperimentConfig::Solver() const {
  BncConfig b;
  b.k_percent = train.k_percent;
  b.node_limit = node_limit;
  b.time_limit = time_limit;
  b.feedback_mode = train.feedback_mode;
  b.seed = random_policy_seed;
  b.cut_options = cut_options;
  return b;
}

absl::StatusOr<ExperimentConfig> ParseExperimentConfig(const std::string& text) {
  ExperimentConfig config;
  std::vector<Field> fields = Fields(config);
  std::string section;
  int line_number = 0;
  for (absl::string_view raw : absl::StrSplit(text, '\n')) {
    ++line_number;
    auto error = [&](const std::string& what) {
      return absl::InvalidArgumentError(
          absl::StrCat("config line ", line_number, ": ", what));
    };
    std::string line(raw.substr(0, raw.find('#')));
    absl::StripAsciiWhitespace(&line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') return error("unterminated section header");
      section = line.substr(1, line.size() - 2);
      absl::StripAsciiWhitespace(&section);
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos) return error("expected key = value");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    absl::StripAsciiWhitespace(&key);
    absl::StripAsciiWhitespace(&value);
    std::string key_section = section;
    if (const size_t dot = key.find('.'); dot != std::string::npos) {
      key_section = key.substr(0, dot);
      key = key.substr(dot + 1);
    }
    Field* field = nullptr;
    for (Field& f : fields) {
      if (f.section == key_section && f.key == key) field = &f;
    }
    if (field == nullptr) {
      return error(absl::StrCat("unknown key '", key_section, ".", key, "'"));
    }
    if (absl::Status s = field->parse(value); !s.ok()) {
      return error(absl::StrCat(key_section, ".", key, ": ", s.message()));
    }
  }
  RETURN_IF_ERROR(config.Validate());
  return config;
}

absl::StatusOr<ExperimentConfig> ReadExperimentConfig(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadTextFile(path));
  return ParseExperimentConfig(text);
}

std::string FormatExperimentConfig(const ExperimentConfig& config) {
  ExperimentConfig copy = config;
  std::string out;
  std::string section;
  for (const Field& f : Fields(copy)) {
    if (f.section != section) {
      section = f.section;
      absl::StrAppend(&out, out.empty() ? "" : "\n", "[", section, "]\n");
    }
    absl::StrAppend(&out, f.key, " = ", f.format(), "\n");
  }
  return out;
}

absl::StatusOr<MipInstance> GenerateInstance(const ExperimentConfig& config,
                                             uint64_t seed) {
  switch (config.family) {
    case InstanceFamily::kSetCover:
      return GenerateSetCover(config.set_cover, seed);
    case InstanceFamily::kKnapsack:
      return GenerateKnapsack(config.knapsack, seed);
    case InstanceFamily::kPlanning:
      return GeneratePlanning(config.planning, seed);
    case InstanceFamily::kGeneral:
      return GenerateGeneralMip(config.general, seed);
    case InstanceFamily::kCustom:
      break;
  }
  return absl::InvalidArgumentError("the custom family has no generator");
}

}  // namespace cutrank
