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

// Plain-text instance format, version MIPR1:
//
//   MIPR1
//   family <name>
//   seed <uint64>
//   variables <n>
//   rows <m>
//   v <lower> <upper> <I|C> <objective>          (n lines)
//   r <L|E|G> <rhs> <nnz> <index> <coef> ...      (m lines)
//   end
//
// Doubles are written in shortest round-trip decimal form, so reading back a
// written instance reproduces every numeric field bit for bit.

#ifndef SRC_MIP_INSTANCE_IO_H_
#define SRC_MIP_INSTANCE_IO_H_

#include <string>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "src/mip/mip_instance.h"

namespace cutrank {

std::string FormatDouble(double value);
absl::StatusOr<double> ParseDouble(const std::string& token);

std::string SerializeInstance(const MipInstance& instance);
absl::StatusOr<MipInstance> ParseInstance(const std::string& text);

absl::Status WriteInstance(const MipInstance& instance, const std::string& path);
absl::StatusOr<MipInstance> ReadInstance(const std::string& path);

// Whole-file helpers shared by the other text formats.
absl::Status WriteTextFile(const std::string& path, const std::string& text);
absl::StatusOr<std::string> ReadTextFile(const std::string& path);

}  // namespace cutrank

#endif  // SRC_MIP_INSTANCE_IO_H_
