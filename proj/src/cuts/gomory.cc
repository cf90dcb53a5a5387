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

#include "src/cuts/gomory.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "src/common/status_macros.h"
#include "src/common/tolerances.h"
#include "src/lp/standard_form.h"

namespace cutrank {
namespace {

// a - floor(a), with values near an integer treated as integral.
double Fraction(double a) {
  const double nearest = std::round(a);
  if (std::abs(a - nearest) < kFractionalityTolerance) return 0.0;
  return a - std::floor(a);
}

bool IsIntegralValue(double v) {
  return std::abs(v - std::round(v)) < 1e-9;
}

// Column value is integral at every integer-feasible point.
bool ColumnIsIntegral(const AffineExpr& expr, const MipInstance& instance) {
  if (!IsIntegralValue(expr.offset)) return false;
  for (const SparseEntry& e : expr.terms) {
    if (!instance.integrality[e.index] || !IsIntegralValue(e.value)) return false;
  }
  return true;
}

constexpr double kCoefficientDropTolerance = 1e-11;

}  // namespace

TableauCut FractionalRoundingCut(std::span<const double> row, double rhs) {
  TableauCut cut;
  cut.coefficients.resize(row.size());
  for (size_t c = 0; c < row.size(); ++c) cut.coefficients[c] = -Fraction(row[c]);
  cut.rhs = -Fraction(rhs);
  return cut;
}

TableauCut MixedIntegerRoundingCut(std::span<const double> row, double rhs,
                                   const std::vector<bool>& integral) {
  const double f0 = Fraction(rhs);
  TableauCut cut;
  cut.coefficients.assign(row.size(), 0.0);
  // sum g_c y_c >= 1, negated into <= form.
  for (size_t c = 0; c < row.size(); ++c) {
    const double a = row[c];
    double g = 0.0;
    if (integral[c]) {
      const double f = Fraction(a);
      g = f <= f0 ? f / f0 : (1.0 - f) / (1.0 - f0);
    } else if (a > 0.0) {
      g = a / f0;
    } else if (a < 0.0) {
      g = -a / (1.0 - f0);
    }
    cut.coefficients[c] = -g;
  }
  cut.rhs = -1.0;
  return cut;
}

absl::StatusOr<std::vector<Cut>> GenerateGomoryCuts(
    const SimplexTableau& tableau, const ProblemProperty& property,
    const GomoryOptions& options) {
  const MipInstance& instance = *property.instance;
  ASSIGN_OR_RETURN(const StandardForm sf,
                   BuildStandardForm(instance.Relaxation()));
  if (sf.num_columns() != tableau.num_columns || sf.num_rows != tableau.num_rows) {
    return absl::InvalidArgumentError(
        "tableau does not match the instance relaxation");
  }
  const int num_columns = sf.num_columns();
  std::vector<AffineExpr> image(num_columns);
  std::vector<bool> mapped(num_columns, false);
  std::vector<bool> integral(num_columns, false);
  for (int c = 0; c < num_columns; ++c) {
    auto expr = sf.ColumnInOriginalSpace(c);
    if (!expr.ok()) continue;
    image[c] = *std::move(expr);
    mapped[c] = true;
    integral[c] = ColumnIsIntegral(image[c], instance);
  }

  std::vector<bool> is_basic(num_columns, false);
  for (int b : tableau.basic_vars) is_basic[b] = true;

  std::vector<Cut> cuts;
  for (int r = 0; r < tableau.num_rows; ++r) {
    if (static_cast<int>(cuts.size()) >= options.max_cuts) break;
    const int basic = tableau.basic_vars[r];
    if (!mapped[basic] || !integral[basic]) continue;
    const double f0 = Fraction(tableau.rhs[r]);
    if (f0 <= kFractionalityTolerance || f0 >= 1.0 - kFractionalityTolerance) {
      continue;
    }
    const std::span<const double> row = tableau.row(r);
    bool pure = true;
    bool usable = true;
    for (int c = 0; c < num_columns; ++c) {
      if (is_basic[c] || row[c] == 0.0) continue;
      if (!mapped[c]) usable = false;
      if (!integral[c]) pure = false;
    }
    if (!usable) continue;

    TableauCut in_tableau = pure ? FractionalRoundingCut(row, tableau.rhs[r])
                                 : MixedIntegerRoundingCut(row, tableau.rhs[r], integral);
    std::vector<double> alpha(instance.num_variables(), 0.0);
    double beta = in_tableau.rhs;
    for (int c = 0; c < num_columns; ++c) {
      const double pi = is_basic[c] ? 0.0 : in_tableau.coefficients[c];
      if (pi == 0.0) continue;
      for (const SparseEntry& e : image[c].terms) alpha[e.index] += pi * e.value;
      beta -= pi * image[c].offset;
    }
    Cut cut;
    cut.kind = CutKind::kGomory;
    cut.source_row = r;
    cut.beta = beta;
    for (int j = 0; j < instance.num_variables(); ++j) {
      if (std::abs(alpha[j]) > kCoefficientDropTolerance) {
        cut.alpha.push_back({j, alpha[j]});
      }
    }
    if (!ValidateCut(cut, instance.num_variables()).ok()) continue;
    if (CutViolation(cut, property.x_lp_star) <= 1e-9) continue;
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

}  // namespace cutrank
