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

#include "src/lp/simplex.h"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "Eigen/Dense"
#include "src/common/status_macros.h"
#include "src/common/tolerances.h"
#include "src/lp/standard_form.h"

namespace cutrank {
namespace {

constexpr double kDropTolerance = 1e-13;

class DenseSimplex {
 public:
  DenseSimplex(const StandardForm& sf, const SimplexOptions& options)
      : sf_(sf), options_(options), m_(sf.num_rows) {
    // Columns: structural | slack | artificial (one per negative-rhs row).
    for (int r = 0; r < m_; ++r) {
      if (sf_.rhs[r] < 0.0) artificial_rows_.push_back(r);
    }
    num_real_ = sf_.num_columns();
    num_cols_ = num_real_ + static_cast<int>(artificial_rows_.size());
    width_ = num_cols_ + 1;
    tab_.assign(static_cast<size_t>(m_) * width_, 0.0);
    basis_.assign(m_, -1);
    for (int r = 0; r < m_; ++r) {
      const double sign = sf_.rhs[r] < 0.0 ? -1.0 : 1.0;
      for (int k = 0; k < sf_.num_structural; ++k) {
        at(r, k) = sign * sf_.at(r, k);
      }
      at(r, sf_.num_structural + r) = sign;
      rhs(r) = sign * sf_.rhs[r];
      if (sign > 0.0) basis_[r] = sf_.num_structural + r;
    }
    for (size_t a = 0; a < artificial_rows_.size(); ++a) {
      const int r = artificial_rows_[a];
      const int col = num_real_ + static_cast<int>(a);
      at(r, col) = 1.0;
      basis_[r] = col;
    }
    eligible_.assign(num_cols_, 1);
    max_iterations_ = options_.iteration_limit > 0
                          ? options_.iteration_limit
                          : 50LL * (m_ + num_cols_) + 10000;
  }

  LpStatus Solve() {
    if (!artificial_rows_.empty()) {
      std::vector<double> phase_one(num_cols_, 0.0);
      for (int c = num_real_; c < num_cols_; ++c) phase_one[c] = 1.0;
      const LpStatus status = Optimize(phase_one);
      if (status != LpStatus::kOptimal) {
        // Phase one is bounded below by zero; anything else is numerical.
        return LpStatus::kNumericalFailure;
      }
      double infeasibility = 0.0;
      double scale = 1.0;
      for (int r = 0; r < m_; ++r) {
        if (basis_[r] >= num_real_) infeasibility += rhs(r);
        scale = std::max(scale, std::abs(sf_.rhs[r]));
      }
      if (infeasibility > kFeasibilityTolerance * scale) {
        return LpStatus::kInfeasible;
      }
      if (!DriveOutArtificials()) return LpStatus::kNumericalFailure;
      for (int c = num_real_; c < num_cols_; ++c) eligible_[c] = 0;
    }
    std::vector<double> phase_two(num_cols_, 0.0);
    for (int k = 0; k < sf_.num_structural; ++k) phase_two[k] = sf_.cost[k];
    return Optimize(phase_two);
  }

  const std::vector<int>& basis() const { return basis_; }
  int64_t iterations() const { return iterations_; }

 private:
  double& at(int r, int c) { return tab_[static_cast<size_t>(r) * width_ + c]; }
  double at(int r, int c) const {
    return tab_[static_cast<size_t>(r) * width_ + c];
  }
  double& rhs(int r) { return at(r, num_cols_); }
  double rhs(int r) const { return at(r, num_cols_); }

  void Price(const std::vector<double>& cost) {
    reduced_.assign(cost.begin(), cost.end());
    for (int r = 0; r < m_; ++r) {
      const double cb = cost[basis_[r]];
      if (cb == 0.0) continue;
      const double* row = &tab_[static_cast<size_t>(r) * width_];
      for (int c = 0; c < num_cols_; ++c) reduced_[c] -= cb * row[c];
    }
    for (int r = 0; r < m_; ++r) reduced_[basis_[r]] = 0.0;
  }

  int ChooseEntering(bool bland) const {
    int best = -1;
    double best_value = -kOptimalityTolerance;
    for (int c = 0; c < num_cols_; ++c) {
      if (!eligible_[c]) continue;
      if (reduced_[c] < best_value) {
        best = c;
        if (bland) break;
        best_value = reduced_[c];
      }
    }
    return best;
  }

  int ChooseLeaving(int entering, bool bland) const {
    int best = -1;
    double best_ratio = kInfinity;
    for (int r = 0; r < m_; ++r) {
      const double a = at(r, entering);
      if (a <= kPivotTolerance) continue;
      const double ratio = std::max(0.0, rhs(r)) / a;
      if (best < 0 || ratio < best_ratio - 1e-12 * (1.0 + best_ratio)) {
        best = r;
        best_ratio = ratio;
        continue;
      }
      if (ratio <= best_ratio + 1e-12 * (1.0 + best_ratio)) {
        const bool better = bland ? basis_[r] < basis_[best]
                                  : a > at(best, entering);
        if (better) {
          best = r;
          best_ratio = std::min(best_ratio, ratio);
        }
      }
    }
    return best;
  }

  void Pivot(int pivot_row, int entering) {
    double* prow = &tab_[static_cast<size_t>(pivot_row) * width_];
    const double inv = 1.0 / prow[entering];
    for (int c = 0; c < width_; ++c) prow[c] *= inv;
    prow[entering] = 1.0;
    for (int r = 0; r < m_; ++r) {
      if (r == pivot_row) continue;
      double* row = &tab_[static_cast<size_t>(r) * width_];
      const double factor = row[entering];
      if (factor == 0.0) continue;
      for (int c = 0; c < width_; ++c) {
        if (prow[c] == 0.0) continue;
        row[c] -= factor * prow[c];
        if (std::abs(row[c]) < kDropTolerance) row[c] = 0.0;
      }
      row[entering] = 0.0;
      if (row[num_cols_] < 0.0 && row[num_cols_] > -kFeasibilityTolerance) {
        row[num_cols_] = 0.0;
      }
    }
    const double factor = reduced_[entering];
    if (factor != 0.0) {
      for (int c = 0; c < num_cols_; ++c) reduced_[c] -= factor * prow[c];
    }
    reduced_[entering] = 0.0;
    basis_[pivot_row] = entering;
    ++iterations_;
  }

  LpStatus Optimize(const std::vector<double>& cost) {
    Price(cost);
    bool bland = false;
    bool fresh_prices = true;
    int stalled = 0;
    while (true) {
      if (iterations_ >= max_iterations_) return LpStatus::kNumericalFailure;
      const int entering = ChooseEntering(bland);
      if (entering < 0) {
        if (fresh_prices) return LpStatus::kOptimal;
        // Confirm optimality against prices free of accumulated drift.
        Price(cost);
        fresh_prices = true;
        continue;
      }
      const int leaving = ChooseLeaving(entering, bland);
      if (leaving < 0) return LpStatus::kUnbounded;
      const double step = std::max(0.0, rhs(leaving)) / at(leaving, entering);
      if (step * -reduced_[entering] <= 1e-12) {
        if (++stalled > options_.degenerate_pivot_budget) bland = true;
      } else {
        stalled = 0;
        bland = false;
      }
      Pivot(leaving, entering);
      fresh_prices = false;
    }
  }

  bool DriveOutArtificials() {
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < num_real_) continue;
      int best = -1;
      double best_abs = 1e-7;
      for (int c = 0; c < num_real_; ++c) {
        if (std::abs(at(r, c)) > best_abs) {
          best = c;
          best_abs = std::abs(at(r, c));
        }
      }
      if (best < 0) return false;
      // Degenerate pivot: the artificial sits at zero, so the sign of the
      // pivot element does not matter for feasibility.
      reduced_.assign(num_cols_, 0.0);
      Pivot(r, best);
    }
    return true;
  }

  const StandardForm& sf_;
  const SimplexOptions& options_;
  const int m_;
  int num_real_ = 0;
  int num_cols_ = 0;
  int width_ = 0;
  std::vector<int> artificial_rows_;
  std::vector<double> tab_;
  std::vector<double> reduced_;
  std::vector<int> basis_;
  std::vector<char> eligible_;
  int64_t iterations_ = 0;
  int64_t max_iterations_ = 0;
};

// Recomputes the basic structural values from the basis matrix directly.
bool BasicSolution(const StandardForm& sf, const std::vector<int>& basis,
                   std::vector<double>* y) {
  const int m = sf.num_rows;
  y->assign(sf.num_structural, 0.0);
  if (m == 0) return true;
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    const int col = basis[i];
    for (int r = 0; r < m; ++r) {
      b(r, i) = col < sf.num_structural
                    ? sf.at(r, col)
                    : (col - sf.num_structural == r ? 1.0 : 0.0);
    }
  }
  Eigen::VectorXd rhs(m);
  for (int r = 0; r < m; ++r) rhs(r) = sf.rhs[r];
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(b);
  const Eigen::VectorXd xb = lu.solve(rhs);
  if (!xb.allFinite()) return false;
  for (int i = 0; i < m; ++i) {
    if (basis[i] < sf.num_structural) (*y)[basis[i]] = std::max(0.0, xb(i));
  }
  return true;
}

}  // namespace

absl::StatusOr<LpSolution> SolveLp(const LinearProgram& lp,
                                   const SimplexOptions& options) {
  ASSIGN_OR_RETURN(const StandardForm sf, BuildStandardForm(lp));
  LpSolution solution;
  DenseSimplex simplex(sf, options);
  solution.status = simplex.Solve();
  solution.iteration_count = simplex.iterations();
  if (solution.status != LpStatus::kOptimal) return solution;

  solution.basis = simplex.basis();
  std::vector<double> y;
  if (!BasicSolution(sf, solution.basis, &y)) {
    solution.status = LpStatus::kNumericalFailure;
    return solution;
  }
  solution.x = sf.ToOriginal(y);
  if (MaxScaledViolation(lp, solution.x) > kFeasibilityTolerance) {
    solution.status = LpStatus::kNumericalFailure;
    return solution;
  }
  double value = 0.0;
  for (int j = 0; j < lp.num_variables(); ++j) {
    value += lp.objective[j] * solution.x[j];
  }
  solution.objective_value = value;
  return solution;
}

}  // namespace cutrank
