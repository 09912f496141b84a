// Copyright 2026 The c2mcollab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Two-phase primal simplex on a dense row-major tableau.
//
// Standard form: every variable becomes nonnegative (finite lower bounds
// are shifted out, free-below variables are split into a difference of two
// nonnegative columns, finite upper bounds become extra rows). Rows are
// normalized to nonnegative right-hand sides; <= rows get a slack that
// doubles as the initial basic variable, >= rows with positive rhs get a
// surplus plus an artificial, equalities get an artificial. Phase 1 drives
// the artificials to zero, phase 2 optimizes the real objective.
//
// Pivoting is deterministic: largest reduced cost with lowest-index
// tie-breaks, switching to Bland's rule after a degenerate stall so the
// method cannot cycle.

#include "c2m/simplex_lp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "c2m/errors.hpp"

namespace c2m {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void LinearProgram::set_bounds(int var, double lo, double hi) {
  const int n = num_vars();
  if (lower.empty()) lower.assign(n, 0.0);
  if (upper.empty()) upper.assign(n, kInf);
  lower[var] = lo;
  upper[var] = hi;
}

namespace {

struct VarMap {
  bool split = false;
  int col = -1;      // shifted column, or the positive half of a split
  int col_neg = -1;  // negative half of a split
  double shift = 0.0;
};

struct StdRow {
  std::vector<double> coeffs;  // structural columns only
  Relation relation = Relation::kLessEq;
  double rhs = 0.0;
};

struct Tableau {
  int rows = 0;
  int cols = 0;  // excludes the rhs column
  std::vector<double> cells;
  std::vector<int> basis;
  std::vector<char> is_artificial;

  double* row(int i) { return cells.data() + static_cast<std::size_t>(i) * (cols + 1); }
  const double* row(int i) const {
    return cells.data() + static_cast<std::size_t>(i) * (cols + 1);
  }
  double rhs(int i) const { return row(i)[cols]; }
};

void validate(const LinearProgram& lp) {
  const int n = lp.num_vars();
  for (double c : lp.objective) {
    if (!std::isfinite(c)) throw std::invalid_argument("objective has a non-finite coefficient");
  }
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& con = lp.constraints[i];
    if (con.coeffs.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument("constraint " + std::to_string(i) +
                                  " has wrong coefficient count");
    }
    for (double c : con.coeffs) {
      if (!std::isfinite(c)) {
        throw std::invalid_argument("constraint " + std::to_string(i) +
                                    " has a non-finite coefficient");
      }
    }
    if (!std::isfinite(con.rhs)) {
      throw std::invalid_argument("constraint " + std::to_string(i) +
                                  " has a non-finite rhs");
    }
  }
  if (!lp.lower.empty() && lp.lower.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("lower bounds have wrong size");
  }
  if (!lp.upper.empty() && lp.upper.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("upper bounds have wrong size");
  }
  for (int j = 0; j < n; ++j) {
    const double lo = lp.lower_bound(j);
    const double hi = lp.upper_bound(j);
    if (std::isnan(lo) || std::isnan(hi) || lo == kInf || hi == -kInf) {
      throw std::invalid_argument("variable " + std::to_string(j) + " has invalid bounds");
    }
  }
}

class Solver {
 public:
  Solver(const LinearProgram& lp, const SimplexOptions& opts) : lp_(lp), opts_(opts) {}

  LpSolution solve() {
    validate(lp_);

    // A variable with crossed bounds makes the whole program infeasible.
    for (int j = 0; j < lp_.num_vars(); ++j) {
      if (lp_.lower_bound(j) > lp_.upper_bound(j)) {
        return LpSolution{LpStatus::kInfeasible, {}, 0.0, {}, 0};
      }
    }

    map_variables();
    build_rows();
    build_tableau();
    if (opts_.log) dump_tableau("initial tableau");

    if (has_artificials_) {
      const bool feasible = run_phase(phase1_cost_);
      if (opts_.log) *opts_.log << "phase 1: " << iterations_ << " pivots\n";
      if (!feasible) {
        throw SimplexError("phase 1 objective unbounded (numerical breakdown)");
      }
      const double infeas = -objective_value_;
      if (infeas > opts_.feasibility_tol * rhs_scale_) {
        return LpSolution{LpStatus::kInfeasible, {}, 0.0, {}, iterations_};
      }
      drive_out_artificials();
    }

    const long phase1_iters = iterations_;
    const bool bounded = run_phase(phase2_cost_);
    if (opts_.log) {
      *opts_.log << "phase 2: " << (iterations_ - phase1_iters) << " pivots\n";
    }
    if (!bounded) {
      return LpSolution{LpStatus::kUnbounded, {}, 0.0, {}, iterations_};
    }
    return extract_solution();
  }

 private:
  void map_variables() {
    const int n = lp_.num_vars();
    vars_.resize(n);
    int col = 0;
    for (int j = 0; j < n; ++j) {
      const double lo = lp_.lower_bound(j);
      if (lo == -kInf) {
        vars_[j].split = true;
        vars_[j].col = col++;
        vars_[j].col_neg = col++;
      } else {
        vars_[j].col = col++;
        vars_[j].shift = lo;
      }
    }
    structural_cols_ = col;
  }

  // Transform the constraints (plus one row per finite upper bound) onto
  // the standard-form columns, then normalize to rhs >= 0.
  void build_rows() {
    const int n = lp_.num_vars();
    for (const auto& con : lp_.constraints) {
      StdRow row;
      row.coeffs.assign(structural_cols_, 0.0);
      row.relation = con.relation;
      row.rhs = con.rhs;
      for (int j = 0; j < n; ++j) {
        const double a = con.coeffs[j];
        if (a == 0.0) continue;
        row.coeffs[vars_[j].col] += a;
        if (vars_[j].split) {
          row.coeffs[vars_[j].col_neg] -= a;
        } else {
          row.rhs -= a * vars_[j].shift;
        }
      }
      rows_.push_back(std::move(row));
    }
    for (int j = 0; j < n; ++j) {
      const double hi = lp_.upper_bound(j);
      if (hi == kInf) continue;
      StdRow row;
      row.coeffs.assign(structural_cols_, 0.0);
      row.relation = Relation::kLessEq;
      row.coeffs[vars_[j].col] = 1.0;
      if (vars_[j].split) {
        row.coeffs[vars_[j].col_neg] = -1.0;
        row.rhs = hi;
      } else {
        row.rhs = hi - vars_[j].shift;
      }
      rows_.push_back(std::move(row));
    }

    for (auto& row : rows_) {
      if (row.rhs < 0.0) {
        for (double& c : row.coeffs) c = -c;
        row.rhs = -row.rhs;
        if (row.relation == Relation::kLessEq) {
          row.relation = Relation::kGreaterEq;
        } else if (row.relation == Relation::kGreaterEq) {
          row.relation = Relation::kLessEq;
        }
      }
      // A >= row with zero rhs is just a <= row in disguise; flipping it
      // here lets its slack start basic instead of spending an artificial.
      if (row.relation == Relation::kGreaterEq && row.rhs == 0.0) {
        for (double& c : row.coeffs) c = -c;
        row.relation = Relation::kLessEq;
      }
      // Equilibrate: with every row at unit scale, the pivot threshold
      // separates true zeros from elimination debris regardless of the
      // magnitude of the input data. Variable values are unchanged.
      double magnitude = 0.0;
      for (double c : row.coeffs) magnitude = std::max(magnitude, std::abs(c));
      if (magnitude > 0.0 && magnitude != 1.0) {
        for (double& c : row.coeffs) c /= magnitude;
        row.rhs /= magnitude;
      }
      rhs_scale_ = std::max(rhs_scale_, std::abs(row.rhs));
    }
    rhs_scale_ = std::max(1.0, rhs_scale_);
  }

  void build_tableau() {
    const int m = static_cast<int>(rows_.size());
    int slack_count = 0;
    int artificial_count = 0;
    for (const auto& row : rows_) {
      switch (row.relation) {
        case Relation::kLessEq: slack_count += 1; break;
        case Relation::kGreaterEq: slack_count += 1; artificial_count += 1; break;
        case Relation::kEqual: artificial_count += 1; break;
      }
    }
    const int cols = structural_cols_ + slack_count + artificial_count;
    const std::size_t bytes =
        static_cast<std::size_t>(m) * (cols + 1) * sizeof(double);
    if (bytes > opts_.max_tableau_bytes) {
      throw GuardError("simplex tableau of " + std::to_string(m) + "x" +
                       std::to_string(cols + 1) + " cells (" +
                       std::to_string(bytes) + " bytes) exceeds the memory cap");
    }

    t_.rows = m;
    t_.cols = cols;
    t_.cells.assign(static_cast<std::size_t>(m) * (cols + 1), 0.0);
    t_.basis.assign(m, -1);
    t_.is_artificial.assign(cols, 0);
    aux_row_.assign(cols - structural_cols_, -1);
    aux_sign_.assign(cols - structural_cols_, 0.0);
    ident_col_.assign(m, -1);

    int next_slack = structural_cols_;
    int next_artificial = structural_cols_ + slack_count;
    for (int i = 0; i < m; ++i) {
      double* r = t_.row(i);
      std::copy(rows_[i].coeffs.begin(), rows_[i].coeffs.end(), r);
      r[cols] = rows_[i].rhs;
      switch (rows_[i].relation) {
        case Relation::kLessEq:
          r[next_slack] = 1.0;
          aux_row_[next_slack - structural_cols_] = i;
          aux_sign_[next_slack - structural_cols_] = 1.0;
          t_.basis[i] = next_slack++;
          break;
        case Relation::kGreaterEq:
          r[next_slack] = -1.0;
          aux_row_[next_slack - structural_cols_] = i;
          aux_sign_[next_slack - structural_cols_] = -1.0;
          next_slack++;
          r[next_artificial] = 1.0;
          aux_row_[next_artificial - structural_cols_] = i;
          aux_sign_[next_artificial - structural_cols_] = 1.0;
          t_.is_artificial[next_artificial] = 1;
          t_.basis[i] = next_artificial++;
          break;
        case Relation::kEqual:
          r[next_artificial] = 1.0;
          aux_row_[next_artificial - structural_cols_] = i;
          aux_sign_[next_artificial - structural_cols_] = 1.0;
          t_.is_artificial[next_artificial] = 1;
          t_.basis[i] = next_artificial++;
          break;
      }
      // The column that starts as row i's basis is the unit column e_i, so
      // its tableau state stays equal to column i of the basis inverse.
      ident_col_[i] = t_.basis[i];
    }
    has_artificials_ = artificial_count > 0;

    phase1_cost_.assign(cols, 0.0);
    for (int j = 0; j < cols; ++j) {
      if (t_.is_artificial[j]) phase1_cost_[j] = -1.0;
    }
    phase2_cost_.assign(cols, 0.0);
    for (int j = 0; j < lp_.num_vars(); ++j) {
      const double c = lp_.objective[j];
      if (c == 0.0) continue;
      phase2_cost_[vars_[j].col] += c;
      if (vars_[j].split) phase2_cost_[vars_[j].col_neg] -= c;
    }
  }

  // Maximizes the given cost vector over the current tableau. Returns
  // false when the phase objective is unbounded above.
  bool run_phase(const std::vector<double>& cost) {
    const int m = t_.rows;
    const int cols = t_.cols;

    reduced_.assign(cost.begin(), cost.end());
    objective_value_ = 0.0;
    for (int i = 0; i < m; ++i) {
      const double cb = cost[t_.basis[i]];
      if (cb == 0.0) continue;
      const double* r = t_.row(i);
      objective_value_ += cb * r[cols];
      for (int j = 0; j < cols; ++j) reduced_[j] -= cb * r[j];
    }

    double cost_scale = 1.0;
    for (double c : cost) cost_scale = std::max(cost_scale, std::abs(c));
    const double enter_tol = 1e-9 * cost_scale;

    bool bland = false;
    int stall = 0;
    while (true) {
      if (iterations_ > kMaxIterations) {
        throw SimplexError("simplex iteration cap exceeded");
      }

      int pc = -1;
      if (bland) {
        for (int j = 0; j < cols; ++j) {
          if (!entering_allowed(j)) continue;
          if (reduced_[j] > enter_tol) { pc = j; break; }
        }
      } else {
        double best = enter_tol;
        for (int j = 0; j < cols; ++j) {
          if (!entering_allowed(j)) continue;
          if (reduced_[j] > best) { best = reduced_[j]; pc = j; }
        }
      }
      if (pc < 0) return true;  // phase optimum reached

      // Ratio test; ties go to the lowest basic variable index (Bland).
      // Entries below kRatioAccept are elimination debris on equilibrated
      // rows; pivoting on one would amplify roundoff into the basis.
      const double accept = std::max(opts_.pivot_tol, kRatioAccept);
      int pr = -1;
      double best_ratio = kInf;
      double largest_rejected = 0.0;
      int rejected_row = -1;
      for (int i = 0; i < m; ++i) {
        const double aij = t_.row(i)[pc];
        if (aij > accept) {
          const double ratio = t_.rhs(i) / aij;
          const double tie = 1e-9 * std::max(1.0, std::abs(best_ratio));
          if (pr < 0 || ratio < best_ratio - tie) {
            pr = i;
            best_ratio = ratio;
          } else if (ratio <= best_ratio + tie && t_.basis[i] < t_.basis[pr]) {
            pr = i;
            best_ratio = std::min(best_ratio, ratio);
          }
        } else if (aij > largest_rejected) {
          largest_rejected = aij;
          rejected_row = i;
        }
      }
      if (pr < 0) {
        // No usable pivot. The incrementally maintained reduced cost may
        // be stale drift, so recompute it from the tableau before drawing
        // conclusions; a non-improving column is simply skipped.
        double fresh = cost[pc];
        for (int i = 0; i < m; ++i) {
          if (cost[t_.basis[i]] != 0.0) fresh -= cost[t_.basis[i]] * t_.row(i)[pc];
        }
        if (fresh <= enter_tol) {
          reduced_[pc] = std::min(fresh, 0.0);
          continue;
        }
        if (largest_rejected > 0.0) {
          throw SimplexError(
              "degenerate pivot: column " + std::to_string(pc) +
              " has no pivot above " + std::to_string(accept) +
              "; best candidate " + std::to_string(largest_rejected) +
              " in constraint row " + std::to_string(rejected_row));
        }
        return false;  // improving ray, objective unbounded
      }

      const double before = objective_value_;
      pivot(pr, pc);
      ++iterations_;
      if (opts_.log && t_.rows * (t_.cols + 1) <= 5000) {
        *opts_.log << "pivot " << iterations_ << ": col " << pc << " enters, row "
                   << pr << " leaves, objective " << objective_value_ << "\n";
      }
      if (objective_value_ > before + 1e-12 * std::max(1.0, std::abs(before))) {
        stall = 0;
      } else if (!bland && ++stall > kStallLimit) {
        bland = true;  // anti-cycling from here on
      }
    }
  }

  bool entering_allowed(int j) const {
    return !t_.is_artificial[j];  // artificials start basic and never return
  }

  void pivot(int pr, int pc) {
    const int cols = t_.cols;
    double* prow = t_.row(pr);
    const double inv = 1.0 / prow[pc];
    for (int j = 0; j <= cols; ++j) prow[j] *= inv;
    prow[pc] = 1.0;

    for (int i = 0; i < t_.rows; ++i) {
      if (i == pr) continue;
      double* r = t_.row(i);
      const double f = r[pc];
      if (f == 0.0) continue;
      for (int j = 0; j <= cols; ++j) r[j] -= f * prow[j];
      r[pc] = 0.0;
    }
    const double f = reduced_[pc];
    if (f != 0.0) {
      for (int j = 0; j < cols; ++j) reduced_[j] -= f * prow[j];
      objective_value_ += f * prow[cols];
      reduced_[pc] = 0.0;
    }
    t_.basis[pr] = pc;
  }

  // Basic artificials left at zero after phase 1 are swapped for any real
  // column with a usable pivot; rows that offer none are dependent and the
  // zero artificial stays parked there harmlessly.
  void drive_out_artificials() {
    constexpr double kDriveOutTol = 1e-8;
    for (int i = 0; i < t_.rows; ++i) {
      if (!t_.is_artificial[t_.basis[i]]) continue;
      const double* r = t_.row(i);
      for (int j = 0; j < t_.cols; ++j) {
        if (!t_.is_artificial[j] && std::abs(r[j]) > kDriveOutTol) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  // One step of iterative refinement on the basic solution: the initial
  // unit columns carry the basis inverse, so the correction B^-1 (b - Bx)
  // is a pair of passes over the tableau. Long-summed pivots leave basic
  // values with roundoff around feasibility_tol; refinement pulls them
  // back to machine precision, which downstream exact-tie consumers need.
  void refine_basic_solution() {
    const int m = t_.rows;
    std::vector<long double> residual(m);
    for (int r = 0; r < m; ++r) residual[r] = rows_[r].rhs;
    for (int i = 0; i < m; ++i) {
      const int j = t_.basis[i];
      const long double v = t_.rhs(i);
      if (v == 0.0L) continue;
      if (j < structural_cols_) {
        for (int r = 0; r < m; ++r) {
          const double a = rows_[r].coeffs[j];
          if (a != 0.0) residual[r] -= a * v;
        }
      } else {
        residual[aux_row_[j - structural_cols_]] -= aux_sign_[j - structural_cols_] * v;
      }
    }
    for (int i = 0; i < m; ++i) {
      const double* row = t_.row(i);
      long double delta = 0.0L;
      for (int r = 0; r < m; ++r) {
        if (residual[r] != 0.0L) delta += residual[r] * row[ident_col_[r]];
      }
      t_.row(i)[t_.cols] += static_cast<double>(delta);
    }
  }

  LpSolution extract_solution() {
    refine_basic_solution();
    refine_basic_solution();

    std::vector<double> std_values(t_.cols, 0.0);
    for (int i = 0; i < t_.rows; ++i) std_values[t_.basis[i]] = t_.rhs(i);

    const int n = lp_.num_vars();
    LpSolution sol;
    sol.status = LpStatus::kOptimal;
    sol.iterations = iterations_;
    sol.values.resize(n);
    for (int j = 0; j < n; ++j) {
      if (vars_[j].split) {
        sol.values[j] = std_values[vars_[j].col] - std_values[vars_[j].col_neg];
      } else {
        sol.values[j] = vars_[j].shift + std_values[vars_[j].col];
      }
    }

    sol.objective = 0.0;
    for (int j = 0; j < n; ++j) sol.objective += lp_.objective[j] * sol.values[j];

    // Final exact pass over the original data: recompute every slack and
    // certify feasibility before reporting optimality.
    sol.slack.resize(lp_.constraints.size());
    for (std::size_t i = 0; i < lp_.constraints.size(); ++i) {
      const auto& con = lp_.constraints[i];
      double ax = 0.0;
      double scale = std::max(1.0, std::abs(con.rhs));
      for (int j = 0; j < n; ++j) {
        const double term = con.coeffs[j] * sol.values[j];
        ax += term;
        scale = std::max(scale, std::abs(term));
      }
      const double tol = opts_.feasibility_tol * scale;
      double slack = 0.0;
      bool ok = true;
      switch (con.relation) {
        case Relation::kLessEq:
          slack = con.rhs - ax;
          ok = slack >= -tol;
          break;
        case Relation::kGreaterEq:
          slack = ax - con.rhs;
          ok = slack >= -tol;
          break;
        case Relation::kEqual:
          slack = ax - con.rhs;
          ok = std::abs(slack) <= tol;
          break;
      }
      if (!ok) {
        throw SimplexError("solution failed the final feasibility recheck on constraint " +
                           std::to_string(i) + " (residual " + std::to_string(slack) + ")");
      }
      sol.slack[i] = slack;
    }
    for (int j = 0; j < n; ++j) {
      const double lo = lp_.lower_bound(j);
      const double hi = lp_.upper_bound(j);
      const double scale = std::max(1.0, std::abs(sol.values[j]));
      const double tol_lo =
          opts_.feasibility_tol * std::max(scale, std::abs(lo));
      const double tol_hi =
          std::isfinite(hi) ? opts_.feasibility_tol * std::max(scale, std::abs(hi)) : 0.0;
      if (sol.values[j] < lo - tol_lo || sol.values[j] > hi + tol_hi) {
        throw SimplexError("solution failed the final bound recheck on variable " +
                           std::to_string(j));
      }
    }

    if (opts_.log) {
      *opts_.log << "status: optimal, objective " << sol.objective << ", "
                 << sol.iterations << " pivots\n";
    }
    return sol;
  }

  void dump_tableau(const char* title) {
    std::ostream& os = *opts_.log;
    os << title << ": " << t_.rows << " rows, " << t_.cols
       << " columns (+rhs), " << structural_cols_ << " structural\n";
    if (static_cast<long>(t_.rows) * (t_.cols + 1) > 5000) {
      os << "(tableau too large to print)\n";
      return;
    }
    for (int i = 0; i < t_.rows; ++i) {
      const double* r = t_.row(i);
      os << "  [" << i << "] basis=" << t_.basis[i] << " |";
      for (int j = 0; j <= t_.cols; ++j) os << ' ' << r[j];
      os << "\n";
    }
  }

  static constexpr int kStallLimit = 64;
  static constexpr long kMaxIterations = 200000;
  static constexpr double kRatioAccept = 1e-9;

  const LinearProgram& lp_;
  const SimplexOptions& opts_;

  std::vector<VarMap> vars_;
  int structural_cols_ = 0;
  std::vector<StdRow> rows_;
  std::vector<int> aux_row_;     // slack/surplus/artificial column -> row
  std::vector<double> aux_sign_; // and its coefficient there
  std::vector<int> ident_col_;   // row -> its initial unit column
  double rhs_scale_ = 1.0;
  Tableau t_;
  bool has_artificials_ = false;
  std::vector<double> phase1_cost_;
  std::vector<double> phase2_cost_;
  std::vector<double> reduced_;
  double objective_value_ = 0.0;
  long iterations_ = 0;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& opts) {
  return Solver(lp, opts).solve();
}

}  // namespace c2m
