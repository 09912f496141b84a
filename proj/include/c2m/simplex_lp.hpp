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

#ifndef C2M_SIMPLEX_LP_HPP
#define C2M_SIMPLEX_LP_HPP

#include <cstddef>
#include <iosfwd>
#include <limits>
#include <vector>

namespace c2m {

enum class Relation { kLessEq, kEqual, kGreaterEq };

struct LinearConstraint {
  std::vector<double> coeffs;
  Relation relation = Relation::kLessEq;
  double rhs = 0.0;
};

// A dense linear program, maximized. Variables default to [0, +inf);
// lower bounds may be -inf (free below) and upper bounds +inf.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<double> lower;  // empty means all 0
  std::vector<double> upper;  // empty means all +inf

  int num_vars() const { return static_cast<int>(objective.size()); }

  void add_constraint(std::vector<double> coeffs, Relation relation, double rhs) {
    constraints.push_back({std::move(coeffs), relation, rhs});
  }
  // Call after objective is sized.
  void set_bounds(int var, double lo, double hi);
  double lower_bound(int var) const {
    return lower.empty() ? 0.0 : lower[var];
  }
  double upper_bound(int var) const {
    return upper.empty() ? std::numeric_limits<double>::infinity() : upper[var];
  }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

// slack[i] is the satisfied margin of constraint i, recomputed from the
// original data: rhs - a.x for <=, a.x - rhs for >=, and the signed
// residual a.x - rhs for equalities.
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> values;
  double objective = 0.0;
  std::vector<double> slack;
  long iterations = 0;
};

struct SimplexOptions {
  double feasibility_tol = 1e-9;  // relative to each constraint's data scale
  double pivot_tol = 1e-12;
  std::size_t max_tableau_bytes = std::size_t{2} << 30;
  std::ostream* log = nullptr;  // tableau + pivot trace when set
};

// Two-phase dense simplex, deterministic pivoting with Bland's rule as the
// anti-cycling fallback. Optimal solutions are re-certified against the
// original constraints in a final pass; a failed recheck or a vanishing
// pivot raises SimplexError. Oversized tableaus raise GuardError.
LpSolution solve_lp(const LinearProgram& lp, const SimplexOptions& opts = {});

}  // namespace c2m

#endif  // C2M_SIMPLEX_LP_HPP
