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

// The solver is checked against an independent oracle: every vertex of the
// (bounded) feasible polytope is enumerated by intersecting each choice of
// n active constraints, and the best feasible vertex objective must match
// the simplex optimum. Random families are built so the origin (or the
// lower-bound corner) is feasible and a box row keeps the region bounded.

#include "c2m/simplex_lp.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "c2m/errors.hpp"
#include "doctest.h"

namespace c2m {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// All rows of `lp` must be kLessEq. Bounds participate as extra rows.
double vertex_oracle(const LinearProgram& lp) {
  const int n = lp.num_vars();
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;
  for (const auto& con : lp.constraints) {
    REQUIRE(con.relation == Relation::kLessEq);
    rows.push_back(con.coeffs);
    rhs.push_back(con.rhs);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<double> r(n, 0.0);
    if (lp.lower_bound(j) > -kInf) {
      r[j] = -1.0;
      rows.push_back(r);
      rhs.push_back(-lp.lower_bound(j));
    }
    if (lp.upper_bound(j) < kInf) {
      r[j] = 1.0;
      rows.push_back(r);
      rhs.push_back(lp.upper_bound(j));
    }
  }
  const int m = static_cast<int>(rows.size());

  double best = -kInf;
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i;
  while (true) {
    // Solve the n x n system given by the picked rows (active set).
    std::vector<std::vector<double>> a(n, std::vector<double>(n + 1));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = rows[pick[i]][j];
      a[i][n] = rhs[pick[i]];
    }
    bool singular = false;
    for (int col = 0; col < n && !singular; ++col) {
      int piv = col;
      for (int r = col + 1; r < n; ++r) {
        if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
      }
      if (std::abs(a[piv][col]) < 1e-9) {
        singular = true;
        break;
      }
      std::swap(a[col], a[piv]);
      for (int r = 0; r < n; ++r) {
        if (r == col) continue;
        const double f = a[r][col] / a[col][col];
        for (int j = col; j <= n; ++j) a[r][j] -= f * a[col][j];
      }
    }
    if (!singular) {
      std::vector<double> x(n);
      for (int i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
      bool feasible = true;
      for (int i = 0; i < m && feasible; ++i) {
        double ax = 0.0;
        for (int j = 0; j < n; ++j) ax += rows[i][j] * x[j];
        feasible = ax <= rhs[i] + 1e-6;
      }
      if (feasible) {
        double z = 0.0;
        for (int j = 0; j < n; ++j) z += lp.objective[j] * x[j];
        best = std::max(best, z);
      }
    }

    // Next n-combination of {0..m-1}.
    int i = n - 1;
    while (i >= 0 && pick[i] == m - n + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

// Origin-feasible random LP with a box row, so it is feasible and bounded.
LinearProgram random_box_lp(std::mt19937_64& rng, int n, int extra_rows) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> rhs(0, 10);
  LinearProgram lp;
  lp.objective.resize(n);
  for (auto& c : lp.objective) c = coeff(rng);
  for (int r = 0; r < extra_rows; ++r) {
    std::vector<double> row(n);
    for (auto& c : row) c = coeff(rng);
    lp.add_constraint(std::move(row), Relation::kLessEq, rhs(rng));
  }
  lp.add_constraint(std::vector<double>(n, 1.0), Relation::kLessEq, 10.0);
  return lp;
}

TEST_CASE("textbook basics") {
  SUBCASE("two-variable optimum") {
    LinearProgram lp;
    lp.objective = {3, 5};
    lp.add_constraint({1, 0}, Relation::kLessEq, 4);
    lp.add_constraint({0, 2}, Relation::kLessEq, 12);
    lp.add_constraint({3, 2}, Relation::kLessEq, 18);
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(sol.objective == doctest::Approx(36.0).epsilon(1e-9));
    CHECK(sol.values[0] == doctest::Approx(2.0));
    CHECK(sol.values[1] == doctest::Approx(6.0));
    CHECK(sol.iterations > 0);
  }
  SUBCASE("equality and >= rows") {
    LinearProgram lp;
    lp.objective = {1, 2};
    lp.add_constraint({1, 1}, Relation::kEqual, 4);
    lp.add_constraint({1, 0}, Relation::kGreaterEq, 1);
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(sol.objective == doctest::Approx(7.0));  // x=(1,3)
  }
  SUBCASE("infeasible rows") {
    LinearProgram lp;
    lp.objective = {1};
    lp.add_constraint({1}, Relation::kGreaterEq, 2);
    lp.add_constraint({1}, Relation::kLessEq, 1);
    CHECK(solve_lp(lp).status == LpStatus::kInfeasible);
  }
  SUBCASE("unbounded") {
    LinearProgram lp;
    lp.objective = {1, 0};
    lp.add_constraint({0, 1}, Relation::kLessEq, 5);
    CHECK(solve_lp(lp).status == LpStatus::kUnbounded);
  }
}

TEST_CASE("variable bounds") {
  SUBCASE("upper bounds and shifted lower bounds") {
    LinearProgram lp;
    lp.objective = {1, 1};
    lp.add_constraint({1, 1}, Relation::kLessEq, 4);
    lp.set_bounds(0, 1.0, 2.0);
    lp.set_bounds(1, 0.0, 3.0);
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(sol.objective == doctest::Approx(4.0));
    CHECK(sol.values[0] >= 1.0 - 1e-9);
  }
  SUBCASE("free variable pushed negative") {
    LinearProgram lp;
    lp.objective = {-1};
    lp.set_bounds(0, -kInf, kInf);
    lp.add_constraint({1}, Relation::kGreaterEq, -7);
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(sol.objective == doctest::Approx(7.0));
    CHECK(sol.values[0] == doctest::Approx(-7.0));
  }
  SUBCASE("free variable unbounded") {
    LinearProgram lp;
    lp.objective = {-1};
    lp.set_bounds(0, -kInf, kInf);
    CHECK(solve_lp(lp).status == LpStatus::kUnbounded);
  }
  SUBCASE("crossed bounds are infeasible") {
    LinearProgram lp;
    lp.objective = {1};
    lp.set_bounds(0, 3.0, 2.0);
    CHECK(solve_lp(lp).status == LpStatus::kInfeasible);
  }
  SUBCASE("negative upper bound forces a negative optimum") {
    LinearProgram lp;
    lp.objective = {1};
    lp.set_bounds(0, -kInf, -2.0);
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(sol.objective == doctest::Approx(-2.0));
  }
}

TEST_CASE("slack values are recomputed from the original rows") {
  LinearProgram lp;
  lp.objective = {1};
  lp.add_constraint({1}, Relation::kLessEq, 5);
  lp.add_constraint({2}, Relation::kLessEq, 14);
  lp.add_constraint({1}, Relation::kGreaterEq, 1);
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective == doctest::Approx(5.0));
  CHECK(sol.slack[0] == doctest::Approx(0.0));
  CHECK(sol.slack[1] == doctest::Approx(4.0));
  CHECK(sol.slack[2] == doctest::Approx(4.0));
}

TEST_CASE("Beale's cycling example terminates at the optimum") {
  LinearProgram lp;
  lp.objective = {0.75, -150.0, 0.02, -6.0};
  lp.add_constraint({0.25, -60.0, -1.0 / 25.0, 9.0}, Relation::kLessEq, 0.0);
  lp.add_constraint({0.5, -90.0, -1.0 / 50.0, 3.0}, Relation::kLessEq, 0.0);
  lp.add_constraint({0.0, 0.0, 1.0, 0.0}, Relation::kLessEq, 1.0);
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective == doctest::Approx(0.05).epsilon(1e-9));
}

TEST_CASE("vertex oracle agreement on random box LPs") {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> nvar(2, 3);
  std::uniform_int_distribution<int> nrow(2, 5);
  for (int t = 0; t < 250; ++t) {
    const LinearProgram lp = random_box_lp(rng, nvar(rng), nrow(rng));
    const double best = vertex_oracle(lp);
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(std::abs(sol.objective - best) <= 1e-6 * std::max(1.0, std::abs(best)));
  }
}

TEST_CASE("vertex oracle agreement with general bounds") {
  std::mt19937_64 rng(20260202);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_real_distribution<double> slackr(0.0, 10.0);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + (t % 2);
    LinearProgram lp;
    lp.objective.resize(n);
    for (auto& c : lp.objective) c = coeff(rng);
    for (int j = 0; j < n; ++j) lp.set_bounds(j, -2.0, j == 0 ? 6.0 : kInf);
    double corner_sum = 0.0;
    for (int j = 0; j < n; ++j) corner_sum += lp.lower_bound(j);
    for (int r = 0; r < 3; ++r) {
      std::vector<double> row(n);
      double at_corner = 0.0;
      for (int j = 0; j < n; ++j) {
        row[j] = coeff(rng);
        at_corner += row[j] * lp.lower_bound(j);
      }
      // rhs keeps the lower-bound corner feasible.
      lp.add_constraint(std::move(row), Relation::kLessEq, at_corner + slackr(rng));
    }
    lp.add_constraint(std::vector<double>(n, 1.0), Relation::kLessEq, corner_sum + 10.0);

    const double best = vertex_oracle(lp);
    const LpSolution sol = solve_lp(lp);
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(std::abs(sol.objective - best) <= 1e-6 * std::max(1.0, std::abs(best)));
  }
}

TEST_CASE("flipping rows to >= form leaves the optimum unchanged") {
  std::mt19937_64 rng(20260303);
  for (int t = 0; t < 100; ++t) {
    const LinearProgram lp = random_box_lp(rng, 3, 4);
    LinearProgram flipped = lp;
    for (std::size_t r = 0; r < flipped.constraints.size(); r += 2) {
      auto& con = flipped.constraints[r];
      for (auto& c : con.coeffs) c = -c;
      con.rhs = -con.rhs;
      con.relation = Relation::kGreaterEq;
    }
    const LpSolution a = solve_lp(lp);
    const LpSolution b = solve_lp(flipped);
    REQUIRE(a.status == LpStatus::kOptimal);
    REQUIRE(b.status == LpStatus::kOptimal);
    CHECK(std::abs(a.objective - b.objective) <=
          1e-6 * std::max(1.0, std::abs(a.objective)));
  }
}

TEST_CASE("strong duality holds on random box LPs") {
  std::mt19937_64 rng(20260404);
  for (int t = 0; t < 100; ++t) {
    const LinearProgram lp = random_box_lp(rng, 3, 4);
    const int m = static_cast<int>(lp.constraints.size());

    // Dual: min b.y subject to A^T y >= c, y >= 0, solved as max -b.y.
    LinearProgram dual;
    dual.objective.resize(m);
    for (int i = 0; i < m; ++i) dual.objective[i] = -lp.constraints[i].rhs;
    for (int j = 0; j < lp.num_vars(); ++j) {
      std::vector<double> row(m);
      for (int i = 0; i < m; ++i) row[i] = lp.constraints[i].coeffs[j];
      dual.add_constraint(std::move(row), Relation::kGreaterEq, lp.objective[j]);
    }

    const LpSolution p = solve_lp(lp);
    const LpSolution d = solve_lp(dual);
    REQUIRE(p.status == LpStatus::kOptimal);
    REQUIRE(d.status == LpStatus::kOptimal);
    CHECK(std::abs(p.objective + d.objective) <=
          1e-6 * std::max(1.0, std::abs(p.objective)));
  }
}

TEST_CASE("resolving the same program is deterministic") {
  std::mt19937_64 rng(20260505);
  const LinearProgram lp = random_box_lp(rng, 3, 5);
  const LpSolution a = solve_lp(lp);
  const LpSolution b = solve_lp(lp);
  CHECK(a.iterations == b.iterations);
  CHECK(a.objective == b.objective);
  CHECK(a.values == b.values);
}

TEST_CASE("mixed-scale program in the allocation shape") {
  // max g with p1 + p2 = 1e6, p1 >= 2e5 g, g <= 1: the optimum parks all
  // profit on p1 and reaches the cap.
  LinearProgram lp;
  lp.objective = {0, 0, 1};
  lp.add_constraint({1, 1, 0}, Relation::kEqual, 1e6);
  lp.add_constraint({1, 0, -2e5}, Relation::kGreaterEq, 0);
  lp.set_bounds(2, 0.0, 1.0);
  const LpSolution sol = solve_lp(lp);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("tableau memory guard") {
  LinearProgram lp;
  lp.objective.assign(64, 1.0);
  for (int r = 0; r < 64; ++r) {
    lp.add_constraint(std::vector<double>(64, 1.0), Relation::kLessEq, 1.0);
  }
  SimplexOptions opts;
  opts.max_tableau_bytes = 1024;
  CHECK_THROWS_AS(solve_lp(lp, opts), GuardError);
}

TEST_CASE("dimension mismatches are rejected") {
  LinearProgram lp;
  lp.objective = {1, 2};
  lp.add_constraint({1}, Relation::kLessEq, 1);
  CHECK_THROWS_AS(solve_lp(lp), std::invalid_argument);
}

}  // namespace
}  // namespace c2m
