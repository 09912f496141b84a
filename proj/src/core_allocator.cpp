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

#include "c2m/core_allocator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "c2m/errors.hpp"
#include "json.hpp"

namespace c2m {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBudgetTol = 1e-6;
constexpr double kProfitTol = 1e-9;
constexpr double kRationalityTol = 1e-6;
constexpr double kOrderStrictTol = 1e-9;
constexpr double kOrderTieTol = 1e-6;
constexpr double kCoreGammaTol = 1e-9;
constexpr double kMaximalityStep = 1e-4;

double coalition_profit_sum(const std::vector<double>& profits, std::uint32_t mask) {
  double sum = 0.0;
  for (int n = 0; n < static_cast<int>(profits.size()); ++n) {
    if (mask & (1u << n)) sum += profits[n];
  }
  return sum;
}

std::vector<int> rank_by_order_value(const std::vector<Money>& v) {
  std::vector<int> rank(v.size());
  std::iota(rank.begin(), rank.end(), 0);
  std::stable_sort(rank.begin(), rank.end(),
                   [&](int a, int b) { return v[a] > v[b]; });
  return rank;
}

// The allocation system over variables (p_0..p_{N-1}, gamma[, t]), with
// profits expressed in units of `scale` (the grand value) so that the
// solver sees O(1) data. gamma is kept a variable even when it will be
// pinned by an equality row; that way every rationality row has a zero rhs
// and costs no artificial.
LinearProgram build_system(const CharacteristicFunction& cf, const std::vector<Money>& v,
                           double scale, bool cap_gamma, bool with_maximin) {
  const int n = cf.manufacturer_count;
  const int gamma_col = n;
  const int t_col = n + 1;
  const int num_vars = n + 1 + (with_maximin ? 1 : 0);

  LinearProgram lp;
  lp.objective.assign(num_vars, 0.0);
  lp.lower.assign(num_vars, 0.0);
  lp.upper.assign(num_vars, kInf);
  lp.lower[gamma_col] = -kInf;
  if (cap_gamma) lp.upper[gamma_col] = 1.0;

  std::vector<double> row(num_vars, 0.0);

  // Budget balance: profits split the grand value exactly.
  std::fill(row.begin(), row.begin() + n, 1.0);
  lp.add_constraint(row, Relation::kEqual, static_cast<double>(cf.grand_value()) / scale);

  // Rationality: every coalition keeps gamma times its stand-alone value.
  const std::uint32_t full = Coalition::all(n).mask;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::fill(row.begin(), row.end(), 0.0);
    for (int k = 0; k < n; ++k) {
      if (mask & (1u << k)) row[k] = 1.0;
    }
    row[gamma_col] = -static_cast<double>(cf.value(Coalition{mask})) / scale;
    lp.add_constraint(row, Relation::kGreaterEq, 0.0);
  }

  // Order-value ranking: more valuable orders never earn less, ties earn
  // the same. Adjacent pairs in the sorted order suffice.
  const std::vector<int> rank = rank_by_order_value(v);
  for (int k = 0; k + 1 < n; ++k) {
    std::fill(row.begin(), row.end(), 0.0);
    row[rank[k]] = 1.0;
    row[rank[k + 1]] = -1.0;
    const Relation rel =
        v[rank[k]] == v[rank[k + 1]] ? Relation::kEqual : Relation::kGreaterEq;
    lp.add_constraint(row, rel, 0.0);
  }

  if (with_maximin) {
    for (int k = 0; k < n; ++k) {
      std::fill(row.begin(), row.end(), 0.0);
      row[k] = 1.0;
      row[t_col] = -1.0;
      lp.add_constraint(row, Relation::kGreaterEq, 0.0);
    }
  }
  return lp;
}

void pin_gamma(LinearProgram& lp, int gamma_col, double value) {
  std::vector<double> row(lp.num_vars(), 0.0);
  row[gamma_col] = 1.0;
  lp.add_constraint(row, Relation::kEqual, value);
}

std::vector<std::uint32_t> tight_coalitions(const CharacteristicFunction& cf,
                                            const std::vector<double>& profits,
                                            double gamma) {
  std::vector<std::uint32_t> out;
  const std::uint32_t full = Coalition::all(cf.manufacturer_count).mask;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const double target = gamma * static_cast<double>(cf.value(Coalition{mask}));
    const double excess = coalition_profit_sum(profits, mask) - target;
    const double tol = kRationalityTol * std::max(1.0, std::abs(target));
    if (std::abs(excess) <= tol) out.push_back(mask);
  }
  return out;
}

void check_inputs(const CharacteristicFunction& cf, const std::vector<Money>& order_values) {
  const int n = cf.manufacturer_count;
  if (n < 1 || n > kMaxManufacturers) {
    throw std::invalid_argument("manufacturer count out of range");
  }
  if (cf.values.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("characteristic function has wrong size");
  }
  if (order_values.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("order values have wrong size");
  }
}

}  // namespace

std::vector<Money> compute_order_values(const Instance& inst, const ProductionPlan& plan) {
  std::vector<Money> v(plan.manufacturer_count, 0);
  for (int i = 0; i < plan.product_count; ++i) {
    for (int n = 0; n < plan.manufacturer_count; ++n) {
      v[n] += plan.q(i, n) * inst.ask_price[i];
    }
  }
  return v;
}

AllocationResult allocate(const CharacteristicFunction& cf,
                          const std::vector<Money>& order_values,
                          const SimplexOptions& opts) {
  check_inputs(cf, order_values);
  const int n = cf.manufacturer_count;
  const int gamma_col = n;
  const double scale =
      cf.grand_value() > 0 ? static_cast<double>(cf.grand_value()) : 1.0;

  LinearProgram phase1 = build_system(cf, order_values, scale, /*cap_gamma=*/true,
                                      /*with_maximin=*/false);
  phase1.objective[gamma_col] = 1.0;
  const LpSolution sol1 = solve_lp(phase1, opts);
  if (sol1.status == LpStatus::kInfeasible) {
    throw AllocationInfeasibleError(
        "no budget-balanced nonnegative split exists: grand coalition value is " +
        std::to_string(cf.grand_value()));
  }
  if (sol1.status != LpStatus::kOptimal) {
    throw SimplexError("allocation program unexpectedly unbounded");
  }
  const double gamma = sol1.values[gamma_col];

  // Maximin pass: hold gamma at its optimum and lift the smallest profit.
  LinearProgram phase2 = build_system(cf, order_values, scale, /*cap_gamma=*/false,
                                      /*with_maximin=*/true);
  const int t_col = n + 1;
  phase2.objective[t_col] = 1.0;
  pin_gamma(phase2, gamma_col, gamma);
  const LpSolution sol2 = solve_lp(phase2, opts);
  if (sol2.status != LpStatus::kOptimal) {
    throw SimplexError("maximin pass failed to re-attain the optimal gamma");
  }

  AllocationResult result;
  result.profits.resize(n);
  for (int k = 0; k < n; ++k) result.profits[k] = sol2.values[k] * scale;
  result.gamma = gamma;
  result.order_values = order_values;
  result.in_core = gamma >= 1.0 - kCoreGammaTol;
  result.degenerate = gamma <= 0.0;
  result.binding_coalitions = tight_coalitions(cf, result.profits, gamma);
  return result;
}

AllocationResult allocate(const Instance& inst, const CharacteristicFunction& cf,
                          const SimplexOptions& opts) {
  return allocate(cf, compute_order_values(inst, cf.grand_plan), opts);
}

VerificationReport verify_allocation(const CharacteristicFunction& cf,
                                     const AllocationResult& result) {
  VerificationReport report;
  auto fail = [&report](std::string msg) { report.failures.push_back(std::move(msg)); };

  const int n = cf.manufacturer_count;
  if (result.profits.size() != static_cast<std::size_t>(n) ||
      result.order_values.size() != static_cast<std::size_t>(n)) {
    fail("result vectors do not match the manufacturer count");
    return report;
  }

  const double total = std::accumulate(result.profits.begin(), result.profits.end(), 0.0);
  const double grand = static_cast<double>(cf.grand_value());
  if (std::abs(total - grand) > kBudgetTol) {
    fail("budget balance: profits sum to " + std::to_string(total) + ", grand value is " +
         std::to_string(grand));
  }
  for (int k = 0; k < n; ++k) {
    if (result.profits[k] < -kProfitTol) {
      fail("negative profit for manufacturer " + std::to_string(k));
    }
  }

  const std::uint32_t full = Coalition::all(n).mask;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const double target = result.gamma * static_cast<double>(cf.value(Coalition{mask}));
    const double lhs = coalition_profit_sum(result.profits, mask);
    if (lhs < target - kRationalityTol * std::max(1.0, std::abs(target))) {
      fail("coalition rationality violated for mask " + std::to_string(mask));
    }
  }

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (result.order_values[a] > result.order_values[b] &&
          result.profits[a] < result.profits[b] - kOrderStrictTol) {
        fail("ranking violated: manufacturer " + std::to_string(a) +
             " fulfils more valuable orders than " + std::to_string(b) +
             " but earns less");
      }
      if (a < b && result.order_values[a] == result.order_values[b] &&
          std::abs(result.profits[a] - result.profits[b]) > kOrderTieTol) {
        fail("tied order values for manufacturers " + std::to_string(a) + " and " +
             std::to_string(b) + " but unequal profits");
      }
    }
  }

  if (result.in_core != (result.gamma >= 1.0 - kCoreGammaTol)) {
    fail("in_core flag inconsistent with gamma");
  }
  if (result.degenerate != (result.gamma <= 0.0)) {
    fail("degenerate flag inconsistent with gamma");
  }

  if (tight_coalitions(cf, result.profits, result.gamma) != result.binding_coalitions) {
    fail("binding coalition list does not match the tight rationality rows");
  }

  // Maximality certificate. At the cap no headroom exists by definition;
  // below it, the system one step above gamma must be infeasible.
  if (result.gamma < 1.0 - kCoreGammaTol) {
    const double probe = std::min(result.gamma + kMaximalityStep, 1.0);
    const double scale =
        cf.grand_value() > 0 ? static_cast<double>(cf.grand_value()) : 1.0;
    LinearProgram system = build_system(cf, result.order_values, scale,
                                        /*cap_gamma=*/false, /*with_maximin=*/false);
    pin_gamma(system, n, probe);
    try {
      const LpSolution sol = solve_lp(system);
      if (sol.status != LpStatus::kInfeasible) {
        fail("gamma is not maximal: system still feasible at " + std::to_string(probe));
      }
    } catch (const SimplexError& e) {
      fail(std::string("maximality certificate did not complete: ") + e.what());
    }
  }
  return report;
}

VerificationReport verify_allocation(const Instance& inst, const CharacteristicFunction& cf,
                                     const AllocationResult& result) {
  VerificationReport report;
  const std::vector<Money> expected = compute_order_values(inst, cf.grand_plan);
  if (expected != result.order_values) {
    report.failures.push_back("order values do not match the grand-coalition plan");
  }
  VerificationReport rest = verify_allocation(cf, result);
  report.failures.insert(report.failures.end(), rest.failures.begin(), rest.failures.end());
  return report;
}

std::string allocation_to_json(const AllocationResult& result) {
  nlohmann::json j;
  j["gamma"] = result.gamma;
  j["profits"] = result.profits;
  j["order_values"] = result.order_values;
  j["in_core"] = result.in_core;
  j["binding_coalitions"] = result.binding_coalitions;
  return j.dump(2) + "\n";
}

}  // namespace c2m
