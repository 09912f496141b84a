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

#include "c2m/cpp_planner.hpp"

#include <algorithm>
#include <stdexcept>

#include "c2m/errors.hpp"
#include "json.hpp"

namespace c2m {

namespace {

void check_coalition(const Instance& inst, Coalition coalition) {
  if (coalition.empty()) {
    throw std::invalid_argument("coalition must be nonempty");
  }
  if (coalition.mask >> inst.manufacturer_count) {
    throw std::invalid_argument("coalition mask has bits beyond manufacturer_count");
  }
}

ProductionPlan empty_plan(const Instance& inst) {
  ProductionPlan plan;
  plan.product_count = inst.product_count;
  plan.manufacturer_count = inst.manufacturer_count;
  plan.allocation.assign(
      static_cast<std::size_t>(inst.product_count) * inst.manufacturer_count, 0);
  plan.shortage.assign(inst.product_count, 0);
  return plan;
}

}  // namespace

ProductionPlan solve_cpp(const Instance& inst, Coalition coalition) {
  check_coalition(inst, coalition);

  std::vector<int> members;
  for (int n = 0; n < inst.manufacturer_count; ++n) {
    if (coalition.contains(n)) members.push_back(n);
  }

  ProductionPlan plan = empty_plan(inst);
  std::vector<std::pair<Money, int>> ranked;  // (margin, manufacturer)
  for (int i = 0; i < inst.product_count; ++i) {
    ranked.clear();
    for (int n : members) ranked.emplace_back(inst.margin(i, n), n);
    // Margin descending, manufacturer index ascending on ties, so the
    // fixed plan q̄ fed to the allocation mechanism is reproducible.
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });

    Quantity remaining = inst.order_quantity[i];
    const Money sc = inst.shortage_cost[i];
    for (const auto& [margin, n] : ranked) {
      if (remaining == 0) break;
      // A unit is produced only when strictly better than eating the
      // shortage penalty; exact ties go to shortage.
      if (margin <= -sc) break;
      const Quantity take = std::min(inst.capacity(i, n), remaining);
      if (take == 0) continue;
      plan.allocation[static_cast<std::size_t>(i) * inst.manufacturer_count + n] = take;
      plan.total_profit += take * margin;
      remaining -= take;
    }
    plan.shortage[i] = remaining;
    plan.total_profit -= remaining * sc;
  }
  return plan;
}

namespace {

struct ProductSearch {
  const Instance& inst;
  int product;
  const std::vector<int>& members;
  std::vector<Quantity> current;
  std::vector<Quantity> best;
  Money best_profit;
  bool best_found = false;

  void run(std::size_t idx, Quantity remaining, Money profit) {
    if (idx == members.size()) {
      profit -= remaining * inst.shortage_cost[product];
      if (!best_found || profit > best_profit) {
        best_profit = profit;
        best = current;
        best_found = true;
      }
      return;
    }
    const int n = members[idx];
    const Quantity cap = std::min(inst.capacity(product, n), remaining);
    for (Quantity q = 0; q <= cap; ++q) {
      current[idx] = q;
      run(idx + 1, remaining - q, profit + q * inst.margin(product, n));
    }
    current[idx] = 0;
  }
};

}  // namespace

ProductionPlan brute_force_cpp(const Instance& inst, Coalition coalition) {
  check_coalition(inst, coalition);

  std::vector<int> members;
  for (int n = 0; n < inst.manufacturer_count; ++n) {
    if (coalition.contains(n)) members.push_back(n);
  }

  // Guard on the actual enumeration work: the per-product searches are
  // independent, so the node count is the sum over products of
  // prod_n (min(cap_in, oq_i) + 1).
  constexpr double kMaxNodes = 1e7;
  double nodes = 0;
  for (int i = 0; i < inst.product_count; ++i) {
    double product_nodes = 1;
    for (int n : members) {
      product_nodes *= static_cast<double>(
          std::min(inst.capacity(i, n), inst.order_quantity[i]) + 1);
      if (product_nodes > kMaxNodes) break;
    }
    nodes += product_nodes;
    if (nodes > kMaxNodes) {
      throw GuardError("brute-force search space exceeds 1e7 enumeration nodes");
    }
  }

  ProductionPlan plan = empty_plan(inst);
  for (int i = 0; i < inst.product_count; ++i) {
    ProductSearch search{inst, i, members,
                         std::vector<Quantity>(members.size(), 0),
                         {}, 0};
    search.run(0, inst.order_quantity[i], 0);
    Quantity assigned = 0;
    for (std::size_t k = 0; k < members.size(); ++k) {
      plan.allocation[static_cast<std::size_t>(i) * inst.manufacturer_count +
                      members[k]] = search.best[k];
      assigned += search.best[k];
    }
    plan.shortage[i] = inst.order_quantity[i] - assigned;
    plan.total_profit += search.best_profit;
  }
  return plan;
}

std::string plan_to_json(const ProductionPlan& plan) {
  nlohmann::json j;
  nlohmann::json alloc = nlohmann::json::array();
  for (int i = 0; i < plan.product_count; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int n = 0; n < plan.manufacturer_count; ++n) row.push_back(plan.q(i, n));
    alloc.push_back(std::move(row));
  }
  j["allocation"] = std::move(alloc);
  j["shortage"] = plan.shortage;
  j["total_profit"] = plan.total_profit;
  return j.dump();
}

}  // namespace c2m
