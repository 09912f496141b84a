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

#ifndef C2M_CPP_PLANNER_HPP
#define C2M_CPP_PLANNER_HPP

#include <string>

#include "c2m/model.hpp"

namespace c2m {

// An order allocation: how many units of each product each manufacturer
// builds, what stays unfilled, and the resulting total profit
//   sum q_in * (ask_price_i - mc_in)  -  sum s_i * shortage_cost_i
// computed in exact integer arithmetic.
struct ProductionPlan {
  int product_count = 0;
  int manufacturer_count = 0;
  std::vector<Quantity> allocation;  // I*N, product-major; 0 outside the coalition
  std::vector<Quantity> shortage;    // I
  Money total_profit = 0;

  Quantity q(int i, int n) const {
    return allocation[static_cast<std::size_t>(i) * manufacturer_count + n];
  }
  Quantity total_shortage() const {
    Quantity s = 0;
    for (Quantity v : shortage) s += v;
    return s;
  }
};

// Optimal integer plan for the coalition's manufacturers. The model
// separates by product: units go to coalition members in order of
// decreasing unit margin (ties broken by ascending manufacturer index),
// capped at pc_in * ot_i, as long as the margin strictly beats taking the
// shortage penalty instead. Throws std::invalid_argument on an empty or
// out-of-range coalition.
ProductionPlan solve_cpp(const Instance& inst, Coalition coalition);

// Verification oracle: exhaustive enumeration of the feasible integer
// allocations, product by product. Guarded: throws GuardError when the
// total number of enumeration nodes would exceed ~1e7.
ProductionPlan brute_force_cpp(const Instance& inst, Coalition coalition);

// Plan JSON export: { "allocation": [[...]], "shortage": [...], "total_profit": n }.
std::string plan_to_json(const ProductionPlan& plan);

}  // namespace c2m

#endif  // C2M_CPP_PLANNER_HPP
