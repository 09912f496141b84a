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

#include "c2m/game_toolkit.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "c2m/cpp_planner.hpp"
#include "c2m/errors.hpp"

namespace c2m {

namespace {
constexpr double kMembershipTol = 1e-6;
}

ShapleyVector shapley(const CharacteristicFunction& cf) {
  const int n = cf.manufacturer_count;
  if (n < 1) throw std::invalid_argument("characteristic function has no manufacturers");
  if (n > kMaxManufacturers) {
    throw GuardError("Shapley enumeration capped at " +
                     std::to_string(kMaxManufacturers) + " manufacturers");
  }

  // 16! is below 2^53, so the permutation weights are exact in double.
  double factorial[kMaxManufacturers + 1];
  factorial[0] = 1.0;
  for (int k = 1; k <= n; ++k) factorial[k] = factorial[k - 1] * k;

  auto value = [&cf](std::uint32_t mask) -> double {
    if (mask == 0) return static_cast<double>(kShapleyEmptyCoalitionValue);
    return static_cast<double>(cf.values[mask]);
  };

  ShapleyVector result;
  result.values.assign(n, 0.0);
  const std::uint32_t full = Coalition::all(n).mask;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    const int size = std::popcount(mask);
    const double weight = factorial[size] * factorial[n - size - 1] / factorial[n];
    for (int k = 0; k < n; ++k) {
      if (mask & (1u << k)) continue;
      result.values[k] += weight * (value(mask | (1u << k)) - value(mask));
    }
  }
  return result;
}

CoreMembership core_membership(const CharacteristicFunction& cf,
                               const std::vector<double>& profits) {
  const int n = cf.manufacturer_count;
  if (profits.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("profit vector does not match the manufacturer count");
  }

  CoreMembership result;
  result.worst_deficit = -std::numeric_limits<double>::infinity();
  const std::uint32_t full = Coalition::all(n).mask;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    double payoff = 0.0;
    for (int k = 0; k < n; ++k) {
      if (mask & (1u << k)) payoff += profits[k];
    }
    const double deficit = static_cast<double>(cf.value(Coalition{mask})) - payoff;
    if (deficit > result.worst_deficit) {
      result.worst_deficit = deficit;
      result.worst_coalition = mask;
    }
  }

  const double total = std::accumulate(profits.begin(), profits.end(), 0.0);
  const bool balanced =
      std::abs(total - static_cast<double>(cf.grand_value())) <= kMembershipTol;
  result.in_core = balanced && result.worst_deficit <= kMembershipTol;
  return result;
}

MechanismComparison compare(const Instance& inst, const SimplexOptions& opts) {
  MechanismComparison cmp;
  cmp.cf = compute_characteristic(inst);
  cmp.allocation = allocate(inst, cmp.cf, opts);
  cmp.shapley_values = shapley(cmp.cf);
  cmp.allocation_membership = core_membership(cmp.cf, cmp.allocation.profits);
  cmp.shapley_membership = core_membership(cmp.cf, cmp.shapley_values.values);
  return cmp;
}

}  // namespace c2m
