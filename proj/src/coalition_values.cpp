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

#include "c2m/coalition_values.hpp"

#include <stdexcept>

#include "c2m/errors.hpp"
#include "json.hpp"

namespace c2m {

CharacteristicFunction CharacteristicFunction::from_values(
    int manufacturer_count, std::vector<Money> values) {
  if (manufacturer_count < 1 || manufacturer_count > kMaxManufacturers) {
    throw std::invalid_argument("manufacturer_count out of range");
  }
  if (values.size() != (std::size_t{1} << manufacturer_count)) {
    throw std::invalid_argument("values must have 2^N entries");
  }
  CharacteristicFunction cf;
  cf.manufacturer_count = manufacturer_count;
  cf.values = std::move(values);
  return cf;
}

CharacteristicFunction compute_characteristic(const Instance& inst) {
  if (inst.manufacturer_count > kMaxManufacturers) {
    throw GuardError("coalition enumeration capped at " +
                     std::to_string(kMaxManufacturers) + " manufacturers");
  }
  const int n = inst.manufacturer_count;
  const std::uint32_t full = (1u << n) - 1u;

  CharacteristicFunction cf;
  cf.manufacturer_count = n;
  cf.values.resize(std::size_t{1} << n);

  // With nobody producing, every ordered unit is a shortage.
  Money all_shortage = 0;
  for (int i = 0; i < inst.product_count; ++i) {
    all_shortage -= inst.order_quantity[i] * inst.shortage_cost[i];
  }
  cf.values[0] = all_shortage;

  for (std::uint32_t m = 1; m <= full; ++m) {
    if (m == full) {
      cf.grand_plan = solve_cpp(inst, Coalition{m});
      cf.values[m] = cf.grand_plan.total_profit;
    } else {
      cf.values[m] = solve_cpp(inst, Coalition{m}).total_profit;
    }
  }
  return cf;
}

std::vector<SuperadditivityViolation> superadditivity_report(
    const CharacteristicFunction& cf) {
  const std::uint32_t full = (1u << cf.manufacturer_count) - 1u;
  std::vector<SuperadditivityViolation> out;
  for (std::uint32_t a = 1; a <= full; ++a) {
    const std::uint32_t rest = full & ~a;
    // Nonempty submasks of the complement; a < b avoids double reporting.
    for (std::uint32_t b = rest; b != 0; b = (b - 1) & rest) {
      if (b <= a) continue;
      const Money va = cf.values[a];
      const Money vb = cf.values[b];
      const Money vu = cf.values[a | b];
      if (va + vb > vu) {
        out.push_back({Coalition{a}, Coalition{b}, va, vb, vu});
      }
    }
  }
  return out;
}

std::string characteristic_to_json(const CharacteristicFunction& cf) {
  nlohmann::json j;
  j["n"] = cf.manufacturer_count;
  j["values"] = cf.values;
  return j.dump();
}

}  // namespace c2m
