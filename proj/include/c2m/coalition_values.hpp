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

#ifndef C2M_COALITION_VALUES_HPP
#define C2M_COALITION_VALUES_HPP

#include <string>
#include <vector>

#include "c2m/cpp_planner.hpp"
#include "c2m/model.hpp"

namespace c2m {

// The characteristic function of the planning game: values[m] is the
// optimal planning profit of the coalition with bitmask m. values[0] holds
// the all-shortage baseline (minus the total shortage cost); it is kept for
// reference and never enters the allocation constraints. Coalition values
// can be negative under heavy shortage and are used as-is.
struct CharacteristicFunction {
  int manufacturer_count = 0;
  std::vector<Money> values;   // size 2^N, indexed by coalition mask
  ProductionPlan grand_plan;   // optimum of the full coalition; empty for hand-built games

  Money value(Coalition c) const { return values[c.mask]; }
  Money grand_value() const { return values.back(); }

  // Hand-built game for tests and comparator work; no production plan.
  static CharacteristicFunction from_values(int manufacturer_count,
                                            std::vector<Money> values);
};

// Solves the planning model once per nonempty coalition. Throws GuardError
// when manufacturer_count exceeds the enumeration cap.
CharacteristicFunction compute_characteristic(const Instance& inst);

// Informational diagnostic: disjoint coalition pairs whose raw values sum
// above the value of their union. Because every coalition pays the full
// shortage penalty on whatever it leaves unfilled, and disjoint coalitions
// compete for the same order book, such pairs can legitimately exist.
struct SuperadditivityViolation {
  Coalition a;
  Coalition b;
  Money value_a = 0;
  Money value_b = 0;
  Money value_union = 0;
};

std::vector<SuperadditivityViolation> superadditivity_report(
    const CharacteristicFunction& cf);

// Export: { "n": N, "values": [v_0 .. v_{2^N-1}] }.
std::string characteristic_to_json(const CharacteristicFunction& cf);

}  // namespace c2m

#endif  // C2M_COALITION_VALUES_HPP
