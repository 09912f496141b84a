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

// Hand-derived fixtures shared across the test binaries.
//
// Fixture A (planning): one product, two manufacturers.
//   SP=10, SC=2, OQ=100, OT=5, MC=(4,9), PC=(10,20).
//   Caps are 50 and 100; margins 6 and 1. The optimum fills the order:
//   q=(50,50), profit 50*6 + 50*1 = 350, no shortage. Solo M1 covers 50
//   units and eats 50 units of shortage: 300 - 100 = 200. Solo M2 covers
//   everything at margin 1: 100. Characteristic: [-200, 200, 100, 350].
//   Order values are (500, 500), so the allocation ties p1 = p2 = 175 and
//   gamma = 175/200 = 0.875 with {M1} the only binding coalition.
//
// Fixture B (allocation): symmetric 3-player game, singletons worth 0,
//   pairs worth 8, grand coalition worth 10. Equal split pays each pair
//   20/3 against a claim of 8, so gamma = (20/3)/8 = 5/6 and profits are
//   (10/3, 10/3, 10/3). The same vector is the Shapley value (symmetry),
//   and its worst core deficit is 8 - 20/3 = 4/3.

#ifndef C2M_TESTS_FIXTURES_HPP
#define C2M_TESTS_FIXTURES_HPP

#include <vector>

#include "c2m/coalition_values.hpp"
#include "c2m/model.hpp"

namespace c2m::testing {

inline Instance fixture_a() {
  Instance inst;
  inst.product_count = 1;
  inst.manufacturer_count = 2;
  inst.ask_price = {10};
  inst.shortage_cost = {2};
  inst.order_quantity = {100};
  inst.order_delivery_time = {5};
  inst.manufacturing_cost = {4, 9};
  inst.production_capacity = {10, 20};
  return inst;
}

inline CharacteristicFunction fixture_b() {
  return CharacteristicFunction::from_values(3, {0, 0, 0, 8, 0, 8, 8, 10});
}

inline std::vector<Money> equal_order_values(int n) {
  return std::vector<Money>(n, 100);
}

}  // namespace c2m::testing

#endif  // C2M_TESTS_FIXTURES_HPP
