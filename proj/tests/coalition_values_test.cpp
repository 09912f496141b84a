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
#include "c2m/model.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"

namespace c2m {
namespace {

TEST_CASE("fixture A characteristic function") {
  const CharacteristicFunction cf = compute_characteristic(testing::fixture_a());
  CHECK(cf.manufacturer_count == 2);
  CHECK(cf.values == std::vector<Money>{-200, 200, 100, 350});
  CHECK(cf.grand_value() == 350);
  CHECK(cf.value(Coalition::single(0)) == 200);
  CHECK(cf.grand_plan.total_profit == 350);
}

TEST_CASE("empty-coalition slot is the all-shortage baseline") {
  GeneratorConfig cfg;
  cfg.product_count = 3;
  cfg.manufacturer_count = 3;
  for (std::uint64_t s = 0; s < 20; ++s) {
    cfg.seed = 500 + s;
    const Instance inst = generate_instance(cfg);
    const CharacteristicFunction cf = compute_characteristic(inst);
    Money expect = 0;
    for (int i = 0; i < inst.product_count; ++i) {
      expect -= inst.order_quantity[i] * inst.shortage_cost[i];
    }
    CHECK(cf.values[0] == expect);
  }
}

TEST_CASE("coalition values are monotone under inclusion") {
  GeneratorConfig cfg;
  cfg.product_count = 2;
  cfg.manufacturer_count = 5;
  for (std::uint64_t s = 0; s < 10; ++s) {
    cfg.seed = 600 + s;
    const CharacteristicFunction cf = compute_characteristic(generate_instance(cfg));
    const std::uint32_t full = (1u << 5) - 1u;
    for (std::uint32_t m = 1; m <= full; ++m) {
      for (int n = 0; n < 5; ++n) {
        if ((m >> n) & 1u) continue;
        CHECK(cf.values[m | (1u << n)] >= cf.values[m]);
      }
      CHECK(cf.values[m] <= cf.grand_value());
    }
  }
}

TEST_CASE("from_values validates its arguments") {
  CHECK_THROWS_AS(CharacteristicFunction::from_values(0, {0}), std::invalid_argument);
  CHECK_THROWS_AS(CharacteristicFunction::from_values(2, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(CharacteristicFunction::from_values(17, {}), std::invalid_argument);

  const CharacteristicFunction cf = testing::fixture_b();
  CHECK(cf.manufacturer_count == 3);
  CHECK(cf.grand_value() == 10);
  CHECK(cf.grand_plan.allocation.empty());
}

TEST_CASE("disjoint coalitions competing for one order can break superadditivity") {
  // Both manufacturers can fill the whole 10-unit order alone; together
  // they still only sell 10 units, so v({1}) + v({2}) > v({1,2}).
  Instance inst;
  inst.product_count = 1;
  inst.manufacturer_count = 2;
  inst.ask_price = {6};
  inst.shortage_cost = {1};
  inst.order_quantity = {10};
  inst.order_delivery_time = {1};
  inst.manufacturing_cost = {1, 1};
  inst.production_capacity = {10, 10};

  const CharacteristicFunction cf = compute_characteristic(inst);
  CHECK(cf.values == std::vector<Money>{-10, 50, 50, 50});

  const auto violations = superadditivity_report(cf);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].a.mask == 1);
  CHECK(violations[0].b.mask == 2);
  CHECK(violations[0].value_union == 50);

  // Fixture A has enough demand for both, so no violation exists.
  CHECK(superadditivity_report(compute_characteristic(testing::fixture_a())).empty());
}

TEST_CASE("characteristic json export") {
  const auto j = nlohmann::json::parse(
      characteristic_to_json(compute_characteristic(testing::fixture_a())));
  CHECK(j["n"] == 2);
  CHECK(j["values"] == nlohmann::json::parse("[-200, 200, 100, 350]"));
}

}  // namespace
}  // namespace c2m
