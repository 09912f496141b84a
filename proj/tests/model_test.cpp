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

#include "c2m/model.hpp"

#include <string>
#include <vector>

#include "c2m/errors.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"

namespace c2m {
namespace {

TEST_CASE("validate_instance accepts a well-formed instance") {
  CHECK(validate_instance(testing::fixture_a()).empty());
}

TEST_CASE("validate_instance reports structural problems") {
  Instance inst = testing::fixture_a();

  SUBCASE("matrix with the wrong element count") {
    inst.manufacturing_cost.pop_back();
    const auto out = validate_instance(inst);
    REQUIRE(out.size() == 1);
    CHECK(out[0].find("manufacturing_cost") != std::string::npos);
  }
  SUBCASE("zero delivery time") {
    inst.order_delivery_time[0] = 0;
    const auto out = validate_instance(inst);
    REQUIRE(out.size() == 1);
    CHECK(out[0].find("order_delivery_time") != std::string::npos);
  }
  SUBCASE("negative entries") {
    inst.ask_price[0] = -1;
    CHECK(validate_instance(inst).size() == 1);
  }
  SUBCASE("too many manufacturers") {
    inst.manufacturer_count = kMaxManufacturers + 1;
    CHECK(!validate_instance(inst).empty());
  }
  SUBCASE("several problems are all reported") {
    inst.order_delivery_time[0] = 0;
    inst.shortage_cost[0] = -3;
    CHECK(validate_instance(inst).size() == 2);
  }
}

TEST_CASE("generate_instance is deterministic and shape-correct") {
  GeneratorConfig cfg;
  cfg.seed = 7;
  cfg.product_count = 10;
  cfg.manufacturer_count = 5;

  const Instance a = generate_instance(cfg);
  const Instance b = generate_instance(cfg);
  CHECK(a == b);

  CHECK(a.product_count == 10);
  CHECK(a.manufacturer_count == 5);
  CHECK(a.manufacturing_cost.size() == 50);
  CHECK(a.production_capacity.size() == 50);
  CHECK(a.shortage_cost.size() == 10);
  CHECK(validate_instance(a).empty());

  cfg.seed = 8;
  CHECK(generate_instance(cfg) != a);
}

TEST_CASE("generate_instance respects the configured ranges") {
  GeneratorConfig cfg;
  cfg.seed = 11;
  cfg.product_count = 4;
  cfg.manufacturer_count = 3;
  cfg.order_quantity = {5, 9};
  cfg.production_capacity = {1, 2};
  for (std::uint64_t s = 0; s < 20; ++s) {
    cfg.seed = s;
    const Instance inst = generate_instance(cfg);
    for (Quantity q : inst.order_quantity) {
      CHECK(q >= 5);
      CHECK(q <= 9);
    }
    for (Quantity p : inst.production_capacity) {
      CHECK(p >= 1);
      CHECK(p <= 2);
    }
  }
}

TEST_CASE("generate_instance rejects bad configs") {
  GeneratorConfig cfg;
  cfg.product_count = 0;
  CHECK_THROWS_AS(generate_instance(cfg), ConfigError);

  cfg = GeneratorConfig{};
  cfg.manufacturer_count = kMaxManufacturers + 1;
  CHECK_THROWS_AS(generate_instance(cfg), ConfigError);

  cfg = GeneratorConfig{};
  cfg.ask_price = {10, 4};  // empty interval
  CHECK_THROWS_AS(generate_instance(cfg), ConfigError);

  cfg = GeneratorConfig{};
  cfg.order_delivery_time = {0, 3};  // delivery time must stay >= 1
  CHECK_THROWS_AS(generate_instance(cfg), ConfigError);
}

TEST_CASE("instance json round-trips over random instances") {
  GeneratorConfig cfg;
  for (std::uint64_t s = 0; s < 100; ++s) {
    cfg.seed = s;
    cfg.product_count = 1 + static_cast<int>(s % 7);
    cfg.manufacturer_count = 1 + static_cast<int>(s % kMaxManufacturers);
    const Instance inst = generate_instance(cfg);
    const std::string bytes = write_instance(inst);
    CHECK(read_instance(bytes) == inst);
    // Canonical form: a second write is byte-identical.
    CHECK(write_instance(read_instance(bytes)) == bytes);
  }
}

TEST_CASE("read_instance reports syntax errors with a byte offset") {
  try {
    read_instance("{ \"product_count\": 1, ");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("byte") != std::string::npos);
  }
}

TEST_CASE("read_instance reports structural errors with a field path") {
  const std::string base = write_instance(testing::fixture_a());

  SUBCASE("missing field") {
    try {
      read_instance("{ \"product_count\": 1, \"manufacturer_count\": 1 }");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("ask_price") != std::string::npos);
    }
  }
  SUBCASE("non-integer entry") {
    auto j = nlohmann::json::parse(base);
    j["order_quantity"][0] = "x";
    try {
      read_instance(j.dump());
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("order_quantity[0]") != std::string::npos);
    }
  }
  SUBCASE("wrong matrix shape") {
    auto j = nlohmann::json::parse(base);
    j["manufacturing_cost"][0].push_back(1);
    try {
      read_instance(j.dump());
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("manufacturing_cost[0]") != std::string::npos);
    }
  }
  SUBCASE("manufacturer count over the cap") {
    try {
      read_instance("{ \"product_count\": 1, \"manufacturer_count\": 17 }");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("manufacturer_count") != std::string::npos);
    }
  }
  SUBCASE("top-level array") {
    CHECK_THROWS_AS(read_instance("[1, 2]"), ParseError);
  }
}

TEST_CASE("scale_order_quantity rounds to the nearest unit") {
  Instance inst = testing::fixture_a();
  inst.order_quantity = {100, 0, 3};
  inst.product_count = 3;  // shapes other fields wrong, but scaling ignores them

  const Instance scaled = scale_order_quantity(inst, 1.2);
  CHECK(scaled.order_quantity == std::vector<Quantity>{120, 0, 4});

  const Instance half = scale_order_quantity(inst, 0.5);
  CHECK(half.order_quantity[0] == 50);

  CHECK(scale_order_quantity(inst, 1.0).order_quantity == inst.order_quantity);
  CHECK_THROWS_AS(scale_order_quantity(inst, -1.0), ConfigError);
}

}  // namespace
}  // namespace c2m
