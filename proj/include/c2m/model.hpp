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

#ifndef C2M_MODEL_HPP
#define C2M_MODEL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace c2m {

// All money amounts are integers (units of the instance currency), so the
// planner objective is exact and oracle comparisons are equality-based.
using Money = std::int64_t;
using Quantity = std::int64_t;

// Coalition enumeration is 2^N, so N is hard-capped.
inline constexpr int kMaxManufacturers = 16;

// A subset of manufacturers, one bit per index 0..N-1.
struct Coalition {
  std::uint32_t mask = 0;

  static Coalition all(int manufacturer_count) {
    return Coalition{(1u << manufacturer_count) - 1u};
  }
  static Coalition single(int n) { return Coalition{1u << n}; }

  bool contains(int n) const { return (mask >> n) & 1u; }
  bool empty() const { return mask == 0; }
  int size() const { return __builtin_popcount(mask); }

  bool operator==(const Coalition&) const = default;
};

// A production-planning instance: I products, N manufacturers, and the
// per-product / per-pair parameter tables. Matrices are product-major.
struct Instance {
  int product_count = 0;      // I
  int manufacturer_count = 0; // N

  std::vector<Money> manufacturing_cost;       // I*N, cost per unit
  std::vector<Quantity> production_capacity;   // I*N, units per day
  std::vector<Money> shortage_cost;            // I, penalty per unfilled unit
  std::vector<Money> ask_price;                // I, revenue per unit
  std::vector<Quantity> order_quantity;        // I, demanded units
  std::vector<std::int64_t> order_delivery_time;  // I, days (>= 1)

  Money mc(int i, int n) const {
    return manufacturing_cost[static_cast<std::size_t>(i) * manufacturer_count + n];
  }
  Quantity pc(int i, int n) const {
    return production_capacity[static_cast<std::size_t>(i) * manufacturer_count + n];
  }
  // Units manufacturer n can produce of product i before its deadline.
  Quantity capacity(int i, int n) const { return pc(i, n) * order_delivery_time[i]; }
  // Profit of one unit of product i made by manufacturer n.
  Money margin(int i, int n) const { return ask_price[i] - mc(i, n); }

  bool operator==(const Instance&) const = default;
};

// Inclusive integer interval for generator draws.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

// Seeded synthetic-instance generator configuration. The default ranges
// are tuned so that unprofitable product/manufacturer pairings exist and
// total capacity straddles the order quantities, giving a mix of shortage
// and no-shortage instances.
struct GeneratorConfig {
  std::uint64_t seed = 0;
  int product_count = 1;
  int manufacturer_count = 1;
  IntRange manufacturing_cost{1, 50};
  IntRange production_capacity{0, 40};
  IntRange shortage_cost{1, 20};
  IntRange ask_price{20, 80};
  IntRange order_quantity{50, 2000};
  IntRange order_delivery_time{1, 10};
};

// Returns every invariant violation as "field: message"; empty means valid.
std::vector<std::string> validate_instance(const Instance& inst);

// Deterministic for a fixed config; output always validates.
// Throws ConfigError on an invalid config.
Instance generate_instance(const GeneratorConfig& cfg);

// JSON instance format. read_instance throws ParseError with a byte offset
// (syntax) or field path (structure); write_instance emits the canonical
// form, so write(read(write(x))) == write(x) byte for byte.
Instance read_instance(const std::string& bytes);
std::string write_instance(const Instance& inst);

// Copy of the instance with each order quantity scaled and rounded to the
// nearest unit. Used for the larger-order-quantity experiment variants.
Instance scale_order_quantity(const Instance& inst, double factor);

}  // namespace c2m

#endif  // C2M_MODEL_HPP
