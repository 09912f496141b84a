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

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "c2m/errors.hpp"
#include "json.hpp"

namespace c2m {

namespace {

using nlohmann::json;

void check_matrix(std::vector<std::string>& out, const std::string& name,
                  const std::vector<Money>& m, int rows, int cols) {
  if (m.size() != static_cast<std::size_t>(rows) * cols) {
    std::ostringstream oss;
    oss << name << ": expected " << rows << "x" << cols << " = " << rows * cols
        << " entries, got " << m.size();
    out.push_back(oss.str());
  }
}

void check_nonnegative(std::vector<std::string>& out, const std::string& name,
                       const std::vector<Money>& v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] < 0) {
      std::ostringstream oss;
      oss << name << "[" << k << "]: must be >= 0, got " << v[k];
      out.push_back(oss.str());
    }
  }
}

}  // namespace

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> out;
  if (inst.product_count < 1) {
    out.push_back("product_count: must be >= 1, got " +
                  std::to_string(inst.product_count));
  }
  if (inst.manufacturer_count < 1) {
    out.push_back("manufacturer_count: must be >= 1, got " +
                  std::to_string(inst.manufacturer_count));
  }
  if (inst.manufacturer_count > kMaxManufacturers) {
    out.push_back("manufacturer_count: must be <= " +
                  std::to_string(kMaxManufacturers) + ", got " +
                  std::to_string(inst.manufacturer_count));
  }
  if (!out.empty()) return out;  // dimension checks need sane counts

  const int ip = inst.product_count;
  const int n = inst.manufacturer_count;
  check_matrix(out, "manufacturing_cost", inst.manufacturing_cost, ip, n);
  check_matrix(out, "production_capacity", inst.production_capacity, ip, n);
  check_matrix(out, "shortage_cost", inst.shortage_cost, ip, 1);
  check_matrix(out, "ask_price", inst.ask_price, ip, 1);
  check_matrix(out, "order_quantity", inst.order_quantity, ip, 1);
  check_matrix(out, "order_delivery_time", inst.order_delivery_time, ip, 1);
  if (!out.empty()) return out;

  check_nonnegative(out, "manufacturing_cost", inst.manufacturing_cost);
  check_nonnegative(out, "production_capacity", inst.production_capacity);
  check_nonnegative(out, "shortage_cost", inst.shortage_cost);
  check_nonnegative(out, "ask_price", inst.ask_price);
  check_nonnegative(out, "order_quantity", inst.order_quantity);
  for (int i = 0; i < ip; ++i) {
    if (inst.order_delivery_time[i] < 1) {
      out.push_back("order_delivery_time[" + std::to_string(i) +
                    "]: must be >= 1, got " +
                    std::to_string(inst.order_delivery_time[i]));
    }
  }
  return out;
}

namespace {

std::int64_t draw(std::mt19937_64& rng, const IntRange& r) {
  const auto span = static_cast<std::uint64_t>(r.hi - r.lo) + 1;
  return r.lo + static_cast<std::int64_t>(rng() % span);
}

void check_range(const std::string& name, const IntRange& r,
                 std::int64_t min_lo) {
  if (r.lo > r.hi) {
    throw ConfigError(name + " range is empty: [" + std::to_string(r.lo) +
                      ", " + std::to_string(r.hi) + "]");
  }
  if (r.lo < min_lo) {
    throw ConfigError(name + " range lower bound must be >= " +
                      std::to_string(min_lo) + ", got " +
                      std::to_string(r.lo));
  }
}

}  // namespace

Instance generate_instance(const GeneratorConfig& cfg) {
  if (cfg.product_count < 1) {
    throw ConfigError("product_count must be >= 1");
  }
  if (cfg.manufacturer_count < 1 || cfg.manufacturer_count > kMaxManufacturers) {
    throw ConfigError("manufacturer_count must be in [1, " +
                      std::to_string(kMaxManufacturers) + "]");
  }
  check_range("manufacturing_cost", cfg.manufacturing_cost, 0);
  check_range("production_capacity", cfg.production_capacity, 0);
  check_range("shortage_cost", cfg.shortage_cost, 0);
  check_range("ask_price", cfg.ask_price, 0);
  check_range("order_quantity", cfg.order_quantity, 0);
  check_range("order_delivery_time", cfg.order_delivery_time, 1);

  std::mt19937_64 rng(cfg.seed);
  const int ip = cfg.product_count;
  const int n = cfg.manufacturer_count;

  Instance inst;
  inst.product_count = ip;
  inst.manufacturer_count = n;

  // Draw order is part of the determinism contract: the per-product vectors
  // first (ask price, shortage cost, order quantity, delivery time), then
  // the two matrices product-major.
  inst.ask_price.reserve(ip);
  for (int i = 0; i < ip; ++i) inst.ask_price.push_back(draw(rng, cfg.ask_price));
  inst.shortage_cost.reserve(ip);
  for (int i = 0; i < ip; ++i) inst.shortage_cost.push_back(draw(rng, cfg.shortage_cost));
  inst.order_quantity.reserve(ip);
  for (int i = 0; i < ip; ++i) inst.order_quantity.push_back(draw(rng, cfg.order_quantity));
  inst.order_delivery_time.reserve(ip);
  for (int i = 0; i < ip; ++i) inst.order_delivery_time.push_back(draw(rng, cfg.order_delivery_time));
  inst.manufacturing_cost.reserve(static_cast<std::size_t>(ip) * n);
  for (int i = 0; i < ip; ++i)
    for (int j = 0; j < n; ++j) inst.manufacturing_cost.push_back(draw(rng, cfg.manufacturing_cost));
  inst.production_capacity.reserve(static_cast<std::size_t>(ip) * n);
  for (int i = 0; i < ip; ++i)
    for (int j = 0; j < n; ++j) inst.production_capacity.push_back(draw(rng, cfg.production_capacity));

  return inst;
}

namespace {

const json& require_field(const json& j, const char* name) {
  auto it = j.find(name);
  if (it == j.end()) {
    throw ParseError(std::string("missing field '") + name + "'");
  }
  return *it;
}

std::int64_t as_integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) {
    throw ParseError(where + ": expected an integer, got " +
                     std::string(v.type_name()));
  }
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> read_int_vector(const json& j, const char* name,
                                          int expected_len) {
  const json& v = require_field(j, name);
  if (!v.is_array()) {
    throw ParseError(std::string(name) + ": expected an array");
  }
  if (v.size() != static_cast<std::size_t>(expected_len)) {
    throw ParseError(std::string(name) + ": expected " +
                     std::to_string(expected_len) + " entries, got " +
                     std::to_string(v.size()));
  }
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(as_integer(v[k], std::string(name) + "[" + std::to_string(k) + "]"));
  }
  return out;
}

std::vector<std::int64_t> read_int_matrix(const json& j, const char* name,
                                          int rows, int cols) {
  const json& v = require_field(j, name);
  if (!v.is_array()) {
    throw ParseError(std::string(name) + ": expected an array of rows");
  }
  if (v.size() != static_cast<std::size_t>(rows)) {
    throw ParseError(std::string(name) + ": expected " + std::to_string(rows) +
                     " rows, got " + std::to_string(v.size()));
  }
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = v[r];
    const std::string where = std::string(name) + "[" + std::to_string(r) + "]";
    if (!row.is_array()) {
      throw ParseError(where + ": expected an array");
    }
    if (row.size() != static_cast<std::size_t>(cols)) {
      throw ParseError(where + ": expected " + std::to_string(cols) +
                       " entries, got " + std::to_string(row.size()));
    }
    for (int c = 0; c < cols; ++c) {
      out.push_back(as_integer(row[c], where + "[" + std::to_string(c) + "]"));
    }
  }
  return out;
}

}  // namespace

Instance read_instance(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw ParseError("syntax error at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
  if (!j.is_object()) {
    throw ParseError("top-level value must be an object");
  }

  Instance inst;
  const std::int64_t ip = as_integer(require_field(j, "product_count"), "product_count");
  const std::int64_t n = as_integer(require_field(j, "manufacturer_count"), "manufacturer_count");
  if (ip < 1 || ip > std::numeric_limits<int>::max()) {
    throw ParseError("product_count: out of range");
  }
  if (n < 1 || n > kMaxManufacturers) {
    throw ParseError("manufacturer_count: must be in [1, " +
                     std::to_string(kMaxManufacturers) + "]");
  }
  inst.product_count = static_cast<int>(ip);
  inst.manufacturer_count = static_cast<int>(n);
  inst.ask_price = read_int_vector(j, "ask_price", inst.product_count);
  inst.shortage_cost = read_int_vector(j, "shortage_cost", inst.product_count);
  inst.order_quantity = read_int_vector(j, "order_quantity", inst.product_count);
  inst.order_delivery_time = read_int_vector(j, "order_delivery_time", inst.product_count);
  inst.manufacturing_cost =
      read_int_matrix(j, "manufacturing_cost", inst.product_count, inst.manufacturer_count);
  inst.production_capacity =
      read_int_matrix(j, "production_capacity", inst.product_count, inst.manufacturer_count);
  return inst;
}

std::string write_instance(const Instance& inst) {
  json j;
  j["product_count"] = inst.product_count;
  j["manufacturer_count"] = inst.manufacturer_count;
  j["ask_price"] = inst.ask_price;
  j["shortage_cost"] = inst.shortage_cost;
  j["order_quantity"] = inst.order_quantity;
  j["order_delivery_time"] = inst.order_delivery_time;
  json mc = json::array();
  json pc = json::array();
  for (int i = 0; i < inst.product_count; ++i) {
    json mc_row = json::array();
    json pc_row = json::array();
    for (int n = 0; n < inst.manufacturer_count; ++n) {
      mc_row.push_back(inst.mc(i, n));
      pc_row.push_back(inst.pc(i, n));
    }
    mc.push_back(std::move(mc_row));
    pc.push_back(std::move(pc_row));
  }
  j["manufacturing_cost"] = std::move(mc);
  j["production_capacity"] = std::move(pc);
  return j.dump(2) + "\n";
}

Instance scale_order_quantity(const Instance& inst, double factor) {
  if (!(factor >= 0) || !std::isfinite(factor)) {
    throw ConfigError("order-quantity scale factor must be finite and >= 0");
  }
  Instance out = inst;
  for (auto& q : out.order_quantity) {
    q = std::llround(static_cast<double>(q) * factor);
  }
  return out;
}

}  // namespace c2m
