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

#ifndef C2M_CLI_HPP
#define C2M_CLI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "c2m/coalition_values.hpp"
#include "c2m/core_allocator.hpp"
#include "c2m/cpp_planner.hpp"
#include "c2m/game_toolkit.hpp"
#include "c2m/model.hpp"
#include "c2m/simplex_lp.hpp"

namespace c2m {

struct ShapeSpec {
  std::string label;
  int product_count = 1;
  int manufacturer_count = 1;
  int count = 1;
  std::uint64_t base_seed = 0;  // instance k (1-based) uses base_seed + k
};

struct SuiteSpec {
  std::vector<ShapeSpec> shapes;
};

// Six shapes of ten instances each: 1x5, 1x10, 5x5, 5x10, 10x5, 10x10
// (products x manufacturers). Shape s gets base seed `seed + 1000*s`.
SuiteSpec default_suite_spec(std::uint64_t seed = 42);

// Everything the pipeline produces for one instance. allocation and
// allocation_membership are meaningful only when allocation_ok.
struct InstanceReport {
  std::string name;
  ProductionPlan plan;
  CharacteristicFunction cf;
  std::vector<Money> order_values;
  bool allocation_ok = false;
  AllocationResult allocation;
  std::string allocation_error;
  ShapleyVector shapley_values;
  CoreMembership allocation_membership;
  CoreMembership shapley_membership;
};

InstanceReport solve_instance(const Instance& inst, const std::string& name,
                              const SimplexOptions& opts = {});

struct SuiteInstanceInput {
  std::string label;
  int index = 0;  // 1-based within the label
  Instance instance;
};

struct SuiteRow {
  std::string label;
  int index = 0;
  Money total_profit = 0;
  double gamma = 0.0;
  bool allocation_ok = false;
  bool in_core = false;
  bool degenerate = false;
  bool shortage = false;
};

struct ShapeSummary {
  std::string label;
  int count = 0;
  double mean_profit = 0.0;
  int core_count = 0;      // gamma reached 1
  int shortage_count = 0;  // any product left short
};

struct SuiteReport {
  std::vector<SuiteRow> rows;
  std::vector<ShapeSummary> summaries;
  double scale_factor = 0.0;  // 0 means no scaled variant was run
  std::vector<SuiteRow> scaled_rows;
  std::vector<ShapeSummary> scaled_summaries;
};

// Solves every instance in order; when scale_factor > 0 the whole set is
// re-run with order quantities scaled by that factor.
SuiteReport run_suite(const std::vector<SuiteInstanceInput>& instances,
                      double scale_factor = 0.0, const SimplexOptions& opts = {});

// Tab-separated report tables and their JSON mirrors.
std::string format_money(double value);
std::string format_gamma(const AllocationResult& result);
std::string render_instance_report(const InstanceReport& report);
std::string instance_report_to_json(const InstanceReport& report);
std::string render_suite_report(const SuiteReport& report);
std::string suite_report_to_json(const SuiteReport& report);
std::string render_comparison(const MechanismComparison& cmp);
std::string comparison_to_json(const MechanismComparison& cmp);

// Full command-line front end (generate / solve / suite / compare).
// Returns the process exit code: 0 success, 1 bad input, 2 solver trouble.
int run_cli(int argc, const char* const* argv);

}  // namespace c2m

#endif  // C2M_CLI_HPP
