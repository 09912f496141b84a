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

#ifndef C2M_CORE_ALLOCATOR_HPP
#define C2M_CORE_ALLOCATOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "c2m/coalition_values.hpp"
#include "c2m/model.hpp"
#include "c2m/simplex_lp.hpp"

namespace c2m {

// Profit split of the grand coalition's total profit. gamma is the largest
// factor such that every coalition keeps at least gamma times its
// stand-alone value; profits are the maximin vector among all splits that
// attain it. in_core means gamma reached 1 (within 1e-9), degenerate means
// the best attainable gamma was not positive.
struct AllocationResult {
  std::vector<double> profits;
  double gamma = 0.0;
  std::vector<Money> order_values;
  std::vector<std::uint32_t> binding_coalitions;  // rationality rows tight at optimum
  bool in_core = false;
  bool degenerate = false;
};

struct VerificationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// v_n, the value of the orders manufacturer n fulfils under the plan.
std::vector<Money> compute_order_values(const Instance& inst, const ProductionPlan& plan);

// Solves the allocation program for an explicit characteristic function and
// ranking values. Throws AllocationInfeasibleError when no budget-balanced
// nonnegative split exists (grand value below zero).
AllocationResult allocate(const CharacteristicFunction& cf,
                          const std::vector<Money>& order_values,
                          const SimplexOptions& opts = {});

// Convenience overload: ranking values come from the grand-coalition plan.
AllocationResult allocate(const Instance& inst, const CharacteristicFunction& cf,
                          const SimplexOptions& opts = {});

// Independent recheck of every allocation invariant by direct summation
// over all coalitions, plus a maximality certificate: the rationality
// system must be infeasible at gamma + 1e-4 (skipped when gamma is at its
// cap of 1, which certifies maximality by itself).
VerificationReport verify_allocation(const CharacteristicFunction& cf,
                                     const AllocationResult& result);

// Also recomputes order values from the instance and the grand plan.
VerificationReport verify_allocation(const Instance& inst, const CharacteristicFunction& cf,
                                     const AllocationResult& result);

std::string allocation_to_json(const AllocationResult& result);

}  // namespace c2m

#endif  // C2M_CORE_ALLOCATOR_HPP
