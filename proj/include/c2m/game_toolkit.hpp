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

#ifndef C2M_GAME_TOOLKIT_HPP
#define C2M_GAME_TOOLKIT_HPP

#include <cstdint>
#include <vector>

#include "c2m/coalition_values.hpp"
#include "c2m/core_allocator.hpp"
#include "c2m/model.hpp"
#include "c2m/simplex_lp.hpp"

namespace c2m {

// The empty coalition is worth 0 for Shapley purposes (the stored
// all-shortage value is not used), so the first entrant's marginal
// contribution includes the shortage it relieves and the values sum to the
// grand value. Emitters repeat this convention in output metadata.
inline constexpr Money kShapleyEmptyCoalitionValue = 0;

struct ShapleyVector {
  std::vector<double> values;
};

// Exact marginal-contribution average with weight |S|!(N-|S|-1)!/N!.
// Throws GuardError when the coalition space is too large to enumerate.
ShapleyVector shapley(const CharacteristicFunction& cf);

struct CoreMembership {
  bool in_core = false;
  std::uint32_t worst_coalition = 0;  // lowest mask attaining worst_deficit
  double worst_deficit = 0.0;         // max over coalitions of value minus payoff
};

// Exact scan of all nonempty coalitions. in_core requires every deficit
// at most 1e-6 and the profits to sum to the grand value within 1e-6.
CoreMembership core_membership(const CharacteristicFunction& cf,
                               const std::vector<double>& profits);

struct MechanismComparison {
  CharacteristicFunction cf;
  AllocationResult allocation;
  ShapleyVector shapley_values;
  CoreMembership allocation_membership;
  CoreMembership shapley_membership;
};

// Full pipeline on one instance: plan, coalition values, both mechanisms,
// and their core-membership diagnostics.
MechanismComparison compare(const Instance& inst, const SimplexOptions& opts = {});

}  // namespace c2m

#endif  // C2M_GAME_TOOLKIT_HPP
