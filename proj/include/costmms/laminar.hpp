// Copyright 2026 The costmms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// MMS allocations for laminar approval profiles, where any two approval sets
// are nested or disjoint.

#ifndef COSTMMS_LAMINAR_HPP_
#define COSTMMS_LAMINAR_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "costmms/instance.hpp"
#include "costmms/oracle.hpp"

namespace costmms {

struct LaminarCheck {
  bool laminar = true;
  std::optional<std::pair<AgentIndex, AgentIndex>> violation;  // first crossing pair
};

LaminarCheck is_laminar(const Instance& inst);

/// Distinct nonempty approval sets ordered by containment. Agents with an
/// empty approval set belong to no node.
struct LaminarForest {
  std::vector<GoodSet> nodes;
  std::vector<std::optional<std::size_t>> parent;  // minimal strict superset
  std::vector<std::size_t> roots;
  std::vector<std::vector<AgentIndex>> agents;     // agents whose set equals node
};

/// Throws kNotLaminar.
LaminarForest build_forest(const Instance& inst);

struct LaminarBlock {
  GoodSet goods;                  // a root set
  std::vector<AgentIndex> agents; // agents approving a subset of it
};

struct Decomposition {
  std::vector<LaminarBlock> blocks;  // ordered by lowest member agent
  GoodSet unassigned;                // goods outside every root
};

/// Splits a laminar instance into independent root blocks. Throws kNotLaminar.
Decomposition decompose(const Instance& inst);

/// MMS allocation for a laminar instance. The result need not be Pareto
/// efficient; see pareto_repair. Throws kNotLaminar, kInstanceTooLarge or
/// kRecursionLimit.
Allocation solve_laminar(const Instance& inst, const SearchBudget& budget);

/// Moves every positive-cost good held by a non-approver to its lowest-index
/// approver. No agent's value decreases.
Allocation pareto_repair(const Instance& inst, Allocation alloc);

}  // namespace costmms

#endif  // COSTMMS_LAMINAR_HPP_
