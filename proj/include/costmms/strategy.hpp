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

// Strategyproofness auditing. Costs are public, so an agent's private type is
// its approval set and a misreport is any other subset of the goods.
//
// Goods that no agent reports are not really allocated: a mechanism only
// places them somewhere to keep the allocation complete. They are therefore
// left out when an agent's outcome is valued.

#ifndef COSTMMS_STRATEGY_HPP_
#define COSTMMS_STRATEGY_HPP_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "costmms/instance.hpp"
#include "costmms/mechanisms.hpp"
#include "costmms/oracle.hpp"

namespace costmms {

/// Maps the public goods of `inst` and a reported approval profile to an
/// allocation. The approval sets stored in `inst` are ignored.
using Mechanism = std::function<Allocation(const Instance& inst, std::span<const GoodSet> reports)>;

/// Cost of the goods in `bundle` the agent truly approves and that at least
/// one agent reports in `reports`.
Value manipulation_value(const Instance& inst, GoodSet bundle, GoodSet truth,
                         std::span<const GoodSet> reports);

Mechanism sequence_mechanism(PickingSequence seq);
/// prop1_sequence(n, m) chosen per instance.
Mechanism prop1_mechanism();
/// prop2_sequence per instance; a single agent simply receives every good.
Mechanism prop2_mechanism();

/// Parses "prop1", "prop2" or "seq:<1-based csv>". Throws kInvalidParameter
/// or kInvalidSequenceIndex (agent number 0).
Mechanism parse_mechanism(const std::string& name);

/// The picking sequence a mechanism name denotes on `inst`.
PickingSequence named_sequence(const Instance& inst, const std::string& name);

struct ManipulationWitness {
  AgentIndex agent = 0;
  GoodSet truth;
  GoodSet misreport;
  Value honest_value = 0;
  Value manipulated_value = 0;
  std::vector<GoodSet> profile;  // full honest profile the deviation is from
};

/// Per-agent misreport universe; nullopt means all 2^m subsets.
struct MisreportScope {
  std::optional<std::vector<std::vector<GoodSet>>> per_agent;

  static MisreportScope all() { return {}; }
};

struct AuditReport {
  bool strategyproof = true;
  std::optional<ManipulationWitness> witness;
  std::uint64_t deviations_checked = 0;
};

/// Runs the mechanism on the honest profile and on every unilateral
/// misreport in scope, agents in index order and subsets in ascending bit
/// order. Returns the first strict gain. Throws kInstanceTooLarge when
/// m > budget.max_goods and the scope is exhaustive.
AuditReport audit_sp(const Instance& inst, const Mechanism& mechanism,
                     const MisreportScope& scope, const SearchBudget& budget);

/// audit_sp over every approval profile of the instance's goods and agent
/// count: all (2^m)^n honest profiles, each with all unilateral misreports.
AuditReport audit_sp_exhaustive(const Instance& inst, const Mechanism& mechanism,
                                const SearchBudget& budget);

/// One profile of the impossibility chain, with the allocations still
/// admissible after MMS, Pareto efficiency and the strategyproofness links to
/// earlier steps.
struct AxiomChainStep {
  std::string label;
  std::vector<GoodSet> profile;
  std::optional<std::size_t> linked_to;  // differs from it in one agent
  std::optional<std::size_t> same_as;    // identical profile
  std::vector<Allocation> base;          // MMS + PO only
  std::vector<Allocation> admissible;    // after chain constraints
};

struct ChainBranch {
  std::string name;                      // which I_1 allocation is assumed
  std::vector<AxiomChainStep> steps;
  bool contradiction = false;            // some step has no admissible allocation
};

struct Prop3Certificate {
  Instance instance;                           // goods g2..g6, costs 2..6, n = 2
  std::vector<ChainBranch> branches;           // one per I_1 bundling
  std::vector<std::vector<GoodSet>> family;    // distinct profiles searched
  std::vector<std::size_t> family_base_sizes;
  std::uint64_t search_nodes = 0;
  std::uint64_t consistent_assignments = 0;    // over the whole family
  std::uint64_t literal_table_assignments = 0; // over the six table rows only
  bool unsatisfiable = false;
};

/// Builds the two-agent, five-good impossibility family and proves by
/// exhaustive search that no assignment of allocations to its profiles is
/// simultaneously MMS, Pareto efficient and strategyproof.
Prop3Certificate replicate_prop3();

}  // namespace costmms

#endif  // COSTMMS_STRATEGY_HPP_
