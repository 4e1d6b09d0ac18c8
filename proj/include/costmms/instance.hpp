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

// Instance model for fair division under cost utilities: every good carries a
// public cost, every agent approves a subset of goods, and an agent's value
// for a bundle is the total cost of the approved goods in it.

#ifndef COSTMMS_INSTANCE_HPP_
#define COSTMMS_INSTANCE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "costmms/good_set.hpp"

namespace costmms {

using Value = std::uint64_t;
using AgentIndex = std::size_t;
using GoodIndex = std::size_t;

// Unvalidated input, as read from JSON or built by hand.
struct RawGood {
  std::string id;
  std::int64_t cost = 0;
};

struct RawAgent {
  std::string id;
  std::vector<std::string> approves;
};

struct RawInstance {
  std::vector<RawGood> goods;
  std::vector<RawAgent> agents;
};

struct Good {
  std::string id;
  Value cost = 0;
};

struct Agent {
  std::string id;
  GoodSet approves;
};

/// A validated, canonical instance. Goods are sorted ascending by
/// (cost, id); GoodSet bit positions refer to that order. Immutable.
class Instance {
 public:
  /// Validates and canonicalizes. Throws Error with kNegativeCost,
  /// kDuplicateGoodId, kDuplicateAgentId, kUnknownGoodInApproval,
  /// kEmptyAgentList or kTooManyGoods.
  static Instance validate(const RawInstance& raw);

  /// Same goods and agent ids, different approval sets. `approvals` must have
  /// one entry per agent and reference only existing goods.
  Instance with_approvals(std::span<const GoodSet> approvals) const;

  std::size_t num_agents() const { return agents_.size(); }
  std::size_t num_goods() const { return goods_.size(); }

  const std::vector<Good>& goods() const { return goods_; }
  const std::vector<Agent>& agents() const { return agents_; }
  const Good& good(GoodIndex g) const { return goods_[g]; }
  const Agent& agent(AgentIndex a) const { return agents_[a]; }

  GoodSet all_goods() const { return GoodSet::prefix(goods_.size()); }
  GoodSet approvals(AgentIndex a) const { return agents_[a].approves; }
  std::vector<GoodSet> approval_profile() const;

  /// Goods approved by at least one agent.
  GoodSet approved_by_anyone() const;

  Value cost(GoodIndex g) const { return goods_[g].cost; }
  Value cost(GoodSet set) const;

  /// v_agent(bundle) = c(bundle ∩ A_agent).
  Value value(AgentIndex agent, GoodSet bundle) const {
    return cost(bundle & agents_[agent].approves);
  }

  Value total_cost() const { return cost(all_goods()); }

  std::optional<GoodIndex> find_good(std::string_view id) const;
  std::optional<AgentIndex> find_agent(std::string_view id) const;

  /// Resolves ids; throws kUnknownGoodInBundle on an unknown id.
  GoodSet resolve_goods(std::span<const std::string> ids) const;

  /// Back to raw form, goods in canonical order.
  RawInstance to_raw() const;

 private:
  Instance() = default;

  std::vector<Good> goods_;
  std::vector<Agent> agents_;
  std::unordered_map<std::string, GoodIndex> good_index_;
  std::unordered_map<std::string, AgentIndex> agent_index_;
};

/// bundle_value on good ids. Throws kUnknownGoodInBundle.
Value bundle_value(const Instance& inst, AgentIndex agent,
                   std::span<const std::string> bundle);

/// One bundle per agent, indexed by agent position.
struct Allocation {
  std::vector<GoodSet> bundles;

  bool operator==(const Allocation&) const = default;
};

/// Empty n-bundle allocation.
Allocation empty_allocation(std::size_t num_agents);

/// Throws kInvalidAllocation unless `alloc` is a complete n-partition of the
/// instance's goods.
void check_allocation(const Instance& inst, const Allocation& alloc);

/// Gives every unassigned good nobody approves to agent 0. Goods that are
/// approved by someone are left untouched.
void assign_unapproved(const Instance& inst, Allocation& alloc);

struct ParetoReport {
  bool efficient = true;
  std::optional<GoodIndex> witness;  // a misplaced good when !efficient
};

/// Pareto efficiency under cost utilities. An allocation is efficient iff
/// every positive-cost good with at least one approver is held by one of its
/// approvers. Zero-cost goods never carry value, so they are ignored.
ParetoReport is_pareto_efficient(const Instance& inst, const Allocation& alloc);

}  // namespace costmms

#endif  // COSTMMS_INSTANCE_HPP_
