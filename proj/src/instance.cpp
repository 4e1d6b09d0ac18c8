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

#include "costmms/instance.hpp"

#include <algorithm>
#include <numeric>

#include "costmms/error.hpp"

namespace costmms {

Instance Instance::validate(const RawInstance& raw) {
  if (raw.agents.empty()) {
    throw Error(Errc::kEmptyAgentList, "instance has no agents");
  }
  for (const RawGood& g : raw.goods) {
    if (g.cost < 0) {
      throw Error(Errc::kNegativeCost,
                  "good '" + g.id + "' has negative cost " + std::to_string(g.cost));
    }
  }
  if (raw.goods.size() > GoodSet::kCapacity) {
    throw Error(Errc::kTooManyGoods,
                "at most " + std::to_string(GoodSet::kCapacity) +
                    " goods are supported, got " + std::to_string(raw.goods.size()));
  }

  Instance inst;
  inst.goods_.reserve(raw.goods.size());
  for (const RawGood& g : raw.goods) {
    inst.goods_.push_back(Good{g.id, static_cast<Value>(g.cost)});
  }
  std::sort(inst.goods_.begin(), inst.goods_.end(), [](const Good& a, const Good& b) {
    return a.cost != b.cost ? a.cost < b.cost : a.id < b.id;
  });
  for (GoodIndex i = 0; i < inst.goods_.size(); ++i) {
    if (!inst.good_index_.emplace(inst.goods_[i].id, i).second) {
      throw Error(Errc::kDuplicateGoodId, "duplicate good id '" + inst.goods_[i].id + "'");
    }
  }

  inst.agents_.reserve(raw.agents.size());
  for (const RawAgent& a : raw.agents) {
    if (!inst.agent_index_.emplace(a.id, inst.agents_.size()).second) {
      throw Error(Errc::kDuplicateAgentId, "duplicate agent id '" + a.id + "'");
    }
    Agent agent{a.id, {}};
    for (const std::string& id : a.approves) {
      auto it = inst.good_index_.find(id);
      if (it == inst.good_index_.end()) {
        throw Error(Errc::kUnknownGoodInApproval,
                    "agent '" + a.id + "' approves unknown good '" + id + "'");
      }
      agent.approves.insert(it->second);
    }
    inst.agents_.push_back(std::move(agent));
  }
  return inst;
}

Instance Instance::with_approvals(std::span<const GoodSet> approvals) const {
  if (approvals.size() != agents_.size()) {
    throw Error(Errc::kWrongAgentCount, "approval profile size does not match agent count");
  }
  Instance copy = *this;
  for (AgentIndex a = 0; a < approvals.size(); ++a) {
    if (!approvals[a].subset_of(all_goods())) {
      throw Error(Errc::kUnknownGoodInApproval, "approval set references a missing good");
    }
    copy.agents_[a].approves = approvals[a];
  }
  return copy;
}

std::vector<GoodSet> Instance::approval_profile() const {
  std::vector<GoodSet> out;
  out.reserve(agents_.size());
  for (const Agent& a : agents_) out.push_back(a.approves);
  return out;
}

GoodSet Instance::approved_by_anyone() const {
  GoodSet any;
  for (const Agent& a : agents_) any |= a.approves;
  return any;
}

Value Instance::cost(GoodSet set) const {
  Value total = 0;
  for (GoodIndex g : set) total += goods_[g].cost;
  return total;
}

std::optional<GoodIndex> Instance::find_good(std::string_view id) const {
  auto it = good_index_.find(std::string(id));
  if (it == good_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<AgentIndex> Instance::find_agent(std::string_view id) const {
  auto it = agent_index_.find(std::string(id));
  if (it == agent_index_.end()) return std::nullopt;
  return it->second;
}

GoodSet Instance::resolve_goods(std::span<const std::string> ids) const {
  GoodSet out;
  for (const std::string& id : ids) {
    auto g = find_good(id);
    if (!g) throw Error(Errc::kUnknownGoodInBundle, "unknown good '" + id + "'");
    out.insert(*g);
  }
  return out;
}

RawInstance Instance::to_raw() const {
  RawInstance raw;
  for (const Good& g : goods_) {
    raw.goods.push_back(RawGood{g.id, static_cast<std::int64_t>(g.cost)});
  }
  for (const Agent& a : agents_) {
    RawAgent ra{a.id, {}};
    for (GoodIndex g : a.approves) ra.approves.push_back(goods_[g].id);
    raw.agents.push_back(std::move(ra));
  }
  return raw;
}

Value bundle_value(const Instance& inst, AgentIndex agent,
                   std::span<const std::string> bundle) {
  if (agent >= inst.num_agents()) {
    throw Error(Errc::kInvalidParameter, "agent index out of range");
  }
  return inst.value(agent, inst.resolve_goods(bundle));
}

Allocation empty_allocation(std::size_t num_agents) {
  return Allocation{std::vector<GoodSet>(num_agents)};
}

void check_allocation(const Instance& inst, const Allocation& alloc) {
  if (alloc.bundles.size() != inst.num_agents()) {
    throw Error(Errc::kInvalidAllocation,
                "allocation has " + std::to_string(alloc.bundles.size()) +
                    " bundles for " + std::to_string(inst.num_agents()) + " agents");
  }
  GoodSet seen;
  for (GoodSet b : alloc.bundles) {
    if (!b.subset_of(inst.all_goods())) {
      throw Error(Errc::kInvalidAllocation, "bundle references a missing good");
    }
    if (!b.disjoint(seen)) {
      throw Error(Errc::kInvalidAllocation, "a good is allocated twice");
    }
    seen |= b;
  }
  if (seen != inst.all_goods()) {
    throw Error(Errc::kInvalidAllocation, "allocation leaves goods unassigned");
  }
}

void assign_unapproved(const Instance& inst, Allocation& alloc) {
  if (alloc.bundles.empty()) return;
  GoodSet assigned;
  for (GoodSet b : alloc.bundles) assigned |= b;
  alloc.bundles[0] |= inst.all_goods() - assigned - inst.approved_by_anyone();
}

ParetoReport is_pareto_efficient(const Instance& inst, const Allocation& alloc) {
  check_allocation(inst, alloc);
  for (AgentIndex holder = 0; holder < alloc.bundles.size(); ++holder) {
    GoodSet misplaced = alloc.bundles[holder] & inst.approved_by_anyone();
    misplaced -= inst.approvals(holder);
    for (GoodIndex g : misplaced) {
      if (inst.cost(g) > 0) return ParetoReport{false, g};
    }
  }
  return ParetoReport{};
}

}  // namespace costmms
