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

#include "costmms/three_agent.hpp"

#include <algorithm>

#include "costmms/error.hpp"

namespace costmms {
namespace {

void require_three(const Instance& inst) {
  if (inst.num_agents() != 3) {
    throw Error(Errc::kWrongAgentCount,
                "three-agent solver needs exactly 3 agents, got " +
                    std::to_string(inst.num_agents()));
  }
}

// Goods with at least two approvers, and per-agent goods with exactly one.
GoodSet shared_goods(const Instance& inst, std::vector<GoodSet>& singles) {
  singles.assign(inst.num_agents(), GoodSet{});
  GoodSet shared;
  for (GoodIndex g = 0; g < inst.num_goods(); ++g) {
    std::size_t count = 0;
    AgentIndex last = 0;
    for (AgentIndex a = 0; a < inst.num_agents(); ++a) {
      if (inst.approvals(a).contains(g)) {
        ++count;
        last = a;
      }
    }
    if (count >= 2) shared.insert(g);
    if (count == 1) singles[last].insert(g);
  }
  return shared;
}

}  // namespace

SingletonReduction reduce_singletons(const Instance& inst) {
  require_three(inst);
  std::vector<GoodSet> singles;
  GoodSet shared = shared_goods(inst, singles);

  RawInstance raw;
  for (GoodIndex g : shared) {
    raw.goods.push_back(RawGood{inst.good(g).id, static_cast<std::int64_t>(inst.cost(g))});
  }
  for (const Agent& a : inst.agents()) {
    RawAgent ra{a.id, {}};
    for (GoodIndex g : a.approves & shared) ra.approves.push_back(inst.good(g).id);
    raw.agents.push_back(std::move(ra));
  }
  return SingletonReduction{Instance::validate(raw), std::move(singles)};
}

GoodSet exclusive_pair(std::span<const GoodSet, 3> approvals, AgentIndex i, AgentIndex j) {
  COSTMMS_CHECK(i < 3 && j < 3 && i != j, "bad agent pair");
  const AgentIndex other = 3 - i - j;
  return (approvals[i] & approvals[j]) - approvals[other];
}

std::pair<std::size_t, std::size_t> lemma2_select(const Instance& inst,
                                                  std::span<const GoodSet, 3> partition,
                                                  GoodSet a12, GoodSet a13, Value mu12,
                                                  Value mu13) {
  for (std::size_t k = 0; k < 3; ++k) {
    if (inst.cost(partition[k] & a12) > mu12) continue;
    for (std::size_t l = 0; l < 3; ++l) {
      if (l == k) continue;
      if (inst.cost(partition[l] & a13) <= mu13) return {k, l};
    }
  }
  throw Error(Errc::kSelectionImpossible,
              "no distinct bundle pair meets both pair-share bounds");
}

ThreeAgentTrace solve_three_traced(const Instance& inst, const SearchBudget& budget) {
  require_three(inst);
  ThreeAgentTrace tr;
  GoodSet shared = shared_goods(inst, tr.stripped);

  std::array<GoodSet, 3> approvals{};
  for (AgentIndex a = 0; a < 3; ++a) approvals[a] = inst.approvals(a) & shared;
  for (AgentIndex a = 0; a < 3; ++a) {
    tr.mms[a] = maximin_partition(inst, approvals[a], 3, budget).value;
  }
  std::array<Value, 3> mu_excluding{};  // mu of the pair not containing agent a
  for (AgentIndex a = 0; a < 3; ++a) {
    const AgentIndex i = (a + 1) % 3, j = (a + 2) % 3;
    mu_excluding[a] = maximin_partition(inst, exclusive_pair(approvals, i, j), 2, budget).value;
    tr.q[a] = tr.mms[a] + mu_excluding[a];
  }

  tr.order = {0, 1, 2};
  std::stable_sort(tr.order.begin(), tr.order.end(),
                   [&](AgentIndex a, AgentIndex b) { return tr.q[a] > tr.q[b]; });

  std::array<GoodSet, 3> role{};
  for (std::size_t r = 0; r < 3; ++r) role[r] = approvals[tr.order[r]];
  tr.a12 = exclusive_pair(role, 0, 1);
  tr.a13 = exclusive_pair(role, 0, 2);
  tr.a23 = exclusive_pair(role, 1, 2);
  tr.mu12 = mu_excluding[tr.order[2]];
  tr.mu13 = mu_excluding[tr.order[1]];
  tr.mu23 = mu_excluding[tr.order[0]];

  const Value lead_mms = tr.mms[tr.order[0]];
  MaximinResult split = maximin_partition(inst, role[0], 3, budget);
  COSTMMS_CHECK(split.value == lead_mms, "lead split differs from its MMS");
  for (std::size_t r = 0; r < 3; ++r) {
    tr.split[r] = split.bundles[r];
    COSTMMS_CHECK(inst.cost(tr.split[r]) >= lead_mms, "lead bundle below MMS");
  }

  std::tie(tr.k, tr.l) = lemma2_select(inst, tr.split, tr.a12, tr.a13, tr.mu12, tr.mu13);
  tr.x = 3 - tr.k - tr.l;

  MaximinResult pair = maximin_partition(inst, tr.a23, 2, budget);
  tr.pair_split = {pair.bundles[0], pair.bundles[1]};
  COSTMMS_CHECK(inst.cost(tr.pair_split[0]) >= tr.mu23 &&
                    inst.cost(tr.pair_split[1]) >= tr.mu23,
                "pair split below mu23");

  const GoodSet sk = tr.split[tr.k], sl = tr.split[tr.l], sx = tr.split[tr.x];
  std::array<GoodSet, 3> bundles{};
  bundles[0] = (sl - role[1]) | (sk - role[2]) | sx;
  bundles[1] = (sl & role[1]) | tr.pair_split[0];
  bundles[2] = (sk & role[2]) | tr.pair_split[1];

  COSTMMS_CHECK(bundles[0].disjoint(bundles[1]) && bundles[0].disjoint(bundles[2]) &&
                    bundles[1].disjoint(bundles[2]),
                "three-agent bundles overlap");
  COSTMMS_CHECK((bundles[0] | bundles[1] | bundles[2]) == shared,
                "three-agent bundles do not cover the shared goods");
  COSTMMS_CHECK(sx.subset_of(bundles[0]) && inst.cost(bundles[0] & role[0]) >= lead_mms,
                "lead agent lost its reserved bundle");

  tr.allocation = empty_allocation(3);
  for (std::size_t r = 0; r < 3; ++r) {
    const AgentIndex a = tr.order[r];
    tr.allocation.bundles[a] = bundles[r] | tr.stripped[a];
  }
  assign_unapproved(inst, tr.allocation);
  check_allocation(inst, tr.allocation);
  return tr;
}

Allocation solve_three(const Instance& inst, const SearchBudget& budget) {
  return solve_three_traced(inst, budget).allocation;
}

}  // namespace costmms
