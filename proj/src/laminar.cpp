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

#include "costmms/laminar.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "costmms/error.hpp"

namespace costmms {
namespace {

void require_laminar(const Instance& inst) {
  LaminarCheck check = is_laminar(inst);
  if (!check.laminar) {
    throw Error(Errc::kNotLaminar,
                "approval sets of agents '" + inst.agent(check.violation->first).id +
                    "' and '" + inst.agent(check.violation->second).id + "' cross");
  }
}

// Induction on the number of agents approving every good of the current
// sub-problem. All sub-problems keep the same agent count n, which fixes the
// MMS bundle count.
class RootedSolver {
 public:
  RootedSolver(const Instance& inst, const SearchBudget& budget, std::size_t max_depth)
      : inst_(inst), budget_(budget), max_depth_(max_depth) {}

  std::vector<GoodSet> solve(GoodSet goods, const std::vector<GoodSet>& approvals,
                             std::size_t depth) {
    if (depth > max_depth_) {
      throw Error(Errc::kRecursionLimit,
                  "laminar recursion exceeded depth " + std::to_string(max_depth_));
    }
    Key key{goods.bits(), {}};
    for (GoodSet a : approvals) key.second.push_back(a.bits());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<GoodSet> result = step(goods, approvals, depth);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  using Key = std::pair<std::uint64_t, std::vector<std::uint64_t>>;

  Value mms(GoodSet approved, std::size_t n) {
    auto key = std::make_pair(approved.bits(), n);
    if (auto it = mms_memo_.find(key); it != mms_memo_.end()) return it->second;
    Value v = maximin_partition(inst_, approved, n, budget_).value;
    mms_memo_.emplace(key, v);
    return v;
  }

  std::vector<GoodSet> step(GoodSet goods, const std::vector<GoodSet>& approvals,
                            std::size_t depth) {
    const std::size_t n = approvals.size();
    std::vector<AgentIndex> full, partial;
    for (AgentIndex j = 0; j < n; ++j) {
      COSTMMS_CHECK(approvals[j].subset_of(goods), "approval outside sub-problem");
      (approvals[j] == goods ? full : partial).push_back(j);
    }
    COSTMMS_CHECK(!full.empty(), "sub-problem without a full approver");

    if (partial.empty()) {
      return maximin_partition(inst_, goods, n, budget_).bundles;
    }

    // A partial approver whose set is not strictly inside another partial one.
    AgentIndex lifted = partial.front();
    for (AgentIndex j : partial) {
      bool maximal = std::none_of(partial.begin(), partial.end(), [&](AgentIndex t) {
        return approvals[j] != approvals[t] && approvals[j].subset_of(approvals[t]);
      });
      if (maximal) {
        lifted = j;
        break;
      }
    }
    const GoodSet own = approvals[lifted];

    std::vector<GoodSet> lifted_approvals = approvals;
    lifted_approvals[lifted] = goods;
    std::vector<GoodSet> before = solve(goods, lifted_approvals, depth + 1);

    std::vector<AgentIndex> contenders = full;
    contenders.push_back(lifted);
    std::sort(contenders.begin(), contenders.end());
    AgentIndex best = contenders.front();
    for (AgentIndex j : contenders) {
      if (inst_.cost(before[j] & own) > inst_.cost(before[best] & own)) best = j;
    }

    const Value own_mms = mms(own, n);
    if (inst_.cost(before[best] & own) >= own_mms) {
      std::swap(before[lifted], before[best]);
      return before;
    }

    std::vector<GoodSet> restricted(n);
    for (AgentIndex j = 0; j < n; ++j) restricted[j] = approvals[j] & own;
    std::vector<GoodSet> inner = solve(own, restricted, depth + 1);

    std::vector<GoodSet> merged(n);
    for (AgentIndex j = 0; j < n; ++j) {
      COSTMMS_CHECK(inner[j].subset_of(own), "inner bundle escapes restriction");
      merged[j] = (before[j] - own) | inner[j];
    }
    for (AgentIndex j : full) {
      COSTMMS_CHECK(inst_.cost(merged[j]) > inst_.cost(before[j]),
                    "full approver did not strictly gain in merge");
    }
    return merged;
  }

  const Instance& inst_;
  const SearchBudget& budget_;
  std::size_t max_depth_;
  std::map<Key, std::vector<GoodSet>> memo_;
  std::map<std::pair<std::uint64_t, std::size_t>, Value> mms_memo_;
};

}  // namespace

LaminarCheck is_laminar(const Instance& inst) {
  for (AgentIndex i = 0; i < inst.num_agents(); ++i) {
    for (AgentIndex j = i + 1; j < inst.num_agents(); ++j) {
      const GoodSet a = inst.approvals(i), b = inst.approvals(j);
      if (!a.disjoint(b) && !a.subset_of(b) && !b.subset_of(a)) {
        return LaminarCheck{false, std::make_pair(i, j)};
      }
    }
  }
  return LaminarCheck{};
}

LaminarForest build_forest(const Instance& inst) {
  require_laminar(inst);
  LaminarForest forest;
  for (AgentIndex a = 0; a < inst.num_agents(); ++a) {
    const GoodSet set = inst.approvals(a);
    if (set.empty()) continue;
    auto it = std::find(forest.nodes.begin(), forest.nodes.end(), set);
    if (it == forest.nodes.end()) {
      forest.nodes.push_back(set);
      forest.agents.push_back({a});
    } else {
      forest.agents[static_cast<std::size_t>(it - forest.nodes.begin())].push_back(a);
    }
  }
  forest.parent.assign(forest.nodes.size(), std::nullopt);
  for (std::size_t v = 0; v < forest.nodes.size(); ++v) {
    for (std::size_t u = 0; u < forest.nodes.size(); ++u) {
      if (u == v || !forest.nodes[v].subset_of(forest.nodes[u])) continue;
      const auto& p = forest.parent[v];
      if (!p || forest.nodes[u].size() < forest.nodes[*p].size()) forest.parent[v] = u;
    }
    if (!forest.parent[v]) forest.roots.push_back(v);
  }
  return forest;
}

Decomposition decompose(const Instance& inst) {
  LaminarForest forest = build_forest(inst);
  Decomposition out;
  GoodSet covered;
  for (std::size_t r : forest.roots) {
    LaminarBlock block{forest.nodes[r], {}};
    for (AgentIndex a = 0; a < inst.num_agents(); ++a) {
      const GoodSet set = inst.approvals(a);
      if (!set.empty() && set.subset_of(block.goods)) block.agents.push_back(a);
    }
    covered |= block.goods;
    out.blocks.push_back(std::move(block));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const LaminarBlock& x, const LaminarBlock& y) { return x.agents[0] < y.agents[0]; });
  out.unassigned = inst.all_goods() - covered;
  return out;
}

Allocation solve_laminar(const Instance& inst, const SearchBudget& budget) {
  check_budget(budget);
  Decomposition dec = decompose(inst);
  Allocation alloc = empty_allocation(inst.num_agents());
  for (const LaminarBlock& block : dec.blocks) {
    const std::size_t n = block.agents.size();
    std::vector<GoodSet> approvals;
    for (AgentIndex a : block.agents) approvals.push_back(inst.approvals(a));
    RootedSolver solver(inst, budget, n * (block.goods.size() + 2));
    std::vector<GoodSet> bundles = solver.solve(block.goods, approvals, 0);
    for (std::size_t j = 0; j < n; ++j) alloc.bundles[block.agents[j]] = bundles[j];
  }
  assign_unapproved(inst, alloc);
  check_allocation(inst, alloc);
  return alloc;
}

Allocation pareto_repair(const Instance& inst, Allocation alloc) {
  check_allocation(inst, alloc);
  for (AgentIndex holder = 0; holder < alloc.bundles.size(); ++holder) {
    GoodSet misplaced = (alloc.bundles[holder] & inst.approved_by_anyone()) -
                        inst.approvals(holder);
    for (GoodIndex g : misplaced) {
      if (inst.cost(g) == 0) continue;
      for (AgentIndex a = 0; a < inst.num_agents(); ++a) {
        if (inst.approvals(a).contains(g)) {
          alloc.bundles[holder].erase(g);
          alloc.bundles[a].insert(g);
          break;
        }
      }
    }
  }
  return alloc;
}

}  // namespace costmms
