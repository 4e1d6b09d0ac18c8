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

#include "costmms/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "costmms/error.hpp"

namespace costmms {
namespace {

// Depth-first multiway partitioning. Items arrive sorted by descending cost.
// A new bundle may only be opened after all lower-numbered bundles are
// nonempty, and among bundles with equal running totals only the first is
// tried. Nodes are pruned when the water-filling bound on the final minimum
// cannot beat the incumbent.
class PartitionSearch {
 public:
  PartitionSearch(std::span<const Value> sorted, std::size_t k, std::uint64_t node_limit)
      : costs_(sorted), k_(k), node_limit_(node_limit), sums_(k, 0),
        assign_(sorted.size(), 0), best_assign_(sorted.size(), 0),
        suffix_(sorted.size() + 1, 0) {
    for (std::size_t i = sorted.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] + sorted[i];
    ceiling_ = suffix_[0] / k_;
  }

  Value run() {
    dfs(0, 0);
    return static_cast<Value>(best_);
  }

  const std::vector<std::size_t>& best_assignment() const { return best_assign_; }

 private:
  // Largest t with sum_j max(0, t - sums_j) <= remaining.
  Value fill_bound(Value remaining) const {
    scratch_ = sums_;
    std::sort(scratch_.begin(), scratch_.end());
    Value prefix = 0;
    for (std::size_t p = 1; p <= k_; ++p) {
      prefix += scratch_[p - 1];
      Value level = (remaining + prefix) / p;
      if (p == k_ || level <= scratch_[p]) return level;
    }
    return 0;  // unreachable
  }

  void dfs(std::size_t item, std::size_t used) {
    if (++nodes_ > node_limit_) {
      throw Error(Errc::kInstanceTooLarge,
                  "maximin search exceeded node limit of " + std::to_string(node_limit_));
    }
    const std::size_t n = costs_.size();
    if (item == n) {
      Value low = used < k_ ? 0 : *std::min_element(sums_.begin(), sums_.end());
      if (static_cast<std::int64_t>(low) > best_) {
        best_ = static_cast<std::int64_t>(low);
        best_assign_ = assign_;
        done_ = low == ceiling_;
      }
      return;
    }
    Value bound = used + (n - item) < k_ ? 0 : fill_bound(suffix_[item]);
    if (static_cast<std::int64_t>(bound) <= best_) return;

    const std::size_t open = std::min(used + 1, k_);
    std::size_t order[64];
    for (std::size_t j = 0; j < open; ++j) order[j] = j;
    std::sort(order, order + open, [&](std::size_t a, std::size_t b) {
      return sums_[a] != sums_[b] ? sums_[a] < sums_[b] : a < b;
    });
    for (std::size_t t = 0; t < open && !done_; ++t) {
      const std::size_t j = order[t];
      if (t > 0 && sums_[order[t - 1]] == sums_[j]) continue;
      sums_[j] += costs_[item];
      assign_[item] = j;
      dfs(item + 1, j == used ? used + 1 : used);
      sums_[j] -= costs_[item];
    }
  }

  std::span<const Value> costs_;
  std::size_t k_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::vector<Value> sums_;
  mutable std::vector<Value> scratch_;
  std::vector<std::size_t> assign_;
  std::vector<std::size_t> best_assign_;
  std::vector<Value> suffix_;
  Value ceiling_ = 0;
  std::int64_t best_ = -1;
  bool done_ = false;
};

void check_size(std::size_t items, std::size_t k, const SearchBudget& budget) {
  check_budget(budget);
  if (k == 0) throw Error(Errc::kInvalidParameter, "bundle count must be at least 1");
  if (k > budget.max_agents || k > 64) {
    throw Error(Errc::kInstanceTooLarge,
                std::to_string(k) + " bundles exceeds budget of " +
                    std::to_string(budget.max_agents));
  }
  if (items > budget.max_goods) {
    throw Error(Errc::kInstanceTooLarge,
                std::to_string(items) + " goods exceeds budget of " +
                    std::to_string(budget.max_goods));
  }
}

}  // namespace

void check_budget(const SearchBudget& budget) {
  if (budget.max_goods == 0 || budget.max_agents == 0 || budget.node_limit == 0) {
    throw Error(Errc::kInvalidParameter, "search budget fields must be positive");
  }
}

IndexPartition maximin_partition(std::span<const Value> costs, std::size_t k,
                                 const SearchBudget& budget) {
  check_size(costs.size(), k, budget);
  // Descending cost, later input position first among equal costs.
  std::vector<std::size_t> order(costs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return costs[a] != costs[b] ? costs[a] > costs[b] : a > b;
  });
  std::vector<Value> sorted(costs.size());
  for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = costs[order[i]];

  PartitionSearch search(sorted, k, budget.node_limit);
  IndexPartition out;
  out.value = search.run();
  out.groups.assign(k, {});
  const auto& assign = search.best_assignment();
  for (std::size_t i = 0; i < order.size(); ++i) out.groups[assign[i]].push_back(order[i]);
  for (auto& g : out.groups) std::sort(g.begin(), g.end());
  return out;
}

MaximinResult maximin_partition(const Instance& inst, GoodSet goods, std::size_t k,
                                const SearchBudget& budget) {
  COSTMMS_CHECK(goods.subset_of(inst.all_goods()), "goods outside instance");
  std::vector<GoodIndex> members(goods.begin(), goods.end());
  std::vector<Value> costs;
  costs.reserve(members.size());
  for (GoodIndex g : members) costs.push_back(inst.cost(g));

  IndexPartition part = maximin_partition(costs, k, budget);
  MaximinResult out{part.value, std::vector<GoodSet>(k)};
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t idx : part.groups[j]) out.bundles[j].insert(members[idx]);
  }
  return out;
}

MaximinResult mms_value(const Instance& inst, AgentIndex agent, std::size_t k,
                        const SearchBudget& budget) {
  if (agent >= inst.num_agents()) {
    throw Error(Errc::kInvalidParameter, "agent index out of range");
  }
  return maximin_partition(inst, inst.approvals(agent), k, budget);
}

MmsProfile mms_profile(const Instance& inst, const SearchBudget& budget) {
  const std::size_t n = inst.num_agents();
  if (n > budget.max_agents) {
    throw Error(Errc::kInstanceTooLarge,
                std::to_string(n) + " agents exceeds budget of " +
                    std::to_string(budget.max_agents));
  }
  MmsProfile profile;
  profile.bundle_count = n;
  for (AgentIndex a = 0; a < n; ++a) {
    MaximinResult r = mms_value(inst, a, n, budget);
    profile.values.push_back(r.value);
    profile.witnesses.push_back(std::move(r.bundles));
  }
  return profile;
}

MmsReport verify_mms(const Instance& inst, const Allocation& alloc,
                     const MmsProfile& profile) {
  check_allocation(inst, alloc);
  if (profile.values.size() != inst.num_agents()) {
    throw Error(Errc::kInvalidParameter, "MMS profile does not match the instance");
  }
  MmsReport report;
  for (AgentIndex a = 0; a < inst.num_agents(); ++a) {
    Value got = inst.value(a, alloc.bundles[a]);
    if (got < profile.values[a]) {
      report.satisfied = false;
      report.shortfalls.push_back(Shortfall{a, got, profile.values[a]});
    }
  }
  return report;
}

}  // namespace costmms
