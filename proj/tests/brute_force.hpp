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

// Reference implementations used only by tests. They enumerate whole
// spaces (every labelling of goods with bundles, every allocation) and share
// no code with the library's search.

#ifndef COSTMMS_TESTS_BRUTE_FORCE_HPP_
#define COSTMMS_TESTS_BRUTE_FORCE_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "costmms/instance.hpp"

namespace costmms::testing {

// Max over all k^m labellings of the min bundle sum.
inline Value brute_maximin(const std::vector<Value>& costs, std::size_t k) {
  if (k == 0) return 0;
  const std::size_t m = costs.size();
  std::vector<std::size_t> label(m, 0);
  Value best = 0;
  while (true) {
    std::vector<Value> sums(k, 0);
    for (std::size_t g = 0; g < m; ++g) sums[label[g]] += costs[g];
    best = std::max(best, *std::min_element(sums.begin(), sums.end()));
    std::size_t pos = 0;
    while (pos < m && ++label[pos] == k) label[pos++] = 0;
    if (pos == m) break;
  }
  return best;
}

inline std::vector<Value> costs_of(const Instance& inst, GoodSet set) {
  std::vector<Value> out;
  for (GoodIndex g : set) out.push_back(inst.cost(g));
  return out;
}

inline Value brute_mms(const Instance& inst, AgentIndex agent, std::size_t k) {
  return brute_maximin(costs_of(inst, inst.approvals(agent)), k);
}

// Some allocation where nobody is worse off and somebody strictly better.
inline bool brute_pareto_improvable(const Instance& inst, const Allocation& alloc) {
  const std::size_t n = inst.num_agents(), m = inst.num_goods();
  std::vector<Value> current(n);
  for (AgentIndex a = 0; a < n; ++a) current[a] = inst.value(a, alloc.bundles[a]);
  std::vector<std::size_t> owner(m, 0);
  while (true) {
    std::vector<Value> v(n, 0);
    for (GoodIndex g = 0; g < m; ++g) {
      if (inst.approvals(owner[g]).contains(g)) v[owner[g]] += inst.cost(g);
    }
    bool weakly = true, strictly = false;
    for (AgentIndex a = 0; a < n; ++a) {
      weakly = weakly && v[a] >= current[a];
      strictly = strictly || v[a] > current[a];
    }
    if (weakly && strictly) return true;
    std::size_t pos = 0;
    while (pos < m && ++owner[pos] == n) owner[pos++] = 0;
    if (pos == m) return false;
  }
}

// True when every bundle set is pairwise disjoint and covers `universe`.
inline bool is_partition_of(const std::vector<GoodSet>& parts, GoodSet universe) {
  GoodSet seen;
  for (GoodSet p : parts) {
    if (!(seen & p).empty()) return false;
    seen |= p;
  }
  return seen == universe;
}

}  // namespace costmms::testing

#endif  // COSTMMS_TESTS_BRUTE_FORCE_HPP_
