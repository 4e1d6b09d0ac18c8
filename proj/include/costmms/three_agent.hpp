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

// Constructive Pareto-efficient MMS allocation for exactly three agents.
//
// Goods approved by a single agent are set aside and handed back to that
// agent at the end. On the remaining goods, the agent with the largest
// q_i = MMS_i + mu_jk (mu_jk being the two-agent maximin share over goods
// only j and k approve) splits its approval set into three bundles worth at
// least its MMS each. Two of those bundles are shared out with the other two
// agents, who also split the goods only they approve.

#ifndef COSTMMS_THREE_AGENT_HPP_
#define COSTMMS_THREE_AGENT_HPP_

#include <array>
#include <utility>
#include <vector>

#include "costmms/instance.hpp"
#include "costmms/oracle.hpp"

namespace costmms {

struct SingletonReduction {
  Instance reduced;                   // only goods with >= 2 approvers
  std::vector<GoodSet> stripped;      // per agent, in the original indexing
};

/// Requires n = 3 (kWrongAgentCount).
SingletonReduction reduce_singletons(const Instance& inst);

/// Goods approved by exactly agents i and j among three: (A_i ∩ A_j) \ A_other.
GoodSet exclusive_pair(std::span<const GoodSet, 3> approvals, AgentIndex i, AgentIndex j);

/// Finds distinct bundle positions (k, l) with c(S_k ∩ a12) <= mu12 and
/// c(S_l ∩ a13) <= mu13, taking the lexicographically smallest such pair.
/// Throws kSelectionImpossible when no pair exists, which can only happen if
/// the mu values or the partition are wrong.
std::pair<std::size_t, std::size_t> lemma2_select(const Instance& inst,
                                                  std::span<const GoodSet, 3> partition,
                                                  GoodSet a12, GoodSet a13, Value mu12,
                                                  Value mu13);

/// Intermediate quantities of one solve_three run, in the relabelled frame
/// where position 0 is the agent with the largest q.
struct ThreeAgentTrace {
  std::array<AgentIndex, 3> order{};   // order[r] = original index of role r
  std::array<Value, 3> mms{};          // per original agent, on reduced goods
  std::array<Value, 3> q{};            // per original agent
  Value mu12 = 0, mu13 = 0, mu23 = 0;  // in role frame
  GoodSet a12, a13, a23;               // in role frame
  std::array<GoodSet, 3> split{};      // S, the lead agent's maximin 3-partition
  std::size_t k = 0, l = 0, x = 0;     // pair selection and the remaining bundle
  std::array<GoodSet, 2> pair_split{}; // (T1, T2) over a23
  std::vector<GoodSet> stripped;       // singletons per original agent
  Allocation allocation;
};

ThreeAgentTrace solve_three_traced(const Instance& inst, const SearchBudget& budget);

/// Pareto-efficient MMS allocation for three agents.
Allocation solve_three(const Instance& inst, const SearchBudget& budget);

}  // namespace costmms

#endif  // COSTMMS_THREE_AGENT_HPP_
