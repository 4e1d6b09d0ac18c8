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

// Exact maximin-share computation. Computing MMS values is NP-hard, so every
// entry point takes a SearchBudget and throws kInstanceTooLarge instead of
// approximating when the budget is exceeded.

#ifndef COSTMMS_ORACLE_HPP_
#define COSTMMS_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "costmms/instance.hpp"

namespace costmms {

struct SearchBudget {
  std::size_t max_goods = 16;
  std::size_t max_agents = 5;
  std::uint64_t node_limit = 100'000'000;
};

/// Throws kInvalidParameter unless every field is positive.
void check_budget(const SearchBudget& budget);

/// A maximin k-partition over plain costs. `groups[j]` holds indices into the
/// input span; some groups are empty when there are fewer items than groups.
struct IndexPartition {
  Value value = 0;
  std::vector<std::vector<std::size_t>> groups;
};

IndexPartition maximin_partition(std::span<const Value> costs, std::size_t k,
                                 const SearchBudget& budget);

struct MaximinResult {
  Value value = 0;
  std::vector<GoodSet> bundles;  // exactly k bundles
};

/// Maximin k-partition of `goods` under the instance's cost function.
/// Deterministic: goods are placed in descending canonical order, each into
/// the candidate bundle with the smallest running total first.
MaximinResult maximin_partition(const Instance& inst, GoodSet goods, std::size_t k,
                                const SearchBudget& budget);

/// MMS^k of `agent`: maximin k-partition of the agent's approval set.
MaximinResult mms_value(const Instance& inst, AgentIndex agent, std::size_t k,
                        const SearchBudget& budget);

struct MmsProfile {
  std::size_t bundle_count = 0;
  std::vector<Value> values;
  std::vector<std::vector<GoodSet>> witnesses;
};

/// mms_value for every agent with k = n.
MmsProfile mms_profile(const Instance& inst, const SearchBudget& budget);

struct Shortfall {
  AgentIndex agent = 0;
  Value received = 0;
  Value required = 0;
};

struct MmsReport {
  bool satisfied = true;
  std::vector<Shortfall> shortfalls;
};

MmsReport verify_mms(const Instance& inst, const Allocation& alloc,
                     const MmsProfile& profile);

}  // namespace costmms

#endif  // COSTMMS_ORACLE_HPP_
