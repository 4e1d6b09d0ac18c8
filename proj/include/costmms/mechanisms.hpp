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

// Sequential Allocation driven by a picking sequence. On each turn the
// picker takes the highest-cost available good it approves (later canonical
// good on cost ties) or skips if none is left.
//
// After the last turn, approved leftovers go to their highest-index approver,
// which is what appending "each agent from n down to 1 takes everything it
// still wants" would do. Goods nobody approves go to agent 0. Sequences here
// are 0-based; the CLI and JSON use 1-based agent numbers.

#ifndef COSTMMS_MECHANISMS_HPP_
#define COSTMMS_MECHANISMS_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "costmms/instance.hpp"

namespace costmms {

struct PickingSequence {
  std::vector<AgentIndex> turns;

  bool operator==(const PickingSequence&) const = default;
};

struct PickEvent {
  std::size_t turn = 0;
  AgentIndex agent = 0;
  std::optional<GoodIndex> good;  // nullopt = skipped
};

struct CompletionEvent {
  GoodIndex good = 0;
  AgentIndex agent = 0;
};

struct MechanismRun {
  PickingSequence sequence;
  std::vector<PickEvent> trace;
  std::vector<CompletionEvent> completion;
  Allocation result;
};

/// Full simulation with trace. Throws kInvalidSequenceIndex.
MechanismRun run_sequential(const Instance& inst, const PickingSequence& seq);

/// Same outcome as run_sequential(...).result, but driven by reported
/// approval sets and without recording a trace.
Allocation sequential_allocation(const Instance& inst, std::span<const GoodSet> reports,
                                 const PickingSequence& seq);

/// "1,2,2" -> turns {0, 1, 1}. Throws kInvalidParameter on a malformed
/// entry and kInvalidSequenceIndex on 0.
PickingSequence parse_sequence(std::string_view csv);

/// 1, 2, ..., n, n, n followed by m copies each of n, n-1, ..., 1.
PickingSequence prop1_sequence(std::size_t n, std::size_t m);

/// For m = n + 2: 1, ..., n, n, n when c(g4) > c(g2) + c(g3) over ascending
/// costs, otherwise 1, ..., n, n, n-1. Throws kWrongGoodsCount or
/// kTooFewAgents (n < 2).
PickingSequence prop2_sequence(const Instance& inst);

/// For m = n + 2, the cost of the (n-k)-th most valuable approved good, with
/// k the largest value in {0,1,2} such that |A| >= n + k. An upper bound on
/// the agent's MMS. Throws kWrongGoodsCount, kTooFewApprovals (|A| < n) or
/// kDegenerateRank (n - k < 1).
Value lemma4_bound(const Instance& inst, AgentIndex agent);

}  // namespace costmms

#endif  // COSTMMS_MECHANISMS_HPP_
