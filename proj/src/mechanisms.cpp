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

#include "costmms/mechanisms.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "costmms/error.hpp"

namespace costmms {
namespace {

void check_sequence(std::size_t n, const PickingSequence& seq) {
  for (std::size_t t = 0; t < seq.turns.size(); ++t) {
    if (seq.turns[t] >= n) {
      throw Error(Errc::kInvalidSequenceIndex,
                  "turn " + std::to_string(t + 1) + " names agent " +
                      std::to_string(seq.turns[t] + 1) + " but there are " +
                      std::to_string(n) + " agents");
    }
  }
}

template <typename OnPick, typename OnComplete>
Allocation simulate(const Instance& inst, std::span<const GoodSet> reports,
                    const PickingSequence& seq, OnPick&& on_pick, OnComplete&& on_complete) {
  const std::size_t n = reports.size();
  Allocation alloc = empty_allocation(n);
  GoodSet available = inst.all_goods();
  for (std::size_t t = 0; t < seq.turns.size(); ++t) {
    const AgentIndex a = seq.turns[t];
    const GoodSet options = reports[a] & available;
    if (options.empty()) {
      on_pick(t, a, std::optional<GoodIndex>{});
      continue;
    }
    const GoodIndex g = options.highest();
    available.erase(g);
    alloc.bundles[a].insert(g);
    on_pick(t, a, std::optional<GoodIndex>{g});
  }
  for (GoodIndex g : available) {
    AgentIndex holder = 0;
    for (AgentIndex a = n; a-- > 0;) {
      if (reports[a].contains(g)) {
        holder = a;
        break;
      }
    }
    alloc.bundles[holder].insert(g);
    on_complete(g, holder);
  }
  return alloc;
}

}  // namespace

MechanismRun run_sequential(const Instance& inst, const PickingSequence& seq) {
  check_sequence(inst.num_agents(), seq);
  MechanismRun run;
  run.sequence = seq;
  std::vector<GoodSet> reports = inst.approval_profile();
  run.result = simulate(
      inst, reports, seq,
      [&](std::size_t t, AgentIndex a, std::optional<GoodIndex> g) {
        run.trace.push_back(PickEvent{t, a, g});
      },
      [&](GoodIndex g, AgentIndex a) { run.completion.push_back(CompletionEvent{g, a}); });
  return run;
}

Allocation sequential_allocation(const Instance& inst, std::span<const GoodSet> reports,
                                 const PickingSequence& seq) {
  if (reports.size() != inst.num_agents()) {
    throw Error(Errc::kWrongAgentCount, "report profile size does not match agent count");
  }
  check_sequence(reports.size(), seq);
  return simulate(
      inst, reports, seq, [](std::size_t, AgentIndex, std::optional<GoodIndex>) {},
      [](GoodIndex, AgentIndex) {});
}

PickingSequence parse_sequence(std::string_view csv) {
  PickingSequence seq;
  std::string_view rest = csv;
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    std::size_t agent = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), agent);
    if (ec != std::errc() || ptr != item.data() + item.size()) {
      throw Error(Errc::kInvalidParameter, "bad sequence entry '" + std::string(item) + "'");
    }
    if (agent == 0) throw Error(Errc::kInvalidSequenceIndex, "sequence agents are numbered from 1");
    seq.turns.push_back(agent - 1);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return seq;
}

PickingSequence prop1_sequence(std::size_t n, std::size_t m) {
  if (n == 0) throw Error(Errc::kInvalidParameter, "need at least one agent");
  PickingSequence seq;
  seq.turns.reserve(n + 2 + n * m);
  for (AgentIndex a = 0; a < n; ++a) seq.turns.push_back(a);
  seq.turns.push_back(n - 1);
  seq.turns.push_back(n - 1);
  for (AgentIndex a = n; a-- > 0;) seq.turns.insert(seq.turns.end(), m, a);
  return seq;
}

PickingSequence prop2_sequence(const Instance& inst) {
  const std::size_t n = inst.num_agents(), m = inst.num_goods();
  if (n < 2) throw Error(Errc::kTooFewAgents, "the n+2 sequence needs at least 2 agents");
  if (m != n + 2) {
    throw Error(Errc::kWrongGoodsCount,
                "the n+2 sequence needs exactly " + std::to_string(n + 2) + " goods, got " +
                    std::to_string(m));
  }
  // Goods are in ascending cost order, so g_2, g_3, g_4 sit at 1, 2, 3.
  const bool top_heavy = inst.cost(GoodIndex{3}) > inst.cost(GoodIndex{1}) + inst.cost(GoodIndex{2});
  PickingSequence seq;
  for (AgentIndex a = 0; a < n; ++a) seq.turns.push_back(a);
  seq.turns.push_back(n - 1);
  seq.turns.push_back(top_heavy ? n - 1 : n - 2);
  return seq;
}

Value lemma4_bound(const Instance& inst, AgentIndex agent) {
  const std::size_t n = inst.num_agents(), m = inst.num_goods();
  if (m != n + 2) {
    throw Error(Errc::kWrongGoodsCount,
                "bound applies to n+2 goods, got " + std::to_string(m) + " for n = " +
                    std::to_string(n));
  }
  if (agent >= n) throw Error(Errc::kInvalidParameter, "agent index out of range");
  const GoodSet approved = inst.approvals(agent);
  if (approved.size() < n) {
    throw Error(Errc::kTooFewApprovals,
                "agent approves " + std::to_string(approved.size()) + " goods, fewer than n");
  }
  const std::size_t k = std::min<std::size_t>(approved.size() - n, 2);
  if (n <= k) {
    throw Error(Errc::kDegenerateRank,
                "rank n - k = " + std::to_string(n) + " - " + std::to_string(k) +
                    " is below 1");
  }
  const std::size_t rank = n - k;  // 1 = most valuable
  std::vector<GoodIndex> members(approved.begin(), approved.end());
  return inst.cost(members[members.size() - rank]);
}

}  // namespace costmms
