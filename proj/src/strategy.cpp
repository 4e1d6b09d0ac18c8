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

#include "costmms/strategy.hpp"

#include <string>

#include "costmms/error.hpp"

namespace costmms {
namespace {

constexpr std::size_t kMaxExhaustiveBits = 24;

std::vector<GoodSet> all_subsets(std::size_t m) {
  std::vector<GoodSet> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    out.push_back(GoodSet::from_bits(bits));
  }
  return out;
}

GoodSet reported_by_anyone(std::span<const GoodSet> profile) {
  GoodSet out;
  for (GoodSet s : profile) out |= s;
  return out;
}

}  // namespace

Value manipulation_value(const Instance& inst, GoodSet bundle, GoodSet truth,
                         std::span<const GoodSet> reports) {
  return inst.cost(bundle & truth & reported_by_anyone(reports));
}

Mechanism sequence_mechanism(PickingSequence seq) {
  return [seq = std::move(seq)](const Instance& inst, std::span<const GoodSet> reports) {
    return sequential_allocation(inst, reports, seq);
  };
}

Mechanism prop1_mechanism() {
  return [](const Instance& inst, std::span<const GoodSet> reports) {
    return sequential_allocation(inst, reports,
                                 prop1_sequence(inst.num_agents(), inst.num_goods()));
  };
}

Mechanism prop2_mechanism() {
  return [](const Instance& inst, std::span<const GoodSet> reports) {
    if (inst.num_agents() == 1) {
      if (inst.num_goods() != 3) {
        throw Error(Errc::kWrongGoodsCount, "the n+2 mechanism needs exactly n + 2 goods");
      }
      return Allocation{{inst.all_goods()}};
    }
    return sequential_allocation(inst, reports, prop2_sequence(inst));
  };
}

PickingSequence named_sequence(const Instance& inst, const std::string& name) {
  if (name == "prop1") return prop1_sequence(inst.num_agents(), inst.num_goods());
  if (name == "prop2") return prop2_sequence(inst);
  const std::string prefix = "seq:";
  if (name.rfind(prefix, 0) != 0) {
    throw Error(Errc::kInvalidParameter,
                "unknown mechanism '" + name + "' (expected prop1, prop2 or seq:<csv>)");
  }
  return parse_sequence(std::string_view(name).substr(prefix.size()));
}

Mechanism parse_mechanism(const std::string& name) {
  if (name == "prop1") return prop1_mechanism();
  if (name == "prop2") return prop2_mechanism();
  const std::string prefix = "seq:";
  if (name.rfind(prefix, 0) != 0) {
    throw Error(Errc::kInvalidParameter,
                "unknown mechanism '" + name + "' (expected prop1, prop2 or seq:<csv>)");
  }
  return sequence_mechanism(parse_sequence(std::string_view(name).substr(prefix.size())));
}

AuditReport audit_sp(const Instance& inst, const Mechanism& mechanism,
                     const MisreportScope& scope, const SearchBudget& budget) {
  check_budget(budget);
  const std::size_t n = inst.num_agents(), m = inst.num_goods();
  if (!scope.per_agent && m > budget.max_goods) {
    throw Error(Errc::kInstanceTooLarge,
                std::to_string(m) + " goods exceeds misreport budget of " +
                    std::to_string(budget.max_goods));
  }
  if (scope.per_agent && scope.per_agent->size() != n) {
    throw Error(Errc::kInvalidParameter, "misreport scope needs one list per agent");
  }
  const std::vector<GoodSet> everything = scope.per_agent ? std::vector<GoodSet>{} : all_subsets(m);

  std::vector<GoodSet> profile = inst.approval_profile();
  const Allocation honest = mechanism(inst, profile);
  check_allocation(inst, honest);

  AuditReport report;
  for (AgentIndex a = 0; a < n; ++a) {
    const GoodSet truth = profile[a];
    const Value honest_value = manipulation_value(inst, honest.bundles[a], truth, profile);
    const auto& universe = scope.per_agent ? (*scope.per_agent)[a] : everything;
    for (GoodSet lie : universe) {
      if (lie == truth) continue;
      profile[a] = lie;
      const Allocation out = mechanism(inst, profile);
      ++report.deviations_checked;
      const Value got = manipulation_value(inst, out.bundles[a], truth, profile);
      if (got > honest_value) {
        report.strategyproof = false;
        std::vector<GoodSet> honest_profile = profile;
        honest_profile[a] = truth;
        report.witness = ManipulationWitness{a, truth, lie, honest_value, got,
                                             std::move(honest_profile)};
        return report;
      }
    }
    profile[a] = truth;
  }
  return report;
}

// For each agent and each fixed report vector of the others, the mechanism's
// bundle for every possible report of that agent is computed once. Every
// (truth, lie) pair is then compared on those bundles. Search order is agent,
// then the others' reports in ascending mixed-radix order (lowest agent
// fastest), then truth, then lie.
AuditReport audit_sp_exhaustive(const Instance& inst, const Mechanism& mechanism,
                                const SearchBudget& budget) {
  check_budget(budget);
  const std::size_t n = inst.num_agents(), m = inst.num_goods();
  if (m > budget.max_goods || m * n > kMaxExhaustiveBits) {
    throw Error(Errc::kInstanceTooLarge,
                "exhaustive audit over " + std::to_string(n) + " agents and " +
                    std::to_string(m) + " goods is too large");
  }
  const std::uint64_t subsets = std::uint64_t{1} << m;
  std::vector<Value> subset_cost(subsets);
  for (std::uint64_t s = 0; s < subsets; ++s) subset_cost[s] = inst.cost(GoodSet::from_bits(s));

  AuditReport report;
  std::vector<GoodSet> profile(n);
  std::vector<std::uint64_t> received(subsets);
  const std::uint64_t others_count = std::uint64_t{1} << (m * (n - 1));
  for (AgentIndex a = 0; a < n; ++a) {
    for (std::uint64_t code = 0; code < others_count; ++code) {
      std::uint64_t rest = code;
      for (AgentIndex b = 0; b < n; ++b) {
        if (b == a) continue;
        profile[b] = GoodSet::from_bits(rest & (subsets - 1));
        rest >>= m;
      }
      GoodSet others;
      for (AgentIndex b = 0; b < n; ++b) {
        if (b != a) others |= profile[b];
      }
      for (std::uint64_t r = 0; r < subsets; ++r) {
        profile[a] = GoodSet::from_bits(r);
        received[r] = mechanism(inst, profile).bundles[a].bits() & (others.bits() | r);
      }
      for (std::uint64_t truth = 0; truth < subsets; ++truth) {
        const Value honest_value = subset_cost[received[truth] & truth];
        for (std::uint64_t lie = 0; lie < subsets; ++lie) {
          if (lie == truth) continue;
          ++report.deviations_checked;
          const Value got = subset_cost[received[lie] & truth];
          if (got > honest_value) {
            profile[a] = GoodSet::from_bits(truth);
            report.strategyproof = false;
            report.witness = ManipulationWitness{a,
                                                 GoodSet::from_bits(truth),
                                                 GoodSet::from_bits(lie),
                                                 honest_value,
                                                 got,
                                                 profile};
            return report;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace costmms
