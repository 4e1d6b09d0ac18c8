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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "costmms/error.hpp"
#include "costmms/generate.hpp"
#include "costmms/laminar.hpp"
#include "costmms/mechanisms.hpp"
#include "costmms/oracle.hpp"
#include "costmms/strategy.hpp"
#include "costmms/three_agent.hpp"

namespace costmms {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

// Goods g1..gm with the given costs; approvals as bitmasks over canonical order.
Instance with_costs(const std::vector<std::int64_t>& costs, std::size_t n) {
  RawInstance raw;
  for (std::size_t g = 0; g < costs.size(); ++g) {
    raw.goods.push_back(RawGood{"g" + std::to_string(g + 1), costs[g]});
  }
  for (std::size_t a = 0; a < n; ++a) raw.agents.push_back(RawAgent{"a" + std::to_string(a + 1), {}});
  return Instance::validate(raw);
}

// Every non-decreasing sequence of length m over `values`.
std::vector<std::vector<std::int64_t>> multisets(const std::vector<std::int64_t>& values,
                                                 std::size_t m) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (cur.size() == m) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = from; i < values.size(); ++i) {
      cur.push_back(values[i]);
      rec(i);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

bool mms_po(const Instance& inst, const Allocation& alloc, const SearchBudget& budget) {
  const MmsProfile profile = mms_profile(inst, budget);
  return verify_mms(inst, alloc, profile).satisfied && is_pareto_efficient(inst, alloc).efficient;
}

GoodSet digits(std::string_view text) {
  GoodSet s;
  for (char ch : text) s.insert(static_cast<std::size_t>(ch - '2'));
  return s;
}

Outcome criterion1() {
  const SearchBudget budget;
  const Instance inst = with_costs({2, 3, 4, 5, 6}, 2).with_approvals(
      std::vector<GoodSet>{GoodSet::prefix(5), GoodSet::prefix(5)});
  const MaximinResult r = mms_value(inst, 0, 2, budget);
  std::vector<GoodSet> expected = {GoodSet::from_bits(0b01011), GoodSet::from_bits(0b10100)};
  std::vector<GoodSet> got = r.bundles;
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  const bool ok = r.value == 10 && got == expected;
  return {ok, "mms_value = " + std::to_string(r.value) + ", witness {2,3,5}{4,6}: " +
                  (got == expected ? "yes" : "no")};
}

Outcome criterion2() {
  const SearchBudget budget;
  static constexpr std::array<double, 3> kDensity = {0.3, 0.6, 1.0};
  std::size_t passed = 0;
  const std::size_t total = 10000;
  for (std::size_t t = 0; t < total; ++t) {
    Rng rng(derive_seed(2, t));
    const std::size_t m = rng.uniform(0, 8);
    const Instance inst = gen_random(3, m, 20, kDensity[t % 3], rng.next());
    if (mms_po(inst, solve_three(inst, budget), budget)) ++passed;
  }
  return {passed == total, std::to_string(passed) + "/" + std::to_string(total) + " MMS and PO"};
}

Outcome criterion3() {
  const SearchBudget budget;
  std::size_t passed = 0;
  const std::size_t total = 10000;
  for (std::size_t t = 0; t < total; ++t) {
    Rng rng(derive_seed(3, t));
    const std::size_t n = rng.uniform(1, 5), m = rng.uniform(0, 10), depth = rng.uniform(1, 4);
    const Instance inst = gen_laminar(n, m, 20, depth, rng.next());
    if (mms_po(inst, pareto_repair(inst, solve_laminar(inst, budget)), budget)) ++passed;
  }
  return {passed == total, std::to_string(passed) + "/" + std::to_string(total) + " MMS and PO"};
}

Outcome criterion4() {
  const SearchBudget budget;
  const Mechanism mech = prop2_mechanism();
  std::uint64_t profiles = 0, failures = 0, deviations = 0, witnesses = 0, instances = 0;
  for (std::size_t n : {2, 3}) {
    const std::size_t m = n + 2;
    const std::uint64_t subsets = std::uint64_t{1} << m;
    for (const auto& costs : multisets({1, 2, 3, 5}, m)) {
      const Instance goods = with_costs(costs, n);
      ++instances;
      std::vector<Value> share(subsets);
      for (std::uint64_t s = 0; s < subsets; ++s) {
        share[s] = maximin_partition(goods, GoodSet::from_bits(s), n, budget).value;
      }
      std::vector<GoodSet> profile(n);
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (m * n)); ++code) {
        for (std::size_t a = 0; a < n; ++a) {
          profile[a] = GoodSet::from_bits((code >> (a * m)) & (subsets - 1));
        }
        const Instance inst = goods.with_approvals(profile);
        const Allocation alloc = mech(inst, profile);
        bool ok = is_pareto_efficient(inst, alloc).efficient;
        for (std::size_t a = 0; a < n; ++a) {
          ok = ok && inst.value(a, alloc.bundles[a]) >= share[profile[a].bits()];
        }
        ++profiles;
        if (!ok) ++failures;
      }
      const AuditReport audit = audit_sp_exhaustive(goods, mech, budget);
      deviations += audit.deviations_checked;
      if (!audit.strategyproof) ++witnesses;
    }
  }
  return {failures == 0 && witnesses == 0,
          std::to_string(instances) + " cost multisets, " + std::to_string(profiles) +
              " profiles, " + std::to_string(failures) + " MMS/PO failures, " +
              std::to_string(deviations) + " deviations, " + std::to_string(witnesses) +
              " manipulable multisets"};
}

Outcome criterion5() {
  const SearchBudget budget;
  const Mechanism mech = prop1_mechanism();
  std::size_t witnesses = 0, not_po = 0;
  std::uint64_t deviations = 0;
  const std::size_t total = 500;
  for (std::size_t t = 0; t < total; ++t) {
    Rng rng(derive_seed(5, t));
    const std::size_t n = rng.uniform(1, 3), m = rng.uniform(0, 6);
    const double density = static_cast<double>(rng.uniform(0, 10)) / 10.0;
    const Instance inst = gen_random(n, m, 10, density, rng.next());
    const AuditReport audit = audit_sp(inst, mech, MisreportScope::all(), budget);
    deviations += audit.deviations_checked;
    if (!audit.strategyproof) ++witnesses;
    if (!is_pareto_efficient(inst, mech(inst, inst.approval_profile())).efficient) ++not_po;
  }
  return {witnesses == 0 && not_po == 0,
          std::to_string(total) + " instances, " + std::to_string(deviations) +
              " misreports, " + std::to_string(witnesses) + " witnesses, " +
              std::to_string(not_po) + " not PO"};
}

// Every admissible allocation, restricted to what each agent approves at that
// step, equals the expected pair of digit strings.
bool pinned(const AxiomChainStep& step, const char* first, const char* second) {
  if (step.admissible.empty()) return false;
  return std::all_of(step.admissible.begin(), step.admissible.end(), [&](const Allocation& x) {
    return (x.bundles[0] & step.profile[0]) == digits(first) &&
           (x.bundles[1] & step.profile[1]) == digits(second);
  });
}

Outcome criterion6() {
  const Prop3Certificate cert = replicate_prop3();
  const ChainBranch& a = cert.branches.at(0);
  const ChainBranch& b = cert.branches.at(1);
  const bool rows = pinned(a.steps[0], "235", "46") && pinned(b.steps[0], "46", "235") &&
                    pinned(a.steps[2], "36", "45") && pinned(a.steps[3], "6", "45") &&
                    pinned(a.steps[4], "236", "45") && pinned(b.steps[2], "45", "36") &&
                    pinned(b.steps[3], "45", "6") && pinned(b.steps[4], "45", "236");
  return {cert.unsatisfiable && rows,
          std::string(cert.unsatisfiable ? "UNSAT certified" : "not certified") + ", " +
              std::to_string(cert.consistent_assignments) + " consistent assignments over " +
              std::to_string(cert.family.size()) + " profiles, table rows " +
              (rows ? "match" : "differ")};
}

Outcome criterion7() {
  const SearchBudget budget;
  std::size_t held = 0;
  const std::size_t total = 1000;
  for (std::size_t t = 0; t < total; ++t) {
    Rng rng(derive_seed(7, t));
    const std::size_t n = rng.uniform(2, 4);
    const Instance base = gen_random(n, rng.uniform(0, 7), 20, 0.6, rng.next());
    const AgentIndex i = rng.uniform(0, n - 1);
    RawInstance raw = base.to_raw();
    const std::size_t extra = rng.uniform(1, 3);
    Value added = 0;
    for (std::size_t e = 0; e < extra; ++e) {
      const auto cost = static_cast<std::int64_t>(rng.uniform(0, 20));
      raw.goods.push_back(RawGood{"s" + std::to_string(e + 1), cost});
      raw.agents[i].approves.push_back(raw.goods.back().id);
      added += static_cast<Value>(cost);
    }
    const Instance grown = Instance::validate(raw);
    const Value before = mms_value(base, i, n, budget).value;
    const Value after = mms_value(grown, i, n, budget).value;
    if (before <= after && after <= before + added) ++held;
  }
  return {held == total, std::to_string(held) + "/" + std::to_string(total) + " pairs"};
}

Outcome criterion8() {
  const SearchBudget budget;
  std::size_t ok = 0;
  const std::size_t total = 1000;
  for (std::size_t t = 0; t < total; ++t) {
    Rng rng(derive_seed(8, t));
    const double density = static_cast<double>(rng.uniform(3, 10)) / 10.0;
    const Instance inst = reduce_singletons(gen_random(3, rng.uniform(0, 8), 20, density, rng.next())).reduced;
    std::array<GoodSet, 3> approvals{};
    for (AgentIndex a = 0; a < 3; ++a) approvals[a] = inst.approvals(a);
    std::array<Value, 3> q{};
    for (AgentIndex a = 0; a < 3; ++a) {
      const GoodSet other_pair = exclusive_pair(approvals, (a + 1) % 3, (a + 2) % 3);
      q[a] = mms_value(inst, a, 3, budget).value + maximin_partition(inst, other_pair, 2, budget).value;
    }
    std::array<AgentIndex, 3> order = {0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](AgentIndex x, AgentIndex y) { return q[x] > q[y]; });
    std::array<GoodSet, 3> role{};
    for (std::size_t r = 0; r < 3; ++r) role[r] = approvals[order[r]];
    const GoodSet a12 = exclusive_pair(role, 0, 1), a13 = exclusive_pair(role, 0, 2);
    const MaximinResult split = maximin_partition(inst, role[0], 3, budget);
    const std::array<GoodSet, 3> s = {split.bundles[0], split.bundles[1], split.bundles[2]};
    try {
      lemma2_select(inst, s, a12, a13, maximin_partition(inst, a12, 2, budget).value,
                    maximin_partition(inst, a13, 2, budget).value);
      ++ok;
    } catch (const Error& e) {
      if (e.code() != Errc::kSelectionImpossible) throw;
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " selections found"};
}

Outcome criterion9() {
  const SearchBudget budget;
  std::size_t applicable = 0, sound = 0;
  for (std::size_t n : {3, 4}) {
    const std::size_t m = n + 2;
    for (const auto& costs : multisets({1, 2, 3, 5}, m)) {
      const Instance goods = with_costs(costs, n);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<GoodSet> profile(n);
        profile[0] = GoodSet::from_bits(mask);
        const Instance inst = goods.with_approvals(profile);
        Value bound = 0;
        try {
          bound = lemma4_bound(inst, 0);
        } catch (const Error& e) {
          if (e.code() != Errc::kTooFewApprovals && e.code() != Errc::kDegenerateRank) throw;
          continue;
        }
        ++applicable;
        if (bound >= mms_value(inst, 0, n, budget).value) ++sound;
      }
    }
  }
  return {sound == applicable && applicable > 0,
          std::to_string(sound) + "/" + std::to_string(applicable) + " applicable cases"};
}

Outcome criterion10() {
  const SearchBudget budget;
  std::size_t ok = 0;
  const std::size_t total = 500;
  for (std::size_t t = 0; t < total; ++t) {
    Rng rng(derive_seed(10, t));
    const std::size_t n = rng.uniform(1, 4), m = rng.uniform(0, 8);
    const Instance inst = gen_random(n, m, 20, static_cast<double>(rng.uniform(2, 10)) / 10.0, rng.next());
    Allocation alloc = empty_allocation(n);
    for (GoodIndex g = 0; g < m; ++g) alloc.bundles[rng.uniform(0, n - 1)].insert(g);
    const MmsProfile base = mms_profile(inst, budget);
    const bool verdict = verify_mms(inst, alloc, base).satisfied;
    bool same = true;
    for (std::int64_t lambda : {2, 7}) {
      RawInstance raw = inst.to_raw();
      for (RawGood& g : raw.goods) g.cost *= lambda;
      const Instance scaled = Instance::validate(raw);
      const MmsProfile p = mms_profile(scaled, budget);
      for (AgentIndex a = 0; a < n; ++a) {
        same = same && p.values[a] == base.values[a] * static_cast<Value>(lambda);
      }
      same = same && verify_mms(scaled, alloc, p).satisfied == verdict;
    }
    if (same) ++ok;
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " instances"};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  Outcome (*run)();
};

}  // namespace
}  // namespace costmms

int main() {
  using namespace costmms;
  const Criterion criteria[] = {
      {1, "oracle ground truth", 1, criterion1},
      {2, "three-agent MMS+PO at scale", 300, criterion2},
      {3, "laminar MMS+PO at scale", 600, criterion3},
      {4, "n+2 mechanism exhaustive", 900, criterion4},
      {5, "picking mechanism strategyproofness", 600, criterion5},
      {6, "impossibility replication", 60, criterion6},
      {7, "single-agent goods sandwich", 0, criterion7},
      {8, "pair selection existence", 0, criterion8},
      {9, "n+2 bound soundness", 0, criterion9},
      {10, "scale invariance", 0, criterion10},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    const bool in_time = c.limit_seconds <= 0 || secs < c.limit_seconds;
    const bool pass = out.pass && in_time;
    if (!pass) ++failed;
    std::printf("[%s] criterion %2d %-36s %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), secs,
                c.limit_seconds > 0 ? (in_time ? ", within limit" : ", OVER LIMIT") : "");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed,
              std::size(criteria));
  return failed == 0 ? 0 : 1;
}
