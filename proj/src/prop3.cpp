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

// Two agents, goods g2..g6 with c(g_i) = i. Starting from both agents
// approving everything, each later profile changes one agent's report. Every
// allocation mechanism restricted to these profiles is an assignment of one
// allocation per profile; the search below shows none is MMS, Pareto
// efficient and strategyproof at once.
//
// Assuming agent 1 gets {g2,g3,g5} at the start, the six table rows force a
// contradiction. The mirrored rows (agents swapped) do the same for the
// other bundling, so both are part of the searched family.

#include <algorithm>
#include <string>

#include "costmms/error.hpp"
#include "costmms/strategy.hpp"

namespace costmms {
namespace {

Instance base_instance() {
  RawInstance raw;
  for (int c = 2; c <= 6; ++c) raw.goods.push_back(RawGood{"g" + std::to_string(c), c});
  raw.agents = {RawAgent{"a1", {}}, RawAgent{"a2", {}}};
  return Instance::validate(raw);
}

// "2356" -> {g2, g3, g5, g6}. Costs equal the digit, and goods are sorted by
// cost, so digit d is good d - 2.
GoodSet digits(std::string_view text) {
  GoodSet s;
  for (char ch : text) s.insert(static_cast<std::size_t>(ch - '2'));
  return s;
}

using Profile = std::vector<GoodSet>;

bool differ_in_one(const Profile& p, const Profile& q, AgentIndex& who) {
  std::size_t diffs = 0;
  for (AgentIndex a = 0; a < p.size(); ++a) {
    if (p[a] != q[a]) {
      ++diffs;
      who = a;
    }
  }
  return diffs == 1;
}

// Neither agent gains by switching between the two reports: the agent whose
// report differs must weakly prefer, under each true report, the outcome of
// reporting truthfully.
bool sp_consistent(const Instance& inst, const Profile& p, const Allocation& x,
                   const Profile& q, const Allocation& y) {
  AgentIndex a = 0;
  if (p == q) return x == y;
  if (!differ_in_one(p, q, a)) return true;
  const Value px = manipulation_value(inst, x.bundles[a], p[a], p);
  const Value py = manipulation_value(inst, y.bundles[a], p[a], q);
  const Value qx = manipulation_value(inst, x.bundles[a], q[a], p);
  const Value qy = manipulation_value(inst, y.bundles[a], q[a], q);
  return px >= py && qy >= qx;
}

std::vector<Allocation> mms_po_allocations(const Instance& goods, const Profile& profile) {
  const Instance inst = goods.with_approvals(profile);
  const MmsProfile mms = mms_profile(inst, SearchBudget{});
  std::vector<Allocation> out;
  const std::uint64_t all = inst.all_goods().bits();
  const std::uint64_t loose = (inst.all_goods() - inst.approved_by_anyone()).bits();
  for (std::uint64_t first = 0; first <= all; ++first) {
    if ((first & loose) != loose) continue;  // unapproved goods go to agent 0
    Allocation alloc{{GoodSet::from_bits(first), GoodSet::from_bits(all & ~first)}};
    if (verify_mms(inst, alloc, mms).satisfied && is_pareto_efficient(inst, alloc).efficient) {
      out.push_back(std::move(alloc));
    }
  }
  return out;
}

Profile swapped(const Profile& p) { return Profile{p[1], p[0]}; }

ChainBranch build_branch(const Instance& inst, bool mirror) {
  struct Row {
    const char* label;
    const char* first;
    const char* second;
  };
  static constexpr Row kRows[] = {
      {"I1", "23456", "23456"}, {"I2", "23456", "456"}, {"I3", "3456", "456"},
      {"I4", "6", "456"},       {"I5", "236", "456"},   {"I6", "23456", "456"},
  };
  ChainBranch branch;
  branch.name = mirror ? "agent 2 receives {g2,g3,g5} in I1 (mirrored rows)"
                       : "agent 1 receives {g2,g3,g5} in I1";
  for (std::size_t t = 0; t < std::size(kRows); ++t) {
    AxiomChainStep step;
    step.label = std::string(kRows[t].label) + (mirror ? "'" : "");
    step.profile = {digits(kRows[t].first), digits(kRows[t].second)};
    if (mirror) step.profile = swapped(step.profile);
    if (t > 0) step.linked_to = t - 1;
    if (t == 5) step.same_as = 1;
    step.base = mms_po_allocations(inst, step.profile);
    branch.steps.push_back(std::move(step));
  }

  // The branch assumption fixes I1.
  const GoodSet low = digits("235");
  for (const Allocation& a : branch.steps[0].base) {
    if (a.bundles[mirror ? 1 : 0] == low) branch.steps[0].admissible.push_back(a);
  }

  for (std::size_t t = 1; t < branch.steps.size(); ++t) {
    AxiomChainStep& step = branch.steps[t];
    const AxiomChainStep& prev = branch.steps[*step.linked_to];
    for (const Allocation& x : step.base) {
      bool supported = std::any_of(prev.admissible.begin(), prev.admissible.end(),
                                   [&](const Allocation& y) {
                                     return sp_consistent(inst, step.profile, x, prev.profile, y);
                                   });
      if (supported && step.same_as) {
        const auto& same = branch.steps[*step.same_as].admissible;
        supported = std::find(same.begin(), same.end(), x) != same.end();
      }
      if (supported) step.admissible.push_back(x);
    }
  }
  branch.contradiction = std::any_of(branch.steps.begin(), branch.steps.end(),
                                     [](const AxiomChainStep& s) { return s.admissible.empty(); });
  return branch;
}

// Counts assignments of one base allocation per profile that satisfy every
// pairwise strategyproofness constraint.
class FamilySearch {
 public:
  FamilySearch(const Instance& inst, std::vector<Profile> profiles)
      : inst_(inst), profiles_(std::move(profiles)) {
    for (const Profile& p : profiles_) base_.push_back(mms_po_allocations(inst_, p));
    chosen_.resize(profiles_.size());
  }

  std::uint64_t count() {
    recurse(0);
    return solutions_;
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::vector<Allocation>>& base() const { return base_; }

 private:
  void recurse(std::size_t depth) {
    ++nodes_;
    if (depth == profiles_.size()) {
      ++solutions_;
      return;
    }
    for (const Allocation& x : base_[depth]) {
      bool ok = true;
      for (std::size_t e = 0; e < depth && ok; ++e) {
        ok = sp_consistent(inst_, profiles_[depth], x, profiles_[e], *chosen_[e]);
      }
      if (!ok) continue;
      chosen_[depth] = &x;
      recurse(depth + 1);
    }
  }

  const Instance& inst_;
  std::vector<Profile> profiles_;
  std::vector<std::vector<Allocation>> base_;
  std::vector<const Allocation*> chosen_;
  std::uint64_t nodes_ = 0;
  std::uint64_t solutions_ = 0;
};

void add_distinct(std::vector<Profile>& family, const Profile& p) {
  if (std::find(family.begin(), family.end(), p) == family.end()) family.push_back(p);
}

}  // namespace

Prop3Certificate replicate_prop3() {
  Prop3Certificate cert{base_instance(), {}, {}, {}, 0, 0, 0, false};
  cert.branches.push_back(build_branch(cert.instance, false));
  cert.branches.push_back(build_branch(cert.instance, true));

  std::vector<Profile> literal;
  for (const AxiomChainStep& s : cert.branches[0].steps) add_distinct(literal, s.profile);
  FamilySearch literal_search(cert.instance, literal);
  cert.literal_table_assignments = literal_search.count();

  for (const ChainBranch& b : cert.branches) {
    for (const AxiomChainStep& s : b.steps) add_distinct(cert.family, s.profile);
  }
  FamilySearch search(cert.instance, cert.family);
  cert.consistent_assignments = search.count();
  cert.search_nodes = search.nodes();
  for (const auto& b : search.base()) cert.family_base_sizes.push_back(b.size());

  cert.unsatisfiable = cert.consistent_assignments == 0 &&
                       std::all_of(cert.branches.begin(), cert.branches.end(),
                                   [](const ChainBranch& b) { return b.contradiction; });
  return cert;
}

}  // namespace costmms
