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

#include <doctest.h>

#include "brute_force.hpp"
#include "costmms/error.hpp"
#include "costmms/generate.hpp"
#include "costmms/json_io.hpp"
#include "test_util.hpp"

namespace costmms {
namespace {

using testing::goods;
using testing::make_instance;

Errc error_of(const RawInstance& raw) {
  try {
    Instance::validate(raw);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::kInternal;
}

TEST_CASE("validate sorts goods by cost then id") {
  RawInstance sorted{{{"a", 2}, {"b", 3}}, {{"1", {"a", "b"}}}};
  const Instance x = Instance::validate(sorted);
  CHECK(x.good(0).id == "a");
  CHECK(x.good(1).id == "b");

  RawInstance swapped{{{"a", 3}, {"b", 2}}, {{"1", {"a"}}}};
  const Instance y = Instance::validate(swapped);
  CHECK(y.good(0).id == "b");
  CHECK(y.good(1).id == "a");
  CHECK(y.approvals(0) == GoodSet::single(1));

  RawInstance tie{{{"z", 4}, {"c", 4}, {"m", 1}}, {{"1", {}}}};
  const Instance t = Instance::validate(tie);
  CHECK(t.good(0).id == "m");
  CHECK(t.good(1).id == "c");
  CHECK(t.good(2).id == "z");
}

TEST_CASE("validate rejects malformed instances") {
  CHECK(error_of({{{"a", -1}}, {{"1", {}}}}) == Errc::kNegativeCost);
  CHECK(error_of({{{"a", 1}, {"a", 2}}, {{"1", {}}}}) == Errc::kDuplicateGoodId);
  CHECK(error_of({{{"a", 1}}, {{"1", {"b"}}}}) == Errc::kUnknownGoodInApproval);
  CHECK(error_of({{{"a", 1}}, {}}) == Errc::kEmptyAgentList);
  CHECK(error_of({{{"a", 1}}, {{"1", {}}, {"1", {}}}}) == Errc::kDuplicateAgentId);
  RawInstance big;
  for (int g = 0; g < 65; ++g) big.goods.push_back({"g" + std::to_string(g), 1});
  big.agents = {{"1", {}}};
  CHECK(error_of(big) == Errc::kTooManyGoods);
}

TEST_CASE("canonicalization is idempotent") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance once = gen_random(3, 7, 5, 0.5, seed);
    const Instance twice = Instance::validate(once.to_raw());
    CHECK(dump_instance(once) == dump_instance(twice));
  }
}

TEST_CASE("bundle values") {
  const Instance inst = make_instance({2, 3}, {{1}});
  const std::vector<std::string> both = {"g1", "g2"};
  CHECK(bundle_value(inst, 0, both) == 2);
  CHECK(bundle_value(inst, 0, std::vector<std::string>{}) == 0);
  CHECK_THROWS_AS(bundle_value(inst, 0, std::vector<std::string>{"nope"}), Error);

  const Instance five = make_instance({2, 3, 4, 5, 6}, {testing::all_of(5)});
  CHECK(bundle_value(five, 0, std::vector<std::string>{"g3", "g5"}) == 10);
}

TEST_CASE("values are additive and agent independent on shared approvals") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = gen_random(3, 8, 9, 0.6, seed);
    Rng rng(seed);
    const GoodSet s = GoodSet::from_bits(rng.next()) & inst.all_goods();
    const GoodSet t = (GoodSet::from_bits(rng.next()) & inst.all_goods()) - s;
    for (AgentIndex a = 0; a < 3; ++a) {
      CHECK(inst.value(a, s | t) == inst.value(a, s) + inst.value(a, t));
    }
    const GoodSet common = inst.approvals(0) & inst.approvals(1);
    CHECK(inst.value(0, common) == inst.value(1, common));
  }
}

TEST_CASE("allocation checks") {
  const Instance inst = make_instance({1, 2}, {{1}, {2}});
  CHECK_NOTHROW(check_allocation(inst, Allocation{{GoodSet::single(0), GoodSet::single(1)}}));
  CHECK_THROWS_AS(check_allocation(inst, Allocation{{GoodSet::single(0), GoodSet{}}}), Error);
  CHECK_THROWS_AS(check_allocation(inst, Allocation{{GoodSet::prefix(2), GoodSet::single(1)}}),
                  Error);
  CHECK_THROWS_AS(check_allocation(inst, Allocation{{GoodSet::prefix(2)}}), Error);

  const Instance loose = make_instance({1, 2, 3}, {{2}, {}});
  Allocation alloc = empty_allocation(2);
  alloc.bundles[1].insert(1);
  assign_unapproved(loose, alloc);
  CHECK(alloc.bundles[0] == (GoodSet::single(0) | GoodSet::single(2)));
}

TEST_CASE("Pareto efficiency examples") {
  const Instance one = make_instance({1}, {{1}});
  CHECK(is_pareto_efficient(one, Allocation{{GoodSet::single(0)}}).efficient);

  const Instance two = make_instance({1}, {{1}, {}});
  const ParetoReport bad = is_pareto_efficient(two, Allocation{{GoodSet{}, GoodSet::single(0)}});
  CHECK_FALSE(bad.efficient);
  REQUIRE(bad.witness);
  CHECK(*bad.witness == 0);

  // Goods g2..g6 cost 2..6; approvals (3456)(456), allocation (36)(245).
  const Instance row = make_instance({2, 3, 4, 5, 6}, {{2, 3, 4, 5}, {3, 4, 5}});
  const Allocation alloc{{goods(row, {"g2", "g5"}), goods(row, {"g1", "g3", "g4"})}};
  CHECK(is_pareto_efficient(row, alloc).efficient);
}

TEST_CASE("approver coverage matches brute-force Pareto search") {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    Rng rng(seed);
    const std::size_t n = rng.uniform(1, 3), m = rng.uniform(0, 6);
    const Instance inst = gen_random(n, m, 4, 0.5, rng.next());
    Allocation alloc = empty_allocation(n);
    for (GoodIndex g = 0; g < m; ++g) alloc.bundles[rng.uniform(0, n - 1)].insert(g);
    const bool efficient = is_pareto_efficient(inst, alloc).efficient;
    CHECK(efficient == !testing::brute_pareto_improvable(inst, alloc));
    ++checked;
  }
  CHECK(checked == 400);
}

}  // namespace
}  // namespace costmms
