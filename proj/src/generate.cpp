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

#include "costmms/generate.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "costmms/error.hpp"

namespace costmms {
namespace {

constexpr std::size_t kMaxGoods = 64;

void check_common(std::size_t n, std::size_t m, std::uint64_t max_cost) {
  if (n == 0) throw Error(Errc::kInvalidParameter, "need at least one agent");
  if (m > kMaxGoods) throw Error(Errc::kInvalidParameter, "at most 64 goods are supported");
  if (max_cost > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) / kMaxGoods) {
    throw Error(Errc::kInvalidParameter, "max_cost is too large");
  }
}

RawInstance random_goods(Rng& rng, std::size_t n, std::size_t m, std::uint64_t max_cost) {
  RawInstance raw;
  for (std::size_t g = 0; g < m; ++g) {
    raw.goods.push_back(
        RawGood{"g" + std::to_string(g + 1), static_cast<std::int64_t>(rng.uniform(0, max_cost))});
  }
  for (std::size_t a = 0; a < n; ++a) raw.agents.push_back(RawAgent{"a" + std::to_string(a + 1), {}});
  return raw;
}

// Splits `items` into between 1 (or 2 when `proper`) and 3 nonempty parts.
std::vector<std::vector<std::size_t>> split(Rng& rng, std::vector<std::size_t> items, bool proper) {
  rng.shuffle(items);
  const std::size_t most = std::min<std::size_t>(items.size(), 3);
  const std::size_t parts = rng.uniform(proper ? 2 : 1, most);
  std::vector<std::size_t> cuts;
  for (std::size_t i = 1; i < items.size(); ++i) cuts.push_back(i);
  rng.shuffle(cuts);
  cuts.resize(parts - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(items.size());
  std::vector<std::vector<std::size_t>> out;
  std::size_t start = 0;
  for (std::size_t end : cuts) {
    out.emplace_back(items.begin() + start, items.begin() + end);
    start = end;
  }
  return out;
}

void grow(Rng& rng, const std::vector<std::size_t>& items, std::size_t level, std::size_t depth,
          std::vector<std::vector<std::size_t>>& nodes) {
  nodes.push_back(items);
  if (level >= depth || items.size() < 2) return;
  for (auto& child : split(rng, items, true)) grow(rng, child, level + 1, depth, nodes);
}

}  // namespace

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  if (lo >= hi) return lo;
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return next();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + x % range;
}

bool Rng::bernoulli(double p) {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return u < p;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Instance gen_random(std::size_t n, std::size_t m, std::uint64_t max_cost, double density,
                    std::uint64_t seed) {
  check_common(n, m, max_cost);
  if (!(density >= 0.0 && density <= 1.0)) {
    throw Error(Errc::kInvalidParameter, "density must lie in [0, 1]");
  }
  Rng rng(seed);
  RawInstance raw = random_goods(rng, n, m, max_cost);
  for (RawAgent& agent : raw.agents) {
    for (const RawGood& g : raw.goods) {
      if (rng.bernoulli(density)) agent.approves.push_back(g.id);
    }
  }
  return Instance::validate(raw);
}

Instance gen_laminar(std::size_t n, std::size_t m, std::uint64_t max_cost, std::size_t depth,
                     std::uint64_t seed) {
  check_common(n, m, max_cost);
  if (depth == 0) throw Error(Errc::kInvalidParameter, "depth must be at least 1");
  Rng rng(seed);
  RawInstance raw = random_goods(rng, n, m, max_cost);
  std::vector<std::vector<std::size_t>> nodes;
  if (m > 0) {
    std::vector<std::size_t> all(m);
    for (std::size_t g = 0; g < m; ++g) all[g] = g;
    for (auto& root : split(rng, all, false)) grow(rng, root, 1, depth, nodes);
  }
  for (RawAgent& agent : raw.agents) {
    if (nodes.empty()) break;
    const auto& node = nodes[rng.uniform(0, nodes.size() - 1)];
    for (std::size_t g : node) agent.approves.push_back(raw.goods[g].id);
  }
  return Instance::validate(raw);
}

}  // namespace costmms
