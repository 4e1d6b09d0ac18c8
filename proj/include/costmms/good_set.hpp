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

#ifndef COSTMMS_GOOD_SET_HPP_
#define COSTMMS_GOOD_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>

namespace costmms {

/// A set of goods, addressed by their position in an instance's canonical
/// (cost, id) order. Bit g is good g, so the highest member is also the
/// highest-cost member with ties resolved toward the larger id.
class GoodSet {
 public:
  static constexpr std::size_t kCapacity = 64;

  constexpr GoodSet() = default;

  static constexpr GoodSet from_bits(std::uint64_t bits) {
    GoodSet s;
    s.bits_ = bits;
    return s;
  }

  /// {0, 1, ..., count-1}.
  static constexpr GoodSet prefix(std::size_t count) {
    return from_bits(count >= kCapacity ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << count) - 1);
  }

  static constexpr GoodSet single(std::size_t good) {
    return from_bits(std::uint64_t{1} << good);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(std::size_t good) const {
    return (bits_ >> good) & 1U;
  }
  constexpr void insert(std::size_t good) { bits_ |= std::uint64_t{1} << good; }
  constexpr void erase(std::size_t good) { bits_ &= ~(std::uint64_t{1} << good); }

  constexpr bool subset_of(GoodSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool disjoint(GoodSet other) const {
    return (bits_ & other.bits_) == 0;
  }

  /// Highest member; undefined on the empty set.
  constexpr std::size_t highest() const {
    return kCapacity - 1 - static_cast<std::size_t>(std::countl_zero(bits_));
  }

  constexpr GoodSet operator|(GoodSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr GoodSet operator&(GoodSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr GoodSet operator-(GoodSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr GoodSet& operator|=(GoodSet o) { bits_ |= o.bits_; return *this; }
  constexpr GoodSet& operator&=(GoodSet o) { bits_ &= o.bits_; return *this; }
  constexpr GoodSet& operator-=(GoodSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const GoodSet&) const = default;
  constexpr auto operator<=>(const GoodSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = std::size_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr std::size_t operator*() const {
      return static_cast<std::size_t>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  /// Ascending canonical order.
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace costmms

#endif  // COSTMMS_GOOD_SET_HPP_
