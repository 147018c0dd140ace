// Copyright 2026 The Authors.
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

#ifndef MATROID_SUBSET_MASK_H_
#define MATROID_SUBSET_MASK_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace matroid {

// Hard width of a subset mask. Ground sets are indexed 0..n-1 with n <= 24 so
// that 2^n enumeration and all masks fit a single machine word.
inline constexpr int kMaxElements = 24;

// Characteristic vector of a subset of the ground set {0, ..., n-1}.
// Bit j set means element j is present.
class SubsetMask {
 public:
  using Word = std::uint32_t;

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(Word bits) : bits_(bits) {}

  static constexpr SubsetMask Full(int n) {
    return SubsetMask(n <= 0 ? Word{0} : (Word{1} << n) - 1);
  }
  static constexpr SubsetMask Singleton(int e) {
    return SubsetMask(Word{1} << e);
  }
  static SubsetMask Of(std::initializer_list<int> elements) {
    SubsetMask m;
    for (int e : elements) m = m.with(e);
    return m;
  }

  constexpr Word bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool subset_of(SubsetMask o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  constexpr bool proper_subset_of(SubsetMask o) const {
    return subset_of(o) && bits_ != o.bits_;
  }
  constexpr bool intersects(SubsetMask o) const {
    return (bits_ & o.bits_) != 0;
  }
  constexpr bool fits(int n) const { return (bits_ & ~Full(n).bits_) == 0; }

  constexpr SubsetMask with(int e) const {
    return SubsetMask(bits_ | (Word{1} << e));
  }
  constexpr SubsetMask without(int e) const {
    return SubsetMask(bits_ & ~(Word{1} << e));
  }
  // Lowest element; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(bits_); }
  constexpr int highest() const { return 31 - std::countl_zero(bits_); }

  constexpr SubsetMask operator|(SubsetMask o) const {
    return SubsetMask(bits_ | o.bits_);
  }
  constexpr SubsetMask operator&(SubsetMask o) const {
    return SubsetMask(bits_ & o.bits_);
  }
  // Set difference.
  constexpr SubsetMask operator-(SubsetMask o) const {
    return SubsetMask(bits_ & ~o.bits_);
  }
  constexpr SubsetMask& operator|=(SubsetMask o) { return *this = *this | o; }
  constexpr SubsetMask& operator&=(SubsetMask o) { return *this = *this & o; }
  constexpr SubsetMask& operator-=(SubsetMask o) { return *this = *this - o; }

  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  friend constexpr auto operator<=>(SubsetMask a, SubsetMask b) {
    return a.bits_ <=> b.bits_;
  }

  class Iterator {
   public:
    constexpr explicit Iterator(Word rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    friend constexpr bool operator==(Iterator, Iterator) = default;

   private:
    Word rest_;
  };
  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (int e : *this) out.push_back(e);
    return out;
  }

 private:
  Word bits_ = 0;
};

// Canonical set order: by cardinality, then by numeric mask value.
inline bool CanonicalLess(SubsetMask a, SubsetMask b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

// Leftmost character is element 0.
std::string ToBitstring(SubsetMask m, int n);
// Returns false on a character other than '0'/'1' or a string longer than
// kMaxElements.
bool FromBitstring(std::string_view text, SubsetMask* out);

// Calls f(sub) for every subset of `of`, in increasing numeric order.
template <typename F>
void ForEachSubset(SubsetMask of, F&& f) {
  const SubsetMask::Word full = of.bits();
  SubsetMask::Word sub = 0;
  while (true) {
    f(SubsetMask(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

// Calls f(sub) for every k-element subset of `of`, in increasing numeric
// order. f may return false to stop early; returns false iff stopped.
template <typename F>
bool ForEachKSubset(SubsetMask of, int k, F&& f) {
  const std::vector<int> elements = of.elements();
  const int m = static_cast<int>(elements.size());
  if (k < 0 || k > m) return true;
  // Enumerate k-combinations of positions via Gosper's hack on an m-bit word,
  // then spread positions onto the elements of `of`.
  if (k == 0) return static_cast<bool>(f(SubsetMask()));
  std::uint64_t comb = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << m;
  while (comb < limit) {
    SubsetMask sub;
    for (std::uint64_t rest = comb; rest; rest &= rest - 1) {
      sub = sub.with(elements[std::countr_zero(rest)]);
    }
    if (!f(sub)) return false;
    const std::uint64_t low = comb & -comb;
    const std::uint64_t ripple = comb + low;
    comb = (((ripple ^ comb) >> 2) / low) | ripple;
  }
  return true;
}

}  // namespace matroid

#endif  // MATROID_SUBSET_MASK_H_
