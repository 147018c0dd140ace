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

#include "matroid/encode.h"

#include <optional>

#include "matroid/errors.h"

namespace matroid {
namespace {

class Classifier {
 public:
  Classifier(int n, const std::vector<std::uint8_t>& table)
      : table_(table), ground_(SubsetMask::Full(n)),
        full_rank_(table[ground_.bits()]) {}

  int full_rank() const { return full_rank_; }
  int r(SubsetMask a) const { return table_[a.bits()]; }

  bool Independent(SubsetMask a) const { return r(a) == a.size(); }
  bool Spanning(SubsetMask a) const { return r(a) == full_rank_; }
  bool Flat(SubsetMask a) const {
    const int ra = r(a);
    for (int e : ground_ - a) {
      if (r(a.with(e)) == ra) return false;
    }
    return true;
  }
  bool Circuit(SubsetMask a) const {
    if (a.empty() || r(a) != a.size() - 1) return false;
    for (int e : a) {
      if (r(a.without(e)) != a.size() - 1) return false;
    }
    return true;
  }
  bool Hyperplane(SubsetMask a) const {
    return r(a) == full_rank_ - 1 && Flat(a);
  }
  // Every element lies on a circuit inside a.
  bool Cyclic(SubsetMask a) const {
    const int ra = r(a);
    for (int e : a) {
      if (r(a.without(e)) != ra) return false;
    }
    return true;
  }

  bool Member(SubsetMask a, Kind kind) const {
    switch (kind) {
      case Kind::kRank:
        return true;
      case Kind::kIndependentSets:
        return Independent(a);
      case Kind::kSpanningSets:
        return Spanning(a);
      case Kind::kBases:
        return Independent(a) && Spanning(a);
      case Kind::kFlats:
        return Flat(a);
      case Kind::kCircuits:
        return Circuit(a);
      case Kind::kHyperplanes:
        return Hyperplane(a);
      case Kind::kNonSpanningCircuits:
        return a.size() <= full_rank_ && Circuit(a);
      case Kind::kDependentHyperplanes:
        return !Independent(a) && Hyperplane(a);
      case Kind::kCyclicFlats:
        return Cyclic(a) && Flat(a);
    }
    return false;
  }

 private:
  const std::vector<std::uint8_t>& table_;
  SubsetMask ground_;
  int full_rank_;
};

}  // namespace

Description EncodeFromRankTable(int n, const std::vector<std::uint8_t>& table,
                                Kind kind) {
  Classifier c(n, table);
  std::vector<SubsetMask> sets;
  std::vector<int> ranks;
  const SubsetMask::Word limit = SubsetMask::Word{1} << n;
  for (SubsetMask::Word bits = 0; bits < limit; ++bits) {
    const SubsetMask a(bits);
    if (!c.Member(a, kind)) continue;
    sets.push_back(a);
    if (HasSetRanks(kind)) ranks.push_back(c.r(a));
  }
  std::optional<int> header;
  if (HasHeaderRank(kind)) header = c.full_rank();
  return MakeDescription(kind, n, std::move(sets), std::move(ranks), header);
}

std::int64_t CountFromRankTable(int n, const std::vector<std::uint8_t>& table,
                                Kind kind) {
  Classifier c(n, table);
  std::int64_t count = 0;
  const SubsetMask::Word limit = SubsetMask::Word{1} << n;
  for (SubsetMask::Word bits = 0; bits < limit; ++bits) {
    if (c.Member(SubsetMask(bits), kind)) ++count;
  }
  return count;
}

Description EncodeFromOracle(const MatroidView& view, Kind kind) {
  return EncodeFromRankTable(view.size(), RankTable(view), kind);
}

bool SameMatroid(const MatroidView& a, const MatroidView& b) {
  if (a.size() != b.size()) return false;
  return RankTable(a) == RankTable(b);
}

bool SemanticallyEqual(const Description& a, const Description& b) {
  if (a.n != b.n) {
    throw InputError("semantic comparison needs equal ground sets");
  }
  return SameMatroid(ViewOf(a), ViewOf(b));
}

}  // namespace matroid
