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

#ifndef MATROID_MATROID_VIEW_H_
#define MATROID_MATROID_VIEW_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "matroid/description.h"
#include "matroid/subset_mask.h"

namespace matroid {

// Independence/rank oracle over the ground set {0, ..., size()-1}.
// Implementations are immutable and safe to share across threads.
class RankOracle {
 public:
  virtual ~RankOracle() = default;

  virtual int size() const = 0;
  virtual bool Independent(SubsetMask a) const = 0;
  // Defaults to the greedy algorithm over Independent().
  virtual int Rank(SubsetMask a) const;
};

// Greedy maximal independent subset of `a`, scanning elements in increasing
// order.
SubsetMask GreedyBasis(const RankOracle& oracle, SubsetMask a);

// A matroid together with the way it is queried. Cheap to copy; the oracle
// is shared and immutable.
class MatroidView {
 public:
  MatroidView(std::shared_ptr<const RankOracle> oracle,
              std::optional<Description> description = std::nullopt,
              std::vector<int> element_map = {});

  int size() const { return size_; }
  int rank() const { return rank_; }
  SubsetMask ground() const { return SubsetMask::Full(size_); }

  // All three throw InputError when `a` is wider than the ground set.
  bool IsIndependent(SubsetMask a) const;
  int Rank(SubsetMask a) const;
  // cl(a) = a plus every e with I + e dependent, I a greedy basis of a.
  SubsetMask Closure(SubsetMask a) const;

  // The description this view decodes, when it was built from one.
  const Description* description() const {
    return description_ ? &*description_ : nullptr;
  }
  // Index in the parent matroid of each element, for views produced by
  // minor(); empty otherwise.
  const std::vector<int>& element_map() const { return element_map_; }

  const RankOracle& oracle() const { return *oracle_; }
  std::shared_ptr<const RankOracle> shared_oracle() const { return oracle_; }

 private:
  void Check(SubsetMask a) const;

  std::shared_ptr<const RankOracle> oracle_;
  std::optional<Description> description_;
  std::vector<int> element_map_;
  int size_ = 0;
  int rank_ = 0;
};

// Decodes a description:
//   rank          table lookup
//   independent   membership
//   spanning      bases = minimum-size spanning sets; A indep iff A is in
//                 some basis
//   bases         A indep iff A is in some basis
//   flats         r(A) = height of the smallest flat containing A
//   circuits      A indep iff no circuit is contained in A
//   hyperplanes   complements are the circuits of the dual
//   nsc           |A| <= r and no listed circuit inside A
//   dephyp        complements are the non-spanning circuits of the dual,
//                 whose rank is n - r
//   cyclicflats   r(A) = min over listed Z of r(Z) + |A - Z|
MatroidView ViewOf(Description description);

// The full rank function, r(A) at index A.bits(). One independence query per
// subset (greedy basis of A extends the greedy basis of A minus its top
// element).
std::vector<std::uint8_t> RankTable(const MatroidView& view);

// Same matroid backed by its rank table. Keeps description and element map.
MatroidView Materialize(const MatroidView& view);

// View over an explicit rank table of size 2^n.
MatroidView ViewOfRankTable(int n, std::vector<std::uint8_t> table);

}  // namespace matroid

#endif  // MATROID_MATROID_VIEW_H_
