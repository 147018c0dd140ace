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

#include "matroid/matroid_view.h"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "matroid/errors.h"

namespace matroid {

int RankOracle::Rank(SubsetMask a) const {
  return GreedyBasis(*this, a).size();
}

SubsetMask GreedyBasis(const RankOracle& oracle, SubsetMask a) {
  SubsetMask basis;
  for (int e : a) {
    if (oracle.Independent(basis.with(e))) basis = basis.with(e);
  }
  return basis;
}

namespace {

class TableOracle final : public RankOracle {
 public:
  TableOracle(int n, std::vector<std::uint8_t> table)
      : n_(n), table_(std::move(table)) {}
  int size() const override { return n_; }
  bool Independent(SubsetMask a) const override {
    return table_[a.bits()] == a.size();
  }
  int Rank(SubsetMask a) const override { return table_[a.bits()]; }

 private:
  int n_;
  std::vector<std::uint8_t> table_;
};

// Membership in a family of masks.
class MaskSet {
 public:
  explicit MaskSet(const std::vector<SubsetMask>& sets) {
    words_.reserve(sets.size());
    for (SubsetMask s : sets) words_.push_back(s.bits());
    std::sort(words_.begin(), words_.end());
  }
  bool Contains(SubsetMask a) const {
    return std::binary_search(words_.begin(), words_.end(), a.bits());
  }

 private:
  std::vector<SubsetMask::Word> words_;
};

class IndependentSetsOracle final : public RankOracle {
 public:
  IndependentSetsOracle(int n, const std::vector<SubsetMask>& sets)
      : n_(n), members_(sets) {}
  int size() const override { return n_; }
  bool Independent(SubsetMask a) const override {
    return members_.Contains(a);
  }

 private:
  int n_;
  MaskSet members_;
};

// A is independent iff it lies inside some basis.
class BasesOracle final : public RankOracle {
 public:
  BasesOracle(int n, std::vector<SubsetMask> bases)
      : n_(n), bases_(std::move(bases)) {}
  int size() const override { return n_; }
  bool Independent(SubsetMask a) const override {
    return std::any_of(bases_.begin(), bases_.end(),
                       [a](SubsetMask b) { return a.subset_of(b); });
  }

 private:
  int n_;
  std::vector<SubsetMask> bases_;
};

class CircuitsOracle final : public RankOracle {
 public:
  CircuitsOracle(int n, std::vector<SubsetMask> circuits)
      : n_(n), circuits_(std::move(circuits)) {}
  int size() const override { return n_; }
  bool Independent(SubsetMask a) const override {
    return std::none_of(circuits_.begin(), circuits_.end(),
                        [a](SubsetMask c) { return c.subset_of(a); });
  }

 private:
  int n_;
  std::vector<SubsetMask> circuits_;
};

// Spanning circuits have r + 1 elements, so a set of size <= r can only
// contain non-spanning ones.
class NonSpanningCircuitsOracle final : public RankOracle {
 public:
  NonSpanningCircuitsOracle(int n, int r, std::vector<SubsetMask> circuits)
      : n_(n), r_(r), circuits_(std::move(circuits)) {}
  int size() const override { return n_; }
  bool Independent(SubsetMask a) const override {
    if (a.size() > r_) return false;
    return std::none_of(circuits_.begin(), circuits_.end(),
                        [a](SubsetMask c) { return c.subset_of(a); });
  }

 private:
  int n_;
  int r_;
  std::vector<SubsetMask> circuits_;
};

// M is queried through M*: A is independent in M iff E - A spans M*.
class ThroughDualOracle final : public RankOracle {
 public:
  explicit ThroughDualOracle(std::unique_ptr<RankOracle> dual)
      : dual_(std::move(dual)),
        ground_(SubsetMask::Full(dual_->size())),
        dual_rank_(dual_->Rank(ground_)) {}
  int size() const override { return dual_->size(); }
  bool Independent(SubsetMask a) const override {
    return dual_->Rank(ground_ - a) == dual_rank_;
  }

 private:
  std::unique_ptr<RankOracle> dual_;
  SubsetMask ground_;
  int dual_rank_;
};

class RankTableOracle final : public RankOracle {
 public:
  explicit RankTableOracle(const Description& d)
      : n_(d.n), table_(size_t{1} << d.n, 0) {
    for (size_t i = 0; i < d.sets.size(); ++i) {
      table_[d.sets[i].bits()] = d.set_ranks[i];
    }
  }
  int size() const override { return n_; }
  bool Independent(SubsetMask a) const override {
    return table_[a.bits()] == a.size();
  }
  int Rank(SubsetMask a) const override { return table_[a.bits()]; }

 private:
  int n_;
  std::vector<int> table_;
};

class FlatsOracle final : public RankOracle {
 public:
  FlatsOracle(int n, const std::vector<SubsetMask>& flats) : n_(n) {
    // Canonical order lists smaller flats first, so every proper subflat of
    // a flat precedes it.
    flats_ = flats;
    std::stable_sort(flats_.begin(), flats_.end(), CanonicalLess);
    height_.assign(flats_.size(), 0);
    for (size_t i = 0; i < flats_.size(); ++i) {
      for (size_t j = 0; j < i; ++j) {
        if (flats_[j].proper_subset_of(flats_[i])) {
          height_[i] = std::max(height_[i], height_[j] + 1);
        }
      }
    }
  }
  int size() const override { return n_; }
  bool Independent(SubsetMask a) const override { return Rank(a) == a.size(); }
  int Rank(SubsetMask a) const override {
    // The smallest flat containing a is the first one in canonical order
    // that contains it.
    for (size_t i = 0; i < flats_.size(); ++i) {
      if (a.subset_of(flats_[i])) return height_[i];
    }
    // No listed flat contains a; treat as full rank of the lattice.
    int top = 0;
    for (int h : height_) top = std::max(top, h + 1);
    return top;
  }

 private:
  int n_;
  std::vector<SubsetMask> flats_;
  std::vector<int> height_;
};

class CyclicFlatsOracle final : public RankOracle {
 public:
  explicit CyclicFlatsOracle(const Description& d)
      : n_(d.n), flats_(d.sets), ranks_(d.set_ranks) {}
  int size() const override { return n_; }
  bool Independent(SubsetMask a) const override { return Rank(a) == a.size(); }
  int Rank(SubsetMask a) const override {
    int best = a.size();
    for (size_t i = 0; i < flats_.size(); ++i) {
      best = std::min(best, ranks_[i] + (a - flats_[i]).size());
    }
    return best;
  }

 private:
  int n_;
  std::vector<SubsetMask> flats_;
  std::vector<int> ranks_;
};

std::vector<SubsetMask> Complements(const std::vector<SubsetMask>& sets,
                                    int n) {
  std::vector<SubsetMask> out;
  out.reserve(sets.size());
  for (SubsetMask s : sets) out.push_back(SubsetMask::Full(n) - s);
  return out;
}

std::vector<SubsetMask> MinimumSize(const std::vector<SubsetMask>& sets) {
  std::vector<SubsetMask> out;
  if (sets.empty()) return out;
  int smallest = sets.front().size();
  for (SubsetMask s : sets) smallest = std::min(smallest, s.size());
  for (SubsetMask s : sets) {
    if (s.size() == smallest) out.push_back(s);
  }
  return out;
}

std::shared_ptr<const RankOracle> DecodeOracle(const Description& d) {
  switch (d.kind) {
    case Kind::kRank:
      return std::make_shared<RankTableOracle>(d);
    case Kind::kIndependentSets:
      return std::make_shared<IndependentSetsOracle>(d.n, d.sets);
    case Kind::kSpanningSets:
      return std::make_shared<BasesOracle>(d.n, MinimumSize(d.sets));
    case Kind::kBases:
      return std::make_shared<BasesOracle>(d.n, d.sets);
    case Kind::kFlats:
      return std::make_shared<FlatsOracle>(d.n, d.sets);
    case Kind::kCircuits:
      return std::make_shared<CircuitsOracle>(d.n, d.sets);
    case Kind::kHyperplanes:
      return std::make_shared<ThroughDualOracle>(
          std::make_unique<CircuitsOracle>(d.n, Complements(d.sets, d.n)));
    case Kind::kNonSpanningCircuits:
      return std::make_shared<NonSpanningCircuitsOracle>(d.n, d.rank.value(),
                                                         d.sets);
    case Kind::kDependentHyperplanes:
      return std::make_shared<ThroughDualOracle>(
          std::make_unique<NonSpanningCircuitsOracle>(
              d.n, d.n - d.rank.value(), Complements(d.sets, d.n)));
    case Kind::kCyclicFlats:
      return std::make_shared<CyclicFlatsOracle>(d);
  }
  throw InputError("unknown description kind");
}

}  // namespace

MatroidView::MatroidView(std::shared_ptr<const RankOracle> oracle,
                         std::optional<Description> description,
                         std::vector<int> element_map)
    : oracle_(std::move(oracle)),
      description_(std::move(description)),
      element_map_(std::move(element_map)) {
  size_ = oracle_->size();
  rank_ = oracle_->Rank(SubsetMask::Full(size_));
}

void MatroidView::Check(SubsetMask a) const {
  if (!a.fits(size_)) {
    throw InputError("subset mask wider than the ground set of size " +
                     std::to_string(size_));
  }
}

bool MatroidView::IsIndependent(SubsetMask a) const {
  Check(a);
  return oracle_->Independent(a);
}

int MatroidView::Rank(SubsetMask a) const {
  Check(a);
  return oracle_->Rank(a);
}

SubsetMask MatroidView::Closure(SubsetMask a) const {
  Check(a);
  const SubsetMask basis = GreedyBasis(*oracle_, a);
  SubsetMask closure = a;
  for (int e : ground() - a) {
    if (!oracle_->Independent(basis.with(e))) closure = closure.with(e);
  }
  return closure;
}

MatroidView ViewOf(Description description) {
  auto oracle = DecodeOracle(description);
  return MatroidView(std::move(oracle), std::move(description));
}

std::vector<std::uint8_t> RankTable(const MatroidView& view) {
  const int n = view.size();
  const RankOracle& oracle = view.oracle();
  std::vector<SubsetMask::Word> basis(size_t{1} << n, 0);
  std::vector<std::uint8_t> table(size_t{1} << n, 0);
  for (SubsetMask::Word bits = 1; bits < (SubsetMask::Word{1} << n); ++bits) {
    const SubsetMask a(bits);
    const int top = a.highest();
    const SubsetMask rest = a.without(top);
    const SubsetMask prev(basis[rest.bits()]);
    if (oracle.Independent(prev.with(top))) {
      basis[bits] = prev.with(top).bits();
      table[bits] = static_cast<std::uint8_t>(table[rest.bits()] + 1);
    } else {
      basis[bits] = prev.bits();
      table[bits] = table[rest.bits()];
    }
  }
  return table;
}

MatroidView Materialize(const MatroidView& view) {
  auto oracle = std::make_shared<TableOracle>(view.size(), RankTable(view));
  std::optional<Description> desc;
  if (view.description()) desc = *view.description();
  return MatroidView(std::move(oracle), std::move(desc), view.element_map());
}

MatroidView ViewOfRankTable(int n, std::vector<std::uint8_t> table) {
  CheckCapacity(n, "rank table");
  if (table.size() != (size_t{1} << n)) {
    throw InputError("rank table must have 2^n entries");
  }
  return MatroidView(std::make_shared<TableOracle>(n, std::move(table)));
}

}  // namespace matroid
