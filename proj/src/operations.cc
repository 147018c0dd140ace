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

#include "matroid/operations.h"

#include <algorithm>
#include <memory>
#include <string>
#include <utility>

#include "matroid/encode.h"
#include "matroid/errors.h"

namespace matroid {
namespace {

using OraclePtr = std::shared_ptr<const RankOracle>;

class DualOracle final : public RankOracle {
 public:
  explicit DualOracle(OraclePtr base)
      : base_(std::move(base)),
        ground_(SubsetMask::Full(base_->size())),
        base_rank_(base_->Rank(ground_)) {}
  int size() const override { return base_->size(); }
  bool Independent(SubsetMask a) const override {
    return base_->Rank(ground_ - a) == base_rank_;
  }
  int Rank(SubsetMask a) const override {
    return a.size() + base_->Rank(ground_ - a) - base_rank_;
  }

 private:
  OraclePtr base_;
  SubsetMask ground_;
  int base_rank_;
};

// r'(A) = r(A + contract) - r(contract), A indexed over `kept`.
class MinorOracle final : public RankOracle {
 public:
  MinorOracle(OraclePtr base, SubsetMask contract, std::vector<int> kept)
      : base_(std::move(base)),
        contract_(contract),
        kept_(std::move(kept)),
        contract_rank_(base_->Rank(contract)) {}
  int size() const override { return static_cast<int>(kept_.size()); }
  bool Independent(SubsetMask a) const override { return Rank(a) == a.size(); }
  int Rank(SubsetMask a) const override {
    SubsetMask lifted = contract_;
    for (int e : a) lifted = lifted.with(kept_[static_cast<size_t>(e)]);
    return base_->Rank(lifted) - contract_rank_;
  }

 private:
  OraclePtr base_;
  SubsetMask contract_;
  std::vector<int> kept_;
  int contract_rank_;
};

class TruncationOracle final : public RankOracle {
 public:
  TruncationOracle(OraclePtr base, int target)
      : base_(std::move(base)), target_(target) {}
  int size() const override { return base_->size(); }
  bool Independent(SubsetMask a) const override {
    return a.size() <= target_ && base_->Independent(a);
  }
  int Rank(SubsetMask a) const override {
    return std::min(base_->Rank(a), target_);
  }

 private:
  OraclePtr base_;
  int target_;
};

class DirectSumOracle final : public RankOracle {
 public:
  DirectSumOracle(OraclePtr a, OraclePtr b)
      : a_(std::move(a)), b_(std::move(b)),
        low_(SubsetMask::Full(a_->size())) {}
  int size() const override { return a_->size() + b_->size(); }
  bool Independent(SubsetMask s) const override {
    return a_->Independent(s & low_) && b_->Independent(High(s));
  }
  int Rank(SubsetMask s) const override {
    return a_->Rank(s & low_) + b_->Rank(High(s));
  }

 private:
  SubsetMask High(SubsetMask s) const {
    return SubsetMask(s.bits() >> a_->size());
  }
  OraclePtr a_;
  OraclePtr b_;
  SubsetMask low_;
};

class BlowupOracle final : public RankOracle {
 public:
  BlowupOracle(OraclePtr base, int m) : base_(std::move(base)), m_(m) {}
  int size() const override { return base_->size() * m_; }
  bool Independent(SubsetMask a) const override {
    SubsetMask classes;
    for (int e : a) {
      const int c = e / m_;
      if (classes.contains(c)) return false;
      classes = classes.with(c);
    }
    return base_->Independent(classes);
  }
  int Rank(SubsetMask a) const override {
    SubsetMask classes;
    for (int e : a) classes = classes.with(e / m_);
    return base_->Rank(classes);
  }

 private:
  OraclePtr base_;
  int m_;
};

class AddParallelOracle final : public RankOracle {
 public:
  AddParallelOracle(OraclePtr base, int e)
      : base_(std::move(base)), e_(e), extra_(base_->size()) {}
  int size() const override { return extra_ + 1; }
  bool Independent(SubsetMask a) const override {
    if (a.contains(extra_) && a.contains(e_)) return false;
    return base_->Independent(Project(a));
  }
  int Rank(SubsetMask a) const override { return base_->Rank(Project(a)); }

 private:
  SubsetMask Project(SubsetMask a) const {
    return a.contains(extra_) ? a.without(extra_).with(e_) : a;
  }
  OraclePtr base_;
  int e_;
  int extra_;
};

std::vector<SubsetMask> Complements(const std::vector<SubsetMask>& sets,
                                    int n) {
  std::vector<SubsetMask> out;
  out.reserve(sets.size());
  for (SubsetMask s : sets) out.push_back(SubsetMask::Full(n) - s);
  return out;
}

// Packs the bits of `a` that lie in `keep` into positions 0, 1, ...
SubsetMask Compress(SubsetMask a, SubsetMask keep) {
  SubsetMask out;
  int i = 0;
  for (int e : keep) {
    if (a.contains(e)) out = out.with(i);
    ++i;
  }
  return out;
}

}  // namespace

std::vector<SubsetMask> MinimalSets(std::vector<SubsetMask> sets) {
  std::sort(sets.begin(), sets.end(), CanonicalLess);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<SubsetMask> out;
  for (SubsetMask s : sets) {
    const bool dominated = std::any_of(
        out.begin(), out.end(), [s](SubsetMask t) { return t.subset_of(s); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

Description DualDescription(const Description& d) {
  const int n = d.n;
  const SubsetMask ground = SubsetMask::Full(n);
  switch (d.kind) {
    case Kind::kBases:
      return MakeDescription(Kind::kBases, n, Complements(d.sets, n));
    case Kind::kCircuits:
      return MakeDescription(Kind::kHyperplanes, n, Complements(d.sets, n));
    case Kind::kHyperplanes:
      return MakeDescription(Kind::kCircuits, n, Complements(d.sets, n));
    case Kind::kIndependentSets:
      return MakeDescription(Kind::kSpanningSets, n, Complements(d.sets, n));
    case Kind::kSpanningSets:
      return MakeDescription(Kind::kIndependentSets, n,
                             Complements(d.sets, n));
    case Kind::kNonSpanningCircuits:
      return MakeDescription(Kind::kDependentHyperplanes, n,
                             Complements(d.sets, n), {}, n - *d.rank);
    case Kind::kDependentHyperplanes:
      return MakeDescription(Kind::kNonSpanningCircuits, n,
                             Complements(d.sets, n), {}, n - *d.rank);
    case Kind::kCyclicFlats: {
      const MatroidView view = ViewOf(d);
      std::vector<int> ranks;
      for (size_t i = 0; i < d.sets.size(); ++i) {
        const SubsetMask rest = ground - d.sets[i];
        ranks.push_back(rest.size() - view.rank() + d.set_ranks[i]);
      }
      return MakeDescription(Kind::kCyclicFlats, n, Complements(d.sets, n),
                             std::move(ranks));
    }
    case Kind::kRank: {
      const MatroidView view = ViewOf(d);
      std::vector<SubsetMask> sets;
      std::vector<int> ranks;
      for (SubsetMask s : d.sets) {
        sets.push_back(s);
        ranks.push_back(s.size() + view.Rank(ground - s) - view.rank());
      }
      return MakeDescription(Kind::kRank, n, std::move(sets), std::move(ranks));
    }
    case Kind::kFlats: {
      const MatroidView dual(
          std::make_shared<DualOracle>(ViewOf(d).shared_oracle()));
      return EncodeFromOracle(dual, Kind::kFlats);
    }
  }
  throw InputError("unknown description kind");
}

MatroidView Dual(const MatroidView& view) {
  if (const Description* d = view.description()) {
    return ViewOf(DualDescription(*d));
  }
  return MatroidView(std::make_shared<DualOracle>(view.shared_oracle()));
}

MatroidView Minor(const MatroidView& view, SubsetMask contract,
                  SubsetMask remove) {
  if (!contract.fits(view.size()) || !remove.fits(view.size())) {
    throw InputError("minor: sets wider than the ground set");
  }
  if (contract.intersects(remove)) {
    throw InputError("minor: contracted and deleted sets overlap");
  }
  std::vector<int> kept = (view.ground() - contract - remove).elements();
  auto oracle =
      std::make_shared<MinorOracle>(view.shared_oracle(), contract, kept);
  return MatroidView(std::move(oracle), std::nullopt, std::move(kept));
}

Description MinorByCircuits(const Description& circuits, SubsetMask contract,
                            SubsetMask remove) {
  if (circuits.kind != Kind::kCircuits) {
    throw InputError("minor by circuits needs a circuits description");
  }
  if (!contract.fits(circuits.n) || !remove.fits(circuits.n)) {
    throw InputError("minor: sets wider than the ground set");
  }
  if (contract.intersects(remove)) {
    throw InputError("minor: contracted and deleted sets overlap");
  }
  std::vector<SubsetMask> current = circuits.sets;
  for (int e : contract) {
    std::vector<SubsetMask> next;
    next.reserve(current.size());
    for (SubsetMask c : current) {
      const SubsetMask rest = c.without(e);
      if (!rest.empty()) next.push_back(rest);
    }
    current = MinimalSets(std::move(next));
  }
  const SubsetMask keep = SubsetMask::Full(circuits.n) - contract - remove;
  std::vector<SubsetMask> out;
  for (SubsetMask c : current) {
    if (c.subset_of(keep)) out.push_back(Compress(c, keep));
  }
  return MakeDescription(Kind::kCircuits, keep.size(), std::move(out));
}

MatroidView Truncate(const MatroidView& view, int target_rank) {
  if (target_rank < 0 || target_rank > view.rank()) {
    throw InputError("truncate: target rank " + std::to_string(target_rank) +
                     " outside [0, " + std::to_string(view.rank()) + "]");
  }
  return MatroidView(
      std::make_shared<TruncationOracle>(view.shared_oracle(), target_rank));
}

MatroidView DirectSum(const MatroidView& a, const MatroidView& b) {
  CheckCapacity(a.size() + b.size(), "direct sum");
  return MatroidView(
      std::make_shared<DirectSumOracle>(a.shared_oracle(), b.shared_oracle()));
}

MatroidView ParallelBlowup(const MatroidView& view, int m) {
  if (m < 1) throw InputError("parallel blow-up needs m >= 1");
  CheckCapacity(view.size() * m, "parallel blow-up");
  return MatroidView(std::make_shared<BlowupOracle>(view.shared_oracle(), m));
}

MatroidView AddParallel(const MatroidView& view, int e) {
  if (e < 0 || e >= view.size()) throw InputError("add parallel: no element");
  if (view.Rank(SubsetMask::Singleton(e)) == 0) {
    throw InputError("add parallel: element " + std::to_string(e) +
                     " is a loop");
  }
  CheckCapacity(view.size() + 1, "add parallel");
  return MatroidView(
      std::make_shared<AddParallelOracle>(view.shared_oracle(), e));
}

}  // namespace matroid
