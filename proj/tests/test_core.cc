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

#include <cstdlib>
#include <map>
#include <optional>
#include <set>

#include "corpus.h"
#include "doctest.h"
#include "matroid/description.h"
#include "matroid/encode.h"
#include "matroid/errors.h"
#include "matroid/families.h"
#include "matroid/matroid_view.h"
#include "matroid/operations.h"
#include "oracles.h"

using matroid::Description;
using matroid::Kind;
using matroid::MatroidView;
using matroid::SubsetMask;

namespace {

std::vector<int> Ranks(const MatroidView& v) {
  std::vector<int> out;
  matroid::ForEachSubset(v.ground(),
                         [&](SubsetMask a) { out.push_back(v.Rank(a)); });
  return out;
}

// Description of `kind` listing exactly the oracle's members.
Description OracleDescription(int n, const std::vector<int>& rank, Kind kind) {
  const oracle::Classify c(n, rank);
  std::vector<SubsetMask> sets;
  std::vector<int> ranks;
  std::optional<int> r;
  switch (kind) {
    case Kind::kRank:
      for (oracle::Mask a = 0; a < (oracle::Mask{1} << n); ++a) {
        sets.emplace_back(a);
        ranks.push_back(rank[a]);
      }
      break;
    default: {
      static const std::map<Kind, oracle::Family> kMap = {
          {Kind::kIndependentSets, oracle::Family::kIndependent},
          {Kind::kSpanningSets, oracle::Family::kSpanning},
          {Kind::kBases, oracle::Family::kBases},
          {Kind::kFlats, oracle::Family::kFlats},
          {Kind::kCircuits, oracle::Family::kCircuits},
          {Kind::kHyperplanes, oracle::Family::kHyperplanes},
          {Kind::kNonSpanningCircuits, oracle::Family::kNonSpanningCircuits},
          {Kind::kDependentHyperplanes, oracle::Family::kDependentHyperplanes},
          {Kind::kCyclicFlats, oracle::Family::kCyclicFlats},
      };
      for (oracle::Mask a : c.All(kMap.at(kind))) {
        sets.emplace_back(a);
        if (kind == Kind::kCyclicFlats) ranks.push_back(rank[a]);
      }
      if (matroid::HasHeaderRank(kind)) r = c.top();
    }
  }
  return matroid::MakeDescription(kind, n, sets, ranks, r);
}

}  // namespace

TEST_CASE("subset masks: basic operations") {
  const SubsetMask a = SubsetMask::Of({0, 2, 5});
  CHECK(a.size() == 3);
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(1));
  CHECK(a.fits(6));
  CHECK_FALSE(a.fits(5));
  CHECK((a - SubsetMask::Of({2})).bits() == 0b100001u);
  CHECK(SubsetMask::Of({0}).proper_subset_of(a));
  CHECK(a.elements() == std::vector<int>{0, 2, 5});
  CHECK(matroid::ToBitstring(a, 6) == "101001");
  SubsetMask back;
  REQUIRE(matroid::FromBitstring("101001", &back));
  CHECK(back == a);
  CHECK_FALSE(matroid::FromBitstring("10x", &back));
}

TEST_CASE("subset masks: enumeration order and counts") {
  std::vector<SubsetMask::Word> seen;
  matroid::ForEachSubset(SubsetMask::Of({1, 3}),
                         [&](SubsetMask s) { seen.push_back(s.bits()); });
  CHECK(seen == std::vector<SubsetMask::Word>{0, 2, 8, 10});

  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      std::int64_t count = 0;
      SubsetMask::Word last = 0;
      bool increasing = true;
      matroid::ForEachKSubset(SubsetMask::Full(n), k, [&](SubsetMask s) {
        if (count > 0 && s.bits() <= last) increasing = false;
        last = s.bits();
        CHECK(s.size() == k);
        ++count;
        return true;
      });
      std::int64_t expect = 0;
      for (oracle::Mask m = 0; m < (oracle::Mask{1} << n); ++m) {
        expect += oracle::Pop(m) == k;
      }
      CHECK(count == expect);
      CHECK(increasing);
    }
  }
}

TEST_CASE("capacity cap honours the environment, never raising it") {
  CHECK(matroid::MaxGroundSize() == matroid::kMaxElements);
  setenv("MATROID_MAX_N", "5", 1);
  CHECK(matroid::MaxGroundSize() == 5);
  CHECK_THROWS_AS(matroid::Uniform(2, 6), matroid::CapacityError);
  setenv("MATROID_MAX_N", "40", 1);
  CHECK(matroid::MaxGroundSize() == matroid::kMaxElements);
  unsetenv("MATROID_MAX_N");
  CHECK_THROWS_AS(matroid::Uniform(2, 25), matroid::CapacityError);
}

TEST_CASE("independence and rank examples") {
  const MatroidView u24 = matroid::Uniform(2, 4);
  CHECK(u24.IsIndependent(SubsetMask::Of({0, 1})));
  CHECK_FALSE(u24.IsIndependent(SubsetMask::Of({0, 1, 2})));
  CHECK(u24.Rank(SubsetMask::Of({0, 1, 2})) == 2);
  CHECK(u24.Rank(SubsetMask()) == 0);
  CHECK_THROWS_AS(u24.Rank(SubsetMask::Of({4})), matroid::InputError);
  CHECK_THROWS_AS(u24.IsIndependent(SubsetMask::Of({7})), matroid::InputError);

  // NSC {0,1} with r = 3 on four elements.
  const MatroidView nsc = matroid::ViewOf(matroid::MakeDescription(
      Kind::kNonSpanningCircuits, 4, {SubsetMask::Of({0, 1})}, {}, 3));
  CHECK_FALSE(nsc.IsIndependent(SubsetMask::Of({0, 1, 2})));
  CHECK(nsc.IsIndependent(SubsetMask::Of({0, 2, 3})));
  CHECK(nsc.rank() == 3);

  const std::vector<std::uint8_t> table = {0, 1, 1, 1};
  const MatroidView tv = matroid::ViewOfRankTable(2, table);
  CHECK(tv.Rank(SubsetMask::Of({0, 1})) == 1);
}

TEST_CASE("closure examples") {
  CHECK(matroid::Uniform(1, 3).Closure(SubsetMask::Of({0})) ==
        SubsetMask::Full(3));
  const MatroidView pairs =
      matroid::DirectSum(matroid::Uniform(1, 2), matroid::Uniform(1, 2));
  CHECK(pairs.Closure(SubsetMask::Of({0})) == SubsetMask::Of({0, 1}));
  CHECK(pairs.Closure(pairs.ground()) == pairs.ground());
}

TEST_CASE("every decoding rule agrees with the independence oracle") {
  for (const auto& entry : corpus::Matroids(8)) {
    CAPTURE(entry.name);
    const int n = entry.view.size();
    const std::vector<int> rank = oracle::RankOf(entry.view);
    for (Kind kind : matroid::kAllKinds) {
      CAPTURE(matroid::KindName(kind));
      const MatroidView decoded = matroid::ViewOf(OracleDescription(n, rank, kind));
      CHECK(decoded.rank() == rank.back());
      bool agree = true;
      for (oracle::Mask a = 0; a < (oracle::Mask{1} << n); ++a) {
        if (decoded.IsIndependent(SubsetMask(a)) != (rank[a] == oracle::Pop(a)) ||
            decoded.Rank(SubsetMask(a)) != rank[a]) {
          agree = false;
          break;
        }
      }
      CHECK(agree);
    }
  }
}

TEST_CASE("rank is monotone and submodular; closure is a closure operator") {
  for (const auto& entry : corpus::Matroids(7)) {
    CAPTURE(entry.name);
    const MatroidView& v = entry.view;
    const int n = v.size();
    const std::vector<int> r = Ranks(v);
    bool ok = true;
    for (oracle::Mask a = 0; ok && a < (oracle::Mask{1} << n); ++a) {
      for (oracle::Mask b = 0; ok && b < (oracle::Mask{1} << n); ++b) {
        if ((a & b) == a && r[a] > r[b]) ok = false;
        if (r[a | b] + r[a & b] > r[a] + r[b]) ok = false;
      }
      const SubsetMask cl = v.Closure(SubsetMask(a));
      if (!SubsetMask(a).subset_of(cl) || v.Closure(cl) != cl) ok = false;
      for (int e = 0; e < n; ++e) {
        const SubsetMask bigger = SubsetMask(a).with(e);
        if (!cl.subset_of(v.Closure(bigger))) ok = false;
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("dual") {
  CHECK(matroid::SameMatroid(matroid::Dual(matroid::Uniform(1, 3)),
                             matroid::Uniform(2, 3)));
  // Hyperplanes of U_{2,3} dualize to circuits {1,2}, {0,2}, {0,1}.
  const Description hyp = matroid::EncodeFromOracle(matroid::Uniform(2, 3),
                                                    Kind::kHyperplanes);
  const Description dual = matroid::DualDescription(hyp);
  CHECK(dual.kind == Kind::kCircuits);
  CHECK(dual.sets == std::vector<SubsetMask>{SubsetMask::Of({0, 1}),
                                             SubsetMask::Of({0, 2}),
                                             SubsetMask::Of({1, 2})});

  for (const auto& entry : corpus::Matroids(7)) {
    CAPTURE(entry.name);
    const MatroidView& v = entry.view;
    const int n = v.size();
    const std::vector<int> r = oracle::RankOf(v);
    const MatroidView d = matroid::Dual(v);
    CHECK(d.rank() == n - v.rank());
    bool ok = true;
    const oracle::Mask full = oracle::Full(n);
    for (oracle::Mask a = 0; a <= full; ++a) {
      if (d.Rank(SubsetMask(a)) != oracle::Pop(a) + r[full & ~a] - r[full]) {
        ok = false;
      }
      if (a == full) break;
    }
    CHECK(ok);
    CHECK(matroid::SameMatroid(matroid::Dual(d), v));
    // Description-level dual for every kind.
    for (Kind kind : matroid::kAllKinds) {
      CAPTURE(matroid::KindName(kind));
      const Description desc = OracleDescription(n, r, kind);
      const Description dd = matroid::DualDescription(desc);
      CHECK(matroid::SameMatroid(matroid::ViewOf(dd), d));
    }
  }
}

TEST_CASE("minor examples and rank rule") {
  CHECK(matroid::SameMatroid(
      matroid::Minor(matroid::Uniform(2, 5), SubsetMask(), SubsetMask::Of({4})),
      matroid::Uniform(2, 4)));
  CHECK(matroid::SameMatroid(
      matroid::Minor(matroid::Uniform(2, 4), SubsetMask::Of({0}), SubsetMask()),
      matroid::Uniform(1, 3)));
  CHECK_THROWS_AS(matroid::Minor(matroid::Uniform(2, 4), SubsetMask::Of({0}),
                                 SubsetMask::Of({0, 1})),
                  matroid::InputError);
  const MatroidView m = matroid::Minor(matroid::Uniform(2, 5),
                                       SubsetMask::Of({1}), SubsetMask::Of({3}));
  CHECK(m.element_map() == std::vector<int>{0, 2, 4});

  for (const auto& entry : corpus::Matroids(7)) {
    CAPTURE(entry.name);
    const MatroidView& v = entry.view;
    const int n = v.size();
    const std::vector<int> r = oracle::RankOf(v);
    const Description circuits = OracleDescription(n, r, Kind::kCircuits);
    // A handful of (x, y) pairs per matroid, including edge cases.
    for (oracle::Mask x = 0; x < (oracle::Mask{1} << n); x += 5) {
      const oracle::Mask rest = oracle::Full(n) & ~x;
      for (oracle::Mask y : {oracle::Mask{0}, rest & 0b1010101u, rest & 0b11u}) {
        const MatroidView minor = matroid::Minor(v, SubsetMask(x), SubsetMask(y));
        const oracle::Mask keep = rest & ~y;
        std::vector<int> map;
        for (int e = 0; e < n; ++e) {
          if (keep >> e & 1) map.push_back(e);
        }
        CHECK(minor.element_map() == map);
        bool ok = true;
        matroid::ForEachSubset(minor.ground(), [&](SubsetMask a) {
          oracle::Mask lifted = 0;
          for (int e : a) lifted |= 1u << map[static_cast<std::size_t>(e)];
          if (minor.Rank(a) != r[lifted | x] - r[x]) ok = false;
        });
        CHECK(ok);
        if (n <= 6) {
          const Description by_circuits =
              matroid::MinorByCircuits(circuits, SubsetMask(x), SubsetMask(y));
          CHECK(matroid::SameMatroid(matroid::ViewOf(by_circuits), minor));
        }
      }
    }
  }
}

TEST_CASE("truncation") {
  CHECK(matroid::SameMatroid(matroid::Truncate(matroid::Uniform(3, 5), 2),
                             matroid::Uniform(2, 5)));
  const MatroidView pairs =
      matroid::DirectSum(matroid::Uniform(1, 2), matroid::Uniform(1, 2));
  CHECK(matroid::SameMatroid(matroid::Truncate(pairs, 2), pairs));
  const MatroidView t = matroid::Truncate(pairs, 1);
  const std::vector<int> r = oracle::RankOf(pairs);
  for (oracle::Mask a = 0; a < 16; ++a) {
    CHECK(t.Rank(SubsetMask(a)) == std::min(r[a], 1));
  }
  CHECK_THROWS_AS(matroid::Truncate(pairs, 3), matroid::InputError);
  CHECK_THROWS_AS(matroid::Truncate(pairs, -1), matroid::InputError);
}

TEST_CASE("direct sum") {
  CHECK(matroid::SameMatroid(
      matroid::DirectSum(matroid::Uniform(1, 1), matroid::Uniform(1, 1)),
      matroid::Uniform(2, 2)));
  const MatroidView u23 = matroid::Uniform(2, 3);
  CHECK(matroid::SameMatroid(matroid::DirectSum(u23, matroid::Uniform(0, 0)),
                             u23));
  const MatroidView pairs =
      matroid::DirectSum(matroid::Uniform(1, 2), matroid::Uniform(1, 2));
  const Description bases = matroid::EncodeFromOracle(pairs, Kind::kBases);
  const oracle::Classify c(4, oracle::RankOf(pairs));
  CHECK(oracle::Bits(bases.sets) == c.All(oracle::Family::kBases));
  CHECK(bases.sets.size() == 4);
  CHECK_THROWS_AS(
      matroid::DirectSum(matroid::Uniform(1, 20), matroid::Uniform(1, 5)),
      matroid::CapacityError);
}

TEST_CASE("parallel blow-up and added parallel element") {
  const MatroidView b = matroid::ParallelBlowup(matroid::Uniform(2, 3), 2);
  CHECK(b.size() == 6);
  CHECK(b.rank() == 2);
  CHECK(matroid::CountFromRankTable(6, matroid::RankTable(b),
                                    Kind::kHyperplanes) == 3);
  CHECK(matroid::SameMatroid(matroid::ParallelBlowup(matroid::Uniform(2, 3), 1),
                             matroid::Uniform(2, 3)));
  // Independence rule: at most one copy per class, classes independent.
  const std::vector<int> base = oracle::RankOf(matroid::Uniform(2, 3));
  const std::vector<int> r = oracle::RankOf(b);
  for (oracle::Mask a = 0; a < 64; ++a) {
    oracle::Mask classes = 0;
    bool one_each = true;
    for (int e = 0; e < 6; ++e) {
      if (!(a >> e & 1)) continue;
      if (classes >> (e / 2) & 1) one_each = false;
      classes |= 1u << (e / 2);
    }
    CHECK((r[a] == oracle::Pop(a)) ==
          (one_each && base[classes] == oracle::Pop(classes)));
  }

  const MatroidView p = matroid::AddParallel(matroid::Uniform(2, 4), 0);
  CHECK(p.size() == 5);
  CHECK(p.rank() == 2);
  const Description cf = matroid::EncodeFromOracle(p, Kind::kCyclicFlats);
  CHECK(cf.sets == std::vector<SubsetMask>{SubsetMask(), SubsetMask::Of({0, 4}),
                                           SubsetMask::Full(5)});
  CHECK(matroid::CountFromRankTable(5, matroid::RankTable(p),
                                    Kind::kDependentHyperplanes) == 1);
  CHECK_THROWS_AS(matroid::AddParallel(
                      matroid::DirectSum(matroid::Uniform(0, 1),
                                         matroid::Uniform(1, 1)),
                      0),
                  matroid::InputError);
}

TEST_CASE("rank table and materialization") {
  for (const auto& entry : corpus::Matroids(7)) {
    CAPTURE(entry.name);
    const std::vector<int> r = oracle::RankOf(entry.view);
    const std::vector<std::uint8_t> table = matroid::RankTable(entry.view);
    CHECK(std::vector<int>(table.begin(), table.end()) == r);
    CHECK(matroid::SameMatroid(matroid::Materialize(entry.view), entry.view));
  }
}
