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

#include "matroid/minors.h"

#include <algorithm>
#include <set>

#include "matroid/encode.h"
#include "matroid/errors.h"
#include "matroid/isomorphism.h"
#include "matroid/operations.h"

namespace matroid {
namespace {

std::vector<int> SortedSizes(const std::vector<SubsetMask>& sets) {
  std::vector<int> sizes;
  sizes.reserve(sets.size());
  for (SubsetMask s : sets) sizes.push_back(s.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

struct Pattern {
  int size;
  int rank;
  std::vector<SubsetMask> circuits;
  std::vector<int> circuit_sizes;

  explicit Pattern(const MatroidView& view)
      : size(view.size()), rank(view.rank()),
        circuits(EncodeFromRankTable(view.size(), RankTable(view),
                                     Kind::kCircuits)
                     .sets),
        circuit_sizes(SortedSizes(circuits)) {}

  std::optional<std::vector<int>> Match(
      const std::vector<SubsetMask>& minor_circuits) const {
    if (minor_circuits.size() != circuits.size() ||
        SortedSizes(minor_circuits) != circuit_sizes) {
      return std::nullopt;
    }
    return CircuitIsomorphism(size, minor_circuits, circuits);
  }
};

// Distinct unions of at most t members of `circuits`, in increasing order.
std::vector<SubsetMask> CircuitUnions(const std::vector<SubsetMask>& circuits,
                                      int t) {
  std::set<SubsetMask> all = {SubsetMask()};
  std::vector<SubsetMask> frontier = {SubsetMask()};
  for (int level = 0; level < t && !frontier.empty(); ++level) {
    std::vector<SubsetMask> next;
    for (SubsetMask u : frontier) {
      for (SubsetMask c : circuits) {
        if (all.insert(u | c).second) next.push_back(u | c);
      }
    }
    frontier = std::move(next);
  }
  return {all.begin(), all.end()};
}

std::optional<MinorWitness> FixedOnCircuits(const Description& host,
                                            const Pattern& pattern) {
  const int n = host.n;
  const int s = pattern.size;
  const SubsetMask ground = SubsetMask::Full(n);
  if (pattern.circuits.empty()) {
    // Free pattern: restrict to s elements of a basis.
    const MatroidView view = ViewOf(host);
    if (view.rank() < s) return std::nullopt;
    SubsetMask keep;
    for (int e : GreedyBasis(view.oracle(), ground)) {
      if (keep.size() < s) keep = keep.with(e);
    }
    std::vector<int> iso(static_cast<size_t>(s));
    for (int i = 0; i < s; ++i) iso[static_cast<size_t>(i)] = i;
    return MinorWitness{SubsetMask(), ground - keep, iso};
  }

  const std::vector<SubsetMask> unions = CircuitUnions(
      host.sets, static_cast<int>(pattern.circuits.size()));
  std::optional<MinorWitness> found;
  ForEachKSubset(ground, s, [&](SubsetMask a) {
    std::set<SubsetMask> tried;
    for (SubsetMask u : unions) {
      const SubsetMask x = u - a;
      if (!tried.insert(x).second) continue;
      const SubsetMask y = ground - a - x;
      const Description minor = MinorByCircuits(host, x, y);
      if (auto iso = pattern.Match(minor.sets)) {
        found = MinorWitness{x, y, std::move(*iso)};
        return false;
      }
    }
    return true;
  });
  return found;
}

}  // namespace

std::string MinorWitness::ToString(int n) const {
  std::string out = "x=" + ToBitstring(x, n) + " y=" + ToBitstring(y, n) +
                    " iso=";
  for (size_t i = 0; i < iso.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(iso[i]);
  }
  return out;
}

std::optional<MinorWitness> DetectMinorFixed(const Description& host,
                                             const MatroidView& pattern) {
  if (host.kind != Kind::kCircuits && host.kind != Kind::kHyperplanes) {
    throw InputError("fixed minor detection needs a circuits or hyperplanes "
                     "host, got " + std::string(KindName(host.kind)));
  }
  if (pattern.size() > host.n) return std::nullopt;
  if (host.kind == Kind::kCircuits) {
    return FixedOnCircuits(host, Pattern(pattern));
  }
  // M / X \ Y ~ N iff M* / Y \ X ~ N*, under the same bijection.
  auto witness =
      FixedOnCircuits(DualDescription(host), Pattern(Materialize(Dual(pattern))));
  if (witness) std::swap(witness->x, witness->y);
  return witness;
}

std::optional<MinorWitness> DetectMinorExhaustive(const MatroidView& host,
                                                  const MatroidView& pattern) {
  const int n = host.size();
  const int s = pattern.size();
  if (s > n) return std::nullopt;
  const MatroidView m = Materialize(host);
  const Pattern target(pattern);
  const SubsetMask ground = m.ground();
  std::optional<MinorWitness> found;
  ForEachKSubset(ground, s, [&](SubsetMask a) {
    bool stop = false;
    ForEachSubset(ground - a, [&](SubsetMask x) {
      if (stop || m.Rank(a | x) - m.Rank(x) != target.rank) return;
      const SubsetMask y = ground - a - x;
      const MatroidView minor = Minor(m, x, y);
      const Description circuits =
          EncodeFromRankTable(s, RankTable(minor), Kind::kCircuits);
      if (auto iso = target.Match(circuits.sets)) {
        found = MinorWitness{x, y, std::move(*iso)};
        stop = true;
      }
    });
    return !stop;
  });
  return found;
}

bool VerifyMinorWitness(const MatroidView& host, const MatroidView& pattern,
                        const MinorWitness& witness) {
  const int n = host.size();
  if (!witness.x.fits(n) || !witness.y.fits(n) ||
      witness.x.intersects(witness.y)) {
    return false;
  }
  const SubsetMask a = host.ground() - witness.x - witness.y;
  if (a.size() != pattern.size()) return false;
  return IsIsomorphism(Minor(host, witness.x, witness.y), pattern,
                       witness.iso);
}

}  // namespace matroid
