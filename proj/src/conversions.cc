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

#include "matroid/conversions.h"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "matroid/encode.h"
#include "matroid/errors.h"
#include "matroid/operations.h"

namespace matroid {
namespace {

std::vector<SubsetMask> Dedup(std::vector<SubsetMask> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

std::vector<SubsetMask> Complements(const std::vector<SubsetMask>& sets,
                                    int n) {
  std::vector<SubsetMask> out;
  out.reserve(sets.size());
  for (SubsetMask s : sets) out.push_back(SubsetMask::Full(n) - s);
  return out;
}

void RequireKind(const Description& d, Kind kind) {
  if (d.kind != kind) {
    throw PlanError("expected a " + std::string(KindName(kind)) +
                    " description, got " + std::string(KindName(d.kind)));
  }
}

int TableRankOfGround(const Description& d) {
  const SubsetMask ground = SubsetMask::Full(d.n);
  for (size_t i = 0; i < d.sets.size(); ++i) {
    if (d.sets[i] == ground) return d.set_ranks[i];
  }
  throw InputError("rank table lacks the ground set");
}

Description RankToSpanning(const Description& d) {
  const int r = TableRankOfGround(d);
  std::vector<SubsetMask> out;
  for (size_t i = 0; i < d.sets.size(); ++i) {
    if (d.set_ranks[i] == r) out.push_back(d.sets[i]);
  }
  return MakeDescription(Kind::kSpanningSets, d.n, std::move(out));
}

Description RankToIndependent(const Description& d) {
  std::vector<SubsetMask> out;
  for (size_t i = 0; i < d.sets.size(); ++i) {
    if (d.set_ranks[i] == d.sets[i].size()) out.push_back(d.sets[i]);
  }
  return MakeDescription(Kind::kIndependentSets, d.n, std::move(out));
}

// Bases are the minimal spanning sets and the maximal independent sets; both
// have size r(M).
Description ExtremeSizeToBases(const Description& d, bool smallest) {
  if (d.sets.empty()) throw InputError("empty family has no bases");
  int target = d.sets.front().size();
  for (SubsetMask s : d.sets) {
    target = smallest ? std::min(target, s.size()) : std::max(target, s.size());
  }
  std::vector<SubsetMask> out;
  for (SubsetMask s : d.sets) {
    if (s.size() == target) out.push_back(s);
  }
  return MakeDescription(Kind::kBases, d.n, std::move(out));
}

// e is in cl(I) iff I + e is dependent, i.e. not on the list.
Description IndependentToFlats(const Description& d) {
  std::unordered_set<SubsetMask::Word> independent;
  for (SubsetMask s : d.sets) independent.insert(s.bits());
  const SubsetMask ground = SubsetMask::Full(d.n);
  std::vector<SubsetMask> flats;
  for (SubsetMask i : d.sets) {
    SubsetMask closure = i;
    for (int e : ground - i) {
      if (!independent.count(i.with(e).bits())) closure = closure.with(e);
    }
    flats.push_back(closure);
  }
  return MakeDescription(Kind::kFlats, d.n, Dedup(std::move(flats)));
}

Description BasesToHyperplanes(const Description& d) {
  const std::vector<SubsetMask> dual_bases = Complements(d.sets, d.n);
  const std::vector<SubsetMask> cocircuits =
      FundamentalCircuits(d.n, dual_bases);
  return MakeDescription(Kind::kHyperplanes, d.n,
                         Complements(cocircuits, d.n));
}

// F is a hyperplane iff F != E and no flat lies strictly between F and E.
Description FlatsToHyperplanes(const Description& d) {
  const SubsetMask ground = SubsetMask::Full(d.n);
  std::vector<SubsetMask> out;
  for (SubsetMask f : d.sets) {
    if (f == ground) continue;
    const bool covered = std::any_of(
        d.sets.begin(), d.sets.end(), [&](SubsetMask g) {
          return f.proper_subset_of(g) && g != ground;
        });
    if (!covered) out.push_back(f);
  }
  return MakeDescription(Kind::kHyperplanes, d.n, std::move(out));
}

// A flat F is cyclic iff F - e is not a flat for every e in F. Ranks are
// heights in the lattice of flats.
Description FlatsToCyclicFlats(const Description& d) {
  std::unordered_set<SubsetMask::Word> flats;
  for (SubsetMask s : d.sets) flats.insert(s.bits());
  const MatroidView view = ViewOf(d);
  std::vector<SubsetMask> out;
  std::vector<int> ranks;
  for (SubsetMask f : d.sets) {
    bool cyclic = true;
    for (int e : f) {
      if (flats.count(f.without(e).bits())) {
        cyclic = false;
        break;
      }
    }
    if (cyclic) {
      out.push_back(f);
      ranks.push_back(view.Rank(f));
    }
  }
  return MakeDescription(Kind::kCyclicFlats, d.n, std::move(out),
                         std::move(ranks));
}

// r(M) from the greedy algorithm over "no circuit inside"; the non-spanning
// circuits are those with at most r elements.
Description CircuitsToNonSpanning(const Description& d) {
  const int r = ViewOf(d).rank();
  std::vector<SubsetMask> out;
  for (SubsetMask c : d.sets) {
    if (c.size() <= r) out.push_back(c);
  }
  return MakeDescription(Kind::kNonSpanningCircuits, d.n, std::move(out), {},
                         r);
}

Description HyperplanesToDependent(const Description& d) {
  const Description cocircuits =
      MakeDescription(Kind::kCircuits, d.n, Complements(d.sets, d.n));
  const Description dual_nsc = CircuitsToNonSpanning(cocircuits);
  return MakeDescription(Kind::kDependentHyperplanes, d.n,
                         Complements(dual_nsc.sets, d.n), {},
                         d.n - *dual_nsc.rank);
}

}  // namespace

bool IsOrderEdge(Kind from, Kind to) {
  return std::find(kOrderEdges.begin(), kOrderEdges.end(), Edge{from, to}) !=
         kOrderEdges.end();
}

bool Reachable(Kind from, Kind to) {
  return from == to || !Plan(from, to).exhaustive;
}

std::string ConversionPlan::ToString(Kind from, Kind to) const {
  if (exhaustive) {
    return "exhaustive(" + std::string(KindName(from)) + " -> " +
           std::string(KindName(to)) + ")";
  }
  if (steps.empty()) return "identity";
  std::string out(KindName(steps.front().from));
  for (const Edge& e : steps) out += " -> " + std::string(KindName(e.to));
  return out;
}

ConversionPlan Plan(Kind from, Kind to) {
  ConversionPlan plan;
  if (from == to) return plan;
  // The order is a small DAG; enumerate every path.
  std::vector<size_t> best;
  bool found = false;
  std::vector<size_t> path;
  std::function<void(Kind)> walk = [&](Kind at) {
    if (at == to) {
      if (!found || path.size() < best.size() ||
          (path.size() == best.size() && path < best)) {
        best = path;
        found = true;
      }
      return;
    }
    for (size_t i = 0; i < kOrderEdges.size(); ++i) {
      if (kOrderEdges[i].from != at) continue;
      path.push_back(i);
      walk(kOrderEdges[i].to);
      path.pop_back();
    }
  };
  walk(from);
  if (!found) {
    plan.exhaustive = true;
    return plan;
  }
  for (size_t i : best) plan.steps.push_back(kOrderEdges[i]);
  return plan;
}

std::vector<SubsetMask> FundamentalCircuits(
    int n, const std::vector<SubsetMask>& bases) {
  std::unordered_set<SubsetMask::Word> is_basis;
  for (SubsetMask b : bases) is_basis.insert(b.bits());
  const SubsetMask ground = SubsetMask::Full(n);
  std::vector<SubsetMask> circuits;
  for (SubsetMask b : bases) {
    for (int e : ground - b) {
      SubsetMask circuit = SubsetMask::Singleton(e);
      for (int f : b) {
        if (is_basis.count(b.with(e).without(f).bits())) {
          circuit = circuit.with(f);
        }
      }
      circuits.push_back(circuit);
    }
  }
  return Dedup(std::move(circuits));
}

Description CyclicFlatsFromBases(const Description& d,
                                 CyclicFlatTrace* trace) {
  RequireKind(d, Kind::kBases);
  const MatroidView view = ViewOf(d);
  const std::size_t b = d.sets.size();
  CyclicFlatTrace local;
  local.bases = b;
  local.rank = view.rank();

  auto check_bound = [&](std::size_t size) {
    local.max_list = std::max(local.max_list, size);
    if (size > b) {
      throw MatroidError("cyclic-flat list exceeds the number of bases");
    }
  };

  std::vector<SubsetMask> list;
  list.push_back(view.Closure(SubsetMask()));
  for (SubsetMask c : FundamentalCircuits(d.n, d.sets)) {
    list.push_back(view.Closure(c));
  }
  list = Dedup(std::move(list));
  check_bound(list.size());

  // Runs until stable; the bound on the list length guarantees termination.
  while (true) {
    std::vector<SubsetMask> next = list;
    for (size_t i = 0; i < list.size(); ++i) {
      for (size_t j = i + 1; j < list.size(); ++j) {
        next.push_back(view.Closure(list[i] | list[j]));
      }
    }
    next = Dedup(std::move(next));
    if (next.size() == list.size()) break;
    ++local.passes;
    list = std::move(next);
    check_bound(list.size());
  }

  std::vector<int> ranks;
  ranks.reserve(list.size());
  for (SubsetMask z : list) ranks.push_back(view.Rank(z));
  if (trace) *trace = local;
  return MakeDescription(Kind::kCyclicFlats, d.n, std::move(list),
                         std::move(ranks));
}

Description ConvertEdge(const Description& d, Kind target) {
  if (!IsOrderEdge(d.kind, target)) {
    throw PlanError(std::string(KindName(d.kind)) + " -> " +
                    std::string(KindName(target)) +
                    " is not a covering pair of the order");
  }
  switch (d.kind) {
    case Kind::kRank:
      return target == Kind::kSpanningSets ? RankToSpanning(d)
                                           : RankToIndependent(d);
    case Kind::kSpanningSets:
      return ExtremeSizeToBases(d, /*smallest=*/true);
    case Kind::kIndependentSets:
      return target == Kind::kBases ? ExtremeSizeToBases(d, false)
                                    : IndependentToFlats(d);
    case Kind::kBases:
      if (target == Kind::kCircuits) {
        return MakeDescription(Kind::kCircuits, d.n,
                               FundamentalCircuits(d.n, d.sets));
      }
      if (target == Kind::kHyperplanes) return BasesToHyperplanes(d);
      return CyclicFlatsFromBases(d);
    case Kind::kFlats:
      return target == Kind::kHyperplanes ? FlatsToHyperplanes(d)
                                          : FlatsToCyclicFlats(d);
    case Kind::kCircuits:
      return CircuitsToNonSpanning(d);
    case Kind::kHyperplanes:
      return HyperplanesToDependent(d);
    default:
      break;
  }
  throw PlanError("no conversion from " + std::string(KindName(d.kind)));
}

ConversionResult Convert(const Description& desc, Kind to,
                         bool force_exhaustive) {
  ConversionResult result{desc, Plan(desc.kind, to)};
  if (force_exhaustive && desc.kind != to) {
    result.plan = ConversionPlan{{}, true};
  }
  if (result.plan.exhaustive) {
    result.description = EncodeFromOracle(ViewOf(desc), to);
    return result;
  }
  for (const Edge& e : result.plan.steps) {
    result.description = ConvertEdge(result.description, e.to);
  }
  return result;
}

std::pair<std::int64_t, std::int64_t> CountCyclicFlatsVsBases(
    const MatroidView& view) {
  const auto table = RankTable(view);
  const std::int64_t z =
      CountFromRankTable(view.size(), table, Kind::kCyclicFlats);
  const std::int64_t b = CountFromRankTable(view.size(), table, Kind::kBases);
  if (z > b) throw MatroidError("cyclic flats outnumber bases");
  return {z, b};
}

}  // namespace matroid
