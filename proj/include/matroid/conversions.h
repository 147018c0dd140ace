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

// Polynomial conversions between description kinds. Each covering pair of the
// input-type order has a direct algorithm on the listed sets; any other pair
// is routed along the order when reachable and falls back to exhaustive
// re-encoding otherwise.

#ifndef MATROID_CONVERSIONS_H_
#define MATROID_CONVERSIONS_H_

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "matroid/description.h"
#include "matroid/matroid_view.h"

namespace matroid {

struct Edge {
  Kind from;
  Kind to;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// The twelve covering pairs, in declaration order.
inline constexpr std::array<Edge, 12> kOrderEdges = {{
    {Kind::kRank, Kind::kSpanningSets},
    {Kind::kRank, Kind::kIndependentSets},
    {Kind::kSpanningSets, Kind::kBases},
    {Kind::kIndependentSets, Kind::kBases},
    {Kind::kIndependentSets, Kind::kFlats},
    {Kind::kBases, Kind::kCircuits},
    {Kind::kBases, Kind::kCyclicFlats},
    {Kind::kBases, Kind::kHyperplanes},
    {Kind::kFlats, Kind::kCyclicFlats},
    {Kind::kFlats, Kind::kHyperplanes},
    {Kind::kCircuits, Kind::kNonSpanningCircuits},
    {Kind::kHyperplanes, Kind::kDependentHyperplanes},
}};

bool IsOrderEdge(Kind from, Kind to);
// from <= to in the reflexive-transitive closure of the covering pairs.
bool Reachable(Kind from, Kind to);

struct ConversionPlan {
  // Empty with exhaustive == false is the identity plan.
  std::vector<Edge> steps;
  bool exhaustive = false;

  // "bases -> circuits -> nsc", "exhaustive(rank -> bases)", "identity".
  std::string ToString(Kind from, Kind to) const;
};

// Shortest path along the order; among shortest paths the one whose sequence
// of edge indices is lexicographically smallest. Exhaustive marker when
// `to` is not reachable from `from`.
ConversionPlan Plan(Kind from, Kind to);

// Applies the algorithm for one covering pair. Throws PlanError otherwise.
Description ConvertEdge(const Description& desc, Kind target);

struct ConversionResult {
  Description description;
  ConversionPlan plan;
};

// Executes Plan(desc.kind, to), or the exhaustive route when forced.
ConversionResult Convert(const Description& desc, Kind to,
                         bool force_exhaustive = false);

// Bases -> circuits by fundamental circuits: for each basis B and e not in B,
// f is in C(e, B) iff B + e - f is a basis.
std::vector<SubsetMask> FundamentalCircuits(int n,
                                            const std::vector<SubsetMask>& bases);

struct CyclicFlatTrace {
  int passes = 0;             // join passes that added a new set
  std::size_t max_list = 0;   // longest working list seen
  std::size_t bases = 0;      // b(M)
  int rank = 0;               // r(M)
};

// Bases -> cyclic flats: seed with the closures of all circuits plus cl(empty)
// and close the list under cl(Z1 | Z2). Throws MatroidError if the working
// list ever exceeds b(M), which cannot happen for a valid bases list.
Description CyclicFlatsFromBases(const Description& bases,
                                 CyclicFlatTrace* trace = nullptr);

// (z(M), b(M)) by exhaustive enumeration. Throws MatroidError if z > b.
std::pair<std::int64_t, std::int64_t> CountCyclicFlatsVsBases(
    const MatroidView& view);

}  // namespace matroid

#endif  // MATROID_CONVERSIONS_H_
