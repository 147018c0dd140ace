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

#ifndef MATROID_FAMILIES_H_
#define MATROID_FAMILIES_H_

#include <array>
#include <optional>
#include <string_view>

#include "matroid/description.h"
#include "matroid/graph.h"
#include "matroid/matroid_view.h"

namespace matroid {

// U_{r,n}: r(A) = min(|A|, r). Throws InputError unless 0 <= r <= n.
MatroidView Uniform(int r, int n);

// The separation families, each indexed by n.
enum class Family {
  kCorankOneUniform,       // U_{n-1,n}
  kRankOneUniform,         // U_{1,n}
  kTruncatedBlowupSum,     // T(nU_{n-1,n} + U_{2,2})
  kHalfUniformPlusParallel,// U_{n,2n} with element 0 doubled
  kDoubledCorankOne,       // 2U_{n-1,n}
  kHalfUniform,            // U_{n,2n}
};

inline constexpr std::array<Family, 6> kAllFamilies = {
    Family::kCorankOneUniform,        Family::kRankOneUniform,
    Family::kTruncatedBlowupSum,      Family::kHalfUniformPlusParallel,
    Family::kDoubledCorankOne,        Family::kHalfUniform,
};

struct FamilyInfo {
  std::string_view tag;   // short tag: L10, L11, L15, L17, L18, L20
  std::string_view name;  // descriptive name
  int min_n;
  int default_lo;
  int default_hi;
};

const FamilyInfo& InfoOf(Family family);
// Accepts either the short tag or the descriptive name.
std::optional<Family> FamilyFromName(std::string_view name);

struct FamilyId {
  Family family;
  int n;
};

// Throws InputError below the family's minimum n and CapacityError when the
// ground set would not fit.
MatroidView SeparationFamily(FamilyId id);
int FamilyGroundSize(FamilyId id);

// Edge set independent iff every connected component of the edge-induced
// subgraph has at most as many edges as vertices. Ground set = edges in
// list order.
MatroidView Bicircular(const MultiGraph& g);

// Rank-3 matroid on x_0..x_{v-1}, x'_0..x'_{v-1}, y_0..y_{m-1} given by its
// non-spanning circuits: {x_i, x'_i} and, for edge k = ij, the four triples
// {z_i, z_j, y_k} with z in {x, x'}. Throws InputError unless g is simple
// with at least 3 vertices.
Description PhiDescription(const MultiGraph& g);
MatroidView Phi(const MultiGraph& g);

// ceil((r - 1) / 2).
int SubdivisionLength(int r);

// Truncation to rank r of the bicircular matroid of g with one loop per
// vertex and each edge subdivided into a path of SubdivisionLength(r) edges.
// Elements: the v loops, then each edge's path in edge order.
MatroidView PhiR(const MultiGraph& g, int r);

}  // namespace matroid

#endif  // MATROID_FAMILIES_H_
