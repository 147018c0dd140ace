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

// The ten subset-list description formats and their text serialization.
//
// Text format (UTF-8, LF):
//
//   matroid <kind> n=<n>[ r=<r>]
//   <bitstring>[:<rank>]
//   ...
//
// The bitstring has exactly n characters, leftmost = element 0. `r=` is
// required for nsc and dephyp and rejected elsewhere; `:<rank>` is required
// for rank and cyclicflats and rejected elsewhere. Lines starting with '#'
// and blank lines are ignored.

#ifndef MATROID_DESCRIPTION_H_
#define MATROID_DESCRIPTION_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matroid/subset_mask.h"

namespace matroid {

enum class Kind {
  kRank,
  kIndependentSets,
  kSpanningSets,
  kBases,
  kFlats,
  kCircuits,
  kHyperplanes,
  kNonSpanningCircuits,
  kDependentHyperplanes,
  kCyclicFlats,
};

inline constexpr std::array<Kind, 10> kAllKinds = {
    Kind::kRank,        Kind::kIndependentSets,     Kind::kSpanningSets,
    Kind::kBases,       Kind::kFlats,               Kind::kCircuits,
    Kind::kHyperplanes, Kind::kNonSpanningCircuits, Kind::kDependentHyperplanes,
    Kind::kCyclicFlats,
};

// File-format keyword: rank, independent, spanning, bases, flats, circuits,
// hyperplanes, nsc, dephyp, cyclicflats.
std::string_view KindName(Kind kind);
std::optional<Kind> KindFromName(std::string_view name);

// Kinds whose listed sets each carry a rank.
constexpr bool HasSetRanks(Kind kind) {
  return kind == Kind::kRank || kind == Kind::kCyclicFlats;
}
// Kinds whose header carries r(M).
constexpr bool HasHeaderRank(Kind kind) {
  return kind == Kind::kNonSpanningCircuits ||
         kind == Kind::kDependentHyperplanes;
}

struct Description {
  Kind kind = Kind::kBases;
  int n = 0;
  std::optional<int> rank;  // header r, only for nsc/dephyp
  std::vector<SubsetMask> sets;
  std::vector<int> set_ranks;  // aligned with sets for rank/cyclicflats

  friend bool operator==(const Description&, const Description&) = default;
};

// Builds a canonical description: sorts sets by (cardinality, mask), checks
// the structural invariants, and throws InputError on violation (duplicate
// set, mask wider than n, misaligned or missing ranks, incomplete rank table).
Description MakeDescription(Kind kind, int n, std::vector<SubsetMask> sets,
                            std::vector<int> set_ranks = {},
                            std::optional<int> rank = std::nullopt);

// Throws ParseError carrying the offending line number.
Description ParseDescription(std::string_view text);
Description ReadDescriptionFile(const std::string& path);

std::string Serialize(const Description& desc);

struct SizeMeasure {
  std::int64_t listed_sets = 0;
  std::int64_t cells = 0;  // n * listed_sets
  // Everything outside the characteristic vectors: the n and r header
  // fields plus per-set rank annotations, each in binary.
  std::int64_t header_bits = 0;
};

SizeMeasure SizeOf(const Description& desc);

}  // namespace matroid

#endif  // MATROID_DESCRIPTION_H_
