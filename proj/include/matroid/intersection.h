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

// Three-matroid intersection and three-dimensional matching.
//
// Triple system text format:
//
//   3dm s=<s>
//   <a> <b> <c>
//   ...
//
// with 0 <= a, b, c < s indexing the three sides.

#ifndef MATROID_INTERSECTION_H_
#define MATROID_INTERSECTION_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matroid/description.h"
#include "matroid/matroid_view.h"

namespace matroid {

struct TripleSystem {
  int s = 0;
  std::vector<std::array<int, 3>> triples;

  friend bool operator==(const TripleSystem&, const TripleSystem&) = default;
};

// Throws InputError on s < 1, no triples, or an index out of range.
TripleSystem MakeTripleSystem(int s, std::vector<std::array<int, 3>> triples);
// Throws ParseError.
TripleSystem ParseTripleSystem(std::string_view text);
TripleSystem ReadTripleSystemFile(const std::string& path);
std::string SerializeTripleSystem(const TripleSystem& system);

// Indices of s pairwise disjoint triples, by brute force, or none.
std::optional<std::vector<int>> FindMatching(const TripleSystem& system);

// First k-subset (increasing numeric order) independent in all three.
// Throws InputError when the ground sets differ.
std::optional<SubsetMask> Intersect3Bruteforce(const MatroidView& m1,
                                               const MatroidView& m2,
                                               const MatroidView& m3, int k);

// Maximizes |B1 & B2 & B3| over all triples of bases and returns the k
// lowest elements of the first maximizer when it has at least k. Throws
// InputError unless all three are bases descriptions on one ground set.
std::optional<SubsetMask> Intersect3Bases(const Description& b1,
                                          const Description& b2,
                                          const Description& b3, int k);

// Three partition matroids on the triples: in M_i two triples are parallel
// iff they agree in coordinate i, so a common independent set of size s is
// exactly a perfect matching.
struct ThreeDmReduction {
  std::array<Description, 3> circuits;
  std::array<Description, 3> hyperplanes;
  // (side, value) for every side value that no triple uses. Any of these
  // makes size s unreachable.
  std::vector<std::array<int, 2>> empty_classes;
  int target = 0;
};

ThreeDmReduction Reduce3dm(const TripleSystem& system);

}  // namespace matroid

#endif  // MATROID_INTERSECTION_H_
