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

// Minor detection. A witness (x, y, iso) certifies M / x \ y ~ N, with iso
// mapping the minor's elements (the survivors of M in increasing order) to
// the elements of N.

#ifndef MATROID_MINORS_H_
#define MATROID_MINORS_H_

#include <optional>
#include <string>
#include <vector>

#include "matroid/description.h"
#include "matroid/matroid_view.h"
#include "matroid/subset_mask.h"

namespace matroid {

struct MinorWitness {
  SubsetMask x;  // contracted
  SubsetMask y;  // deleted
  std::vector<int> iso;

  std::string ToString(int n) const;
};

// Polynomial for a fixed pattern N with s elements and t circuits: tries
// every s-subset A of the host and every union U of at most t host circuits,
// with X = U - A and Y = E - A - X, and compares M / X \ Y (computed on the
// circuit list) with N. A hyperplanes host is handled through the duals of
// host and pattern. A pattern without circuits is free, and is a minor iff
// r(M) >= s. Throws InputError for other host kinds.
std::optional<MinorWitness> DetectMinorFixed(const Description& host,
                                             const MatroidView& pattern);

// Brute force over every s-subset A and every X in E - A.
std::optional<MinorWitness> DetectMinorExhaustive(const MatroidView& host,
                                                  const MatroidView& pattern);

// Checks disjointness, sizes, bijectivity and the rank function of the minor
// against the pattern under iso.
bool VerifyMinorWitness(const MatroidView& host, const MatroidView& pattern,
                        const MinorWitness& witness);

}  // namespace matroid

#endif  // MATROID_MINORS_H_
