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

#ifndef MATROID_OPERATIONS_H_
#define MATROID_OPERATIONS_H_

#include "matroid/description.h"
#include "matroid/matroid_view.h"
#include "matroid/subset_mask.h"

namespace matroid {

// M*. Description-backed views are dualized by complementing their lists
// (see DualDescription); other views use r*(A) = |A| + r(E - A) - r(E).
MatroidView Dual(const MatroidView& view);

// Description of M* in the same kind:
//   bases        complements of bases
//   circuits     complements of hyperplanes, and vice versa
//   independent  complements of spanning sets, and vice versa
//   nsc/dephyp   complements, with r* = n - r
//   cyclicflats  complements, r*(E - Z) = |E - Z| - r(M) + r(Z)
//   rank         r*(A) = |A| + r(E - A) - r(E)
//   flats        re-encoded from the dual rank function
Description DualDescription(const Description& desc);

// M / contract \ remove on E - contract - remove. Surviving elements keep
// their relative order; element_map() gives their old indices.
// Throws InputError if the sets overlap or exceed the ground set.
MatroidView Minor(const MatroidView& view, SubsetMask contract,
                  SubsetMask remove);

// Minor computed on a circuit list: contraction element by element via
// "circuits of M/e are the minimal nonempty sets C - e", deletion by keeping
// circuits that avoid the deleted set. Returns a re-indexed circuits
// description.
Description MinorByCircuits(const Description& circuits, SubsetMask contract,
                            SubsetMask remove);

// A is independent iff it is independent in M and |A| <= target_rank.
MatroidView Truncate(const MatroidView& view, int target_rank);

// Elements of `b` are shifted by a.size().
MatroidView DirectSum(const MatroidView& a, const MatroidView& b);

// Each element e becomes the parallel class {e*m, ..., e*m + m - 1}.
MatroidView ParallelBlowup(const MatroidView& view, int m);

// Adds element size() parallel to `e`. Throws InputError if e is a loop.
MatroidView AddParallel(const MatroidView& view, int e);

// Minimal members (under inclusion) of a family, canonical order.
std::vector<SubsetMask> MinimalSets(std::vector<SubsetMask> sets);

}  // namespace matroid

#endif  // MATROID_OPERATIONS_H_
