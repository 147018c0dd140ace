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

#ifndef MATROID_ISOMORPHISM_H_
#define MATROID_ISOMORPHISM_H_

#include <optional>
#include <vector>

#include "matroid/matroid_view.h"
#include "matroid/subset_mask.h"

namespace matroid {

// Per-element invariant used to prune the search: loop status, size of the
// closure of the singleton, number of circuits through the element, and the
// sorted sizes of those circuits.
struct ElementInvariant {
  bool loop = false;
  int closure_size = 0;
  int circuit_degree = 0;
  std::vector<int> circuit_sizes;

  friend auto operator<=>(const ElementInvariant&,
                          const ElementInvariant&) = default;
};

std::vector<ElementInvariant> ElementInvariants(
    int n, const std::vector<SubsetMask>& circuits);

// Bijection f (f[e of a] = element of b) mapping the circuits of a onto the
// circuits of b, found by backtracking with invariant pruning. Exponential in
// the worst case.
std::optional<std::vector<int>> CircuitIsomorphism(
    int n, const std::vector<SubsetMask>& a_circuits,
    const std::vector<SubsetMask>& b_circuits);

// Computes both circuit lists exhaustively, then CircuitIsomorphism.
std::optional<std::vector<int>> Isomorphic(const MatroidView& a,
                                           const MatroidView& b);

// Image of `a` under the element map f.
SubsetMask MapMask(SubsetMask a, const std::vector<int>& f);

// True iff f is a bijection with r_b(f(A)) = r_a(A) for every A.
bool IsIsomorphism(const MatroidView& a, const MatroidView& b,
                   const std::vector<int>& f);

}  // namespace matroid

#endif  // MATROID_ISOMORPHISM_H_
