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

// Instance builders that turn graph problems into matroid minor problems,
// plus the graph-side brute force used to check them.

#ifndef MATROID_REDUCTIONS_H_
#define MATROID_REDUCTIONS_H_

#include <optional>
#include <utility>
#include <vector>

#include "matroid/description.h"
#include "matroid/graph.h"
#include "matroid/matroid_view.h"

namespace matroid {

// (Phi(g), Phi(h)) as independent-set lists. g has a subgraph isomorphic to
// h iff Phi(g) has a minor isomorphic to Phi(h).
std::pair<Description, Description> ReduceSubgraphIso(const MultiGraph& g,
                                                      const MultiGraph& h);

struct UniformMinorTarget {
  int rank = 0;
  int size = 0;
};

struct IndependentSetReduction {
  Description phi_r;  // independent sets of PhiR(g, r)
  UniformMinorTarget target;
};

// g has k pairwise non-adjacent vertices iff PhiR(g, r) has a U_{r, k + m t}
// minor, m = edge count, t = SubdivisionLength(r).
IndependentSetReduction ReduceIndependentSet(const MultiGraph& g, int k,
                                             int r);

// Injective vertex map h -> g sending edges to edges (not necessarily
// induced), by brute force. Both graphs must be simple.
std::optional<std::vector<int>> FindSubgraph(const MultiGraph& g,
                                             const MultiGraph& h);

// k pairwise non-adjacent vertices; the first such set in increasing mask
// order.
std::optional<std::vector<int>> FindIndependentVertices(const MultiGraph& g,
                                                        int k);

}  // namespace matroid

#endif  // MATROID_REDUCTIONS_H_
