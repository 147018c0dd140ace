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

// A description as an unlabeled bipartite graph, so that two descriptions of
// one kind are equal up to renaming elements iff their graphs are
// isomorphic.
//
// Layout:
//   * one vertex per element and one per listed set, joined by membership;
//   * a root vertex adjacent to every set vertex, carrying two pendant paths
//     of lengths kRootMarker and kRootMarker + 1 + h, where h is the header
//     rank for nsc and dephyp and 0 otherwise;
//   * for kinds with set ranks, one pendant path of length p + 3 on the set
//     vertex for each 1-bit p of the rank.
//
// Rank paths are at most 7 long and membership chains at most 2, so the root
// is the only vertex reached from a leaf by a bare path of length
// kRootMarker. A neighbour of a set vertex is an element iff all its
// neighbours are set vertices.

#ifndef MATROID_BIPARTITE_ENCODING_H_
#define MATROID_BIPARTITE_ENCODING_H_

#include <vector>

#include "matroid/description.h"
#include "matroid/graph.h"

namespace matroid {

inline constexpr int kRootMarker = 16;

enum class VertexRole { kElement, kSet, kRoot, kMarker, kRankBit };

struct EncodedBipartiteGraph {
  MultiGraph graph;
  // Kept for self-checks only; DecodeBipartite ignores them.
  std::vector<VertexRole> roles;
};

// Vertex order: elements 0..n-1, root, sets in list order, then gadgets.
EncodedBipartiteGraph EncodeBipartite(const Description& desc);

// Rebuilds a description of `kind` from the bare graph. Elements are
// numbered in increasing vertex order. Throws InputError if the graph does
// not have the layout above.
Description DecodeBipartite(const MultiGraph& graph, Kind kind);

}  // namespace matroid

#endif  // MATROID_BIPARTITE_ENCODING_H_
