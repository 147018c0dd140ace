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

// Multigraphs (loops and parallel edges allowed) and the graph text format:
//
//   graph n=<v>
//   <u> <w>
//   ...
//
// Vertices are 0-indexed; u == w is a loop; repeated lines are parallel
// edges. '#' comment lines and blank lines are ignored.

#ifndef MATROID_GRAPH_H_
#define MATROID_GRAPH_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace matroid {

struct MultiGraph {
  int vertices = 0;
  // Each edge stored with first <= second.
  std::vector<std::pair<int, int>> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  // No loops and no parallel edges.
  bool IsSimple() const;

  friend bool operator==(const MultiGraph&, const MultiGraph&) = default;
};

// Normalizes endpoint order; throws InputError on an endpoint out of range.
MultiGraph MakeGraph(int vertices, std::vector<std::pair<int, int>> edges);

MultiGraph CompleteGraph(int vertices);
// Path on `vertices` vertices: 0-1, 1-2, ...
MultiGraph PathGraph(int vertices);

// Throws ParseError.
MultiGraph ParseGraph(std::string_view text);
MultiGraph ReadGraphFile(const std::string& path);
std::string SerializeGraph(const MultiGraph& g);

// Adds `per_vertex` loops at every vertex. Edge order: loop round 0 (one loop
// at each vertex in vertex order), round 1, ..., then the original edges.
MultiGraph AddLoops(const MultiGraph& g, int per_vertex);

// Replaces each non-loop edge by a path of t edges through t - 1 new
// vertices, appended after the existing ones. Each edge is replaced in place
// by its path, ordered from the lower endpoint.
MultiGraph Subdivide(const MultiGraph& g, int t);

// Exact isomorphism test by colour refinement with individualization.
// Returns mapping[v of a] = vertex of b.
std::optional<std::vector<int>> GraphIsomorphism(const MultiGraph& a,
                                                 const MultiGraph& b);

}  // namespace matroid

#endif  // MATROID_GRAPH_H_
