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

#include "matroid/reductions.h"

#include <algorithm>

#include "matroid/encode.h"
#include "matroid/errors.h"
#include "matroid/families.h"

namespace matroid {
namespace {

std::vector<std::vector<bool>> AdjacencyMatrix(const MultiGraph& g) {
  std::vector<std::vector<bool>> adj(
      static_cast<size_t>(g.vertices),
      std::vector<bool>(static_cast<size_t>(g.vertices), false));
  for (auto [u, w] : g.edges) {
    adj[static_cast<size_t>(u)][static_cast<size_t>(w)] = true;
    adj[static_cast<size_t>(w)][static_cast<size_t>(u)] = true;
  }
  return adj;
}

bool Extend(const MultiGraph& h, const std::vector<std::vector<bool>>& g_adj,
            std::vector<int>& map, std::vector<bool>& used) {
  const int next = static_cast<int>(
      std::find(map.begin(), map.end(), -1) - map.begin());
  if (next == h.vertices) return true;
  for (int x = 0; x < static_cast<int>(g_adj.size()); ++x) {
    if (used[static_cast<size_t>(x)]) continue;
    map[static_cast<size_t>(next)] = x;
    bool ok = true;
    for (auto [u, w] : h.edges) {
      const int a = map[static_cast<size_t>(u)];
      const int b = map[static_cast<size_t>(w)];
      if (a >= 0 && b >= 0 && !g_adj[static_cast<size_t>(a)][static_cast<size_t>(b)]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      used[static_cast<size_t>(x)] = true;
      if (Extend(h, g_adj, map, used)) return true;
      used[static_cast<size_t>(x)] = false;
    }
    map[static_cast<size_t>(next)] = -1;
  }
  return false;
}

}  // namespace

std::pair<Description, Description> ReduceSubgraphIso(const MultiGraph& g,
                                                      const MultiGraph& h) {
  return {EncodeFromOracle(Phi(g), Kind::kIndependentSets),
          EncodeFromOracle(Phi(h), Kind::kIndependentSets)};
}

IndependentSetReduction ReduceIndependentSet(const MultiGraph& g, int k,
                                             int r) {
  if (k < 0 || k > g.vertices) {
    throw InputError("independent set size must lie in [0, v]");
  }
  const MatroidView phi = PhiR(g, r);
  const int t = SubdivisionLength(r);
  return {EncodeFromOracle(phi, Kind::kIndependentSets),
          {r, k + g.edge_count() * t}};
}

std::optional<std::vector<int>> FindSubgraph(const MultiGraph& g,
                                             const MultiGraph& h) {
  if (!g.IsSimple() || !h.IsSimple()) {
    throw InputError("subgraph search needs simple graphs");
  }
  if (h.vertices > g.vertices) return std::nullopt;
  std::vector<int> map(static_cast<size_t>(h.vertices), -1);
  std::vector<bool> used(static_cast<size_t>(g.vertices), false);
  if (!Extend(h, AdjacencyMatrix(g), map, used)) return std::nullopt;
  return map;
}

std::optional<std::vector<int>> FindIndependentVertices(const MultiGraph& g,
                                                        int k) {
  CheckCapacity(g.vertices, "independent vertex search");
  const auto adj = AdjacencyMatrix(g);
  std::optional<std::vector<int>> found;
  ForEachKSubset(SubsetMask::Full(g.vertices), k, [&](SubsetMask s) {
    const std::vector<int> vs = s.elements();
    for (size_t i = 0; i < vs.size(); ++i) {
      for (size_t j = i + 1; j < vs.size(); ++j) {
        if (adj[static_cast<size_t>(vs[i])][static_cast<size_t>(vs[j])]) {
          return true;
        }
      }
    }
    found = vs;
    return false;
  });
  return found;
}

}  // namespace matroid
