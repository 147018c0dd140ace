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

#include "matroid/bipartite_encoding.h"

#include <algorithm>

#include "matroid/errors.h"

namespace matroid {
namespace {

class Builder {
 public:
  int AddVertex(VertexRole role) {
    out_.roles.push_back(role);
    return out_.graph.vertices++;
  }
  void AddEdge(int u, int w) {
    out_.graph.edges.emplace_back(std::min(u, w), std::max(u, w));
  }
  // Path of `length` edges hanging from `from`.
  void AddPendant(int from, int length, VertexRole role) {
    int prev = from;
    for (int i = 0; i < length; ++i) {
      const int v = AddVertex(role);
      AddEdge(prev, v);
      prev = v;
    }
  }
  EncodedBipartiteGraph Take() { return std::move(out_); }

 private:
  EncodedBipartiteGraph out_;
};

struct Walk {
  int length = 0;
  int end = -1;
  std::vector<int> inner;  // the leaf and every degree-2 vertex passed
};

class Decoder {
 public:
  explicit Decoder(const MultiGraph& g)
      : g_(g), adj_(static_cast<size_t>(g.vertices)) {
    for (auto [u, w] : g.edges) {
      if (u == w) throw InputError("bipartite decode: unexpected loop");
      adj_[static_cast<size_t>(u)].push_back(w);
      adj_[static_cast<size_t>(w)].push_back(u);
    }
  }

  int degree(int v) const {
    return static_cast<int>(adj_[static_cast<size_t>(v)].size());
  }
  const std::vector<int>& neighbours(int v) const {
    return adj_[static_cast<size_t>(v)];
  }

  // Follows the bare path starting at `start` (entered from `from`, or a
  // leaf when from == -1) until a vertex whose degree is not 2.
  Walk Follow(int start, int from) const {
    Walk w;
    int prev = from;
    int cur = start;
    if (from >= 0) w.length = 1;
    while (true) {
      w.inner.push_back(cur);
      int next = -1;
      for (int u : neighbours(cur)) {
        if (u != prev) {
          next = u;
          break;
        }
      }
      if (next < 0) {  // cur is a leaf reached from `from`
        w.end = cur;
        w.inner.pop_back();
        return w;
      }
      ++w.length;
      prev = cur;
      cur = next;
      if (degree(cur) != 2) {
        w.end = cur;
        return w;
      }
    }
  }

 private:
  const MultiGraph& g_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

EncodedBipartiteGraph EncodeBipartite(const Description& desc) {
  Builder b;
  for (int e = 0; e < desc.n; ++e) b.AddVertex(VertexRole::kElement);
  const int root = b.AddVertex(VertexRole::kRoot);
  std::vector<int> set_vertex;
  for (size_t i = 0; i < desc.sets.size(); ++i) {
    const int s = b.AddVertex(VertexRole::kSet);
    set_vertex.push_back(s);
    b.AddEdge(root, s);
    for (int e : desc.sets[i]) b.AddEdge(s, e);
  }
  const int header = HasHeaderRank(desc.kind) ? desc.rank.value_or(0) : 0;
  b.AddPendant(root, kRootMarker, VertexRole::kMarker);
  b.AddPendant(root, kRootMarker + 1 + header, VertexRole::kMarker);
  if (HasSetRanks(desc.kind)) {
    for (size_t i = 0; i < desc.sets.size(); ++i) {
      for (int bit = 0; (desc.set_ranks[i] >> bit) != 0; ++bit) {
        if ((desc.set_ranks[i] >> bit) & 1) {
          b.AddPendant(set_vertex[i], bit + 3, VertexRole::kRankBit);
        }
      }
    }
  }
  return b.Take();
}

Description DecodeBipartite(const MultiGraph& graph, Kind kind) {
  const Decoder d(graph);
  const int v = graph.vertices;
  std::vector<VertexRole> role(static_cast<size_t>(v), VertexRole::kElement);
  auto fail = [](const std::string& what) -> InputError {
    return InputError("bipartite decode: " + what);
  };

  int root = -1;
  int header = 0;
  std::vector<Walk> leaf_walks;
  for (int u = 0; u < v; ++u) {
    if (d.degree(u) == 1) leaf_walks.push_back(d.Follow(u, -1));
  }
  for (const Walk& w : leaf_walks) {
    if (w.length == kRootMarker && d.degree(w.end) >= 3) {
      if (root >= 0 && root != w.end) throw fail("two root candidates");
      root = w.end;
    }
  }
  if (root < 0) {
    // No sets: the root joins its two markers into one bare path.
    for (const Walk& w : leaf_walks) {
      if (d.degree(w.end) == 1 && w.length >= 2 * kRootMarker + 1) {
        for (int u : w.inner) role[static_cast<size_t>(u)] = VertexRole::kMarker;
        role[static_cast<size_t>(w.end)] = VertexRole::kMarker;
        root = w.inner[static_cast<size_t>(kRootMarker)];
        role[static_cast<size_t>(root)] = VertexRole::kRoot;
        header = w.length - 2 * kRootMarker - 1;
        break;
      }
    }
    if (root < 0) throw fail("no root marker");
  } else {
    role[static_cast<size_t>(root)] = VertexRole::kRoot;
    int long_markers = 0;
    for (const Walk& w : leaf_walks) {
      if (w.end != root || w.length < kRootMarker) continue;
      for (int u : w.inner) role[static_cast<size_t>(u)] = VertexRole::kMarker;
      if (w.length > kRootMarker) {
        header = w.length - kRootMarker - 1;
        ++long_markers;
      }
    }
    if (long_markers != 1) throw fail("expected one header marker");
  }

  std::vector<int> sets;
  for (int s : d.neighbours(root)) {
    if (role[static_cast<size_t>(s)] == VertexRole::kMarker) continue;
    role[static_cast<size_t>(s)] = VertexRole::kSet;
    sets.push_back(s);
  }
  std::sort(sets.begin(), sets.end());

  std::vector<std::vector<int>> members(sets.size());
  std::vector<int> ranks(sets.size(), 0);
  for (size_t i = 0; i < sets.size(); ++i) {
    const int s = sets[i];
    for (int u : d.neighbours(s)) {
      if (u == root) continue;
      const auto& nb = d.neighbours(u);
      const bool element = std::all_of(nb.begin(), nb.end(), [&](int x) {
        return role[static_cast<size_t>(x)] == VertexRole::kSet;
      });
      if (element) {
        members[i].push_back(u);
        continue;
      }
      const Walk w = d.Follow(u, s);
      if (d.degree(w.end) != 1 || w.length < 3) throw fail("bad rank branch");
      for (int x : w.inner) role[static_cast<size_t>(x)] = VertexRole::kRankBit;
      role[static_cast<size_t>(w.end)] = VertexRole::kRankBit;
      ranks[i] += 1 << (w.length - 3);
    }
  }

  std::vector<int> index(static_cast<size_t>(v), -1);
  int n = 0;
  for (int u = 0; u < v; ++u) {
    if (role[static_cast<size_t>(u)] == VertexRole::kElement) {
      index[static_cast<size_t>(u)] = n++;
    }
  }
  CheckCapacity(n, "bipartite decode");
  std::vector<SubsetMask> masks;
  for (size_t i = 0; i < sets.size(); ++i) {
    SubsetMask m;
    for (int u : members[i]) {
      if (index[static_cast<size_t>(u)] < 0) throw fail("member is not an element");
      m = m.with(index[static_cast<size_t>(u)]);
    }
    masks.push_back(m);
  }
  if (!HasSetRanks(kind)) {
    if (std::any_of(ranks.begin(), ranks.end(), [](int r) { return r != 0; })) {
      throw fail("rank branches on a kind without set ranks");
    }
    ranks.clear();
  }
  std::optional<int> rank;
  if (HasHeaderRank(kind)) {
    rank = header;
  } else if (header != 0) {
    throw fail("header rank on a kind without one");
  }
  return MakeDescription(kind, n, std::move(masks), std::move(ranks), rank);
}

}  // namespace matroid
