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

#include "matroid/graph.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "matroid/errors.h"

namespace matroid {
namespace {

bool ParseInt(std::string_view text, int* out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), *out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// Vertices of a and b side by side, with edge multiplicities.
class UnionGraph {
 public:
  UnionGraph(const MultiGraph& a, const MultiGraph& b)
      : na_(a.vertices), total_(a.vertices + b.vertices),
        adjacency_(static_cast<size_t>(total_)),
        count_a_(static_cast<size_t>(na_) * na_, 0),
        count_b_(static_cast<size_t>(b.vertices) * b.vertices, 0) {
    Add(a, 0, count_a_, na_);
    Add(b, na_, count_b_, b.vertices);
  }

  // Iterates signature refinement until the number of colours is stable.
  std::vector<int> Refine(std::vector<int> colors) const {
    int classes = CountClasses(colors);
    while (true) {
      std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(
          static_cast<size_t>(total_));
      for (int v = 0; v < total_; ++v) {
        auto& s = sig[static_cast<size_t>(v)];
        s.first = colors[static_cast<size_t>(v)];
        for (auto [u, mult] : adjacency_[static_cast<size_t>(v)]) {
          s.second.emplace_back(colors[static_cast<size_t>(u)], mult);
        }
        std::sort(s.second.begin(), s.second.end());
      }
      auto unique = sig;
      std::sort(unique.begin(), unique.end());
      unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
      std::vector<int> next(static_cast<size_t>(total_));
      for (int v = 0; v < total_; ++v) {
        next[static_cast<size_t>(v)] = static_cast<int>(
            std::lower_bound(unique.begin(), unique.end(),
                             sig[static_cast<size_t>(v)]) -
            unique.begin());
      }
      const int next_classes = static_cast<int>(unique.size());
      colors = std::move(next);
      if (next_classes == classes) return colors;
      classes = next_classes;
    }
  }

  bool Search(std::vector<int> colors, std::vector<int>* mapping) const {
    colors = Refine(std::move(colors));
    const int max_color = *std::max_element(colors.begin(), colors.end()) + 1;
    std::vector<int> in_a(static_cast<size_t>(max_color), 0);
    std::vector<int> in_b(static_cast<size_t>(max_color), 0);
    for (int v = 0; v < total_; ++v) {
      (v < na_ ? in_a : in_b)[static_cast<size_t>(colors[v])]++;
    }
    if (in_a != in_b) return false;

    int pick_color = -1;
    for (int c = 0; c < max_color; ++c) {
      if (in_a[static_cast<size_t>(c)] > 1 &&
          (pick_color < 0 || in_a[static_cast<size_t>(c)] <
                                 in_a[static_cast<size_t>(pick_color)])) {
        pick_color = c;
      }
    }
    if (pick_color < 0) {
      std::vector<int> by_color(static_cast<size_t>(max_color), -1);
      for (int v = na_; v < total_; ++v) {
        by_color[static_cast<size_t>(colors[v])] = v - na_;
      }
      std::vector<int> map(static_cast<size_t>(na_));
      for (int v = 0; v < na_; ++v) {
        map[static_cast<size_t>(v)] = by_color[static_cast<size_t>(colors[v])];
      }
      if (!Preserves(map)) return false;
      *mapping = std::move(map);
      return true;
    }
    int v = 0;
    while (colors[static_cast<size_t>(v)] != pick_color) ++v;
    for (int w = na_; w < total_; ++w) {
      if (colors[static_cast<size_t>(w)] != pick_color) continue;
      std::vector<int> branch = colors;
      branch[static_cast<size_t>(v)] = max_color;
      branch[static_cast<size_t>(w)] = max_color;
      if (Search(std::move(branch), mapping)) return true;
    }
    return false;
  }

  int total() const { return total_; }

 private:
  static int CountClasses(std::vector<int> colors) {
    std::sort(colors.begin(), colors.end());
    return static_cast<int>(std::unique(colors.begin(), colors.end()) -
                            colors.begin());
  }

  void Add(const MultiGraph& g, int offset, std::vector<int>& count, int n) {
    std::map<std::pair<int, int>, int> mult;
    for (auto [u, w] : g.edges) {
      mult[{u, w}]++;
      count[static_cast<size_t>(u) * n + w]++;
      if (u != w) count[static_cast<size_t>(w) * n + u]++;
    }
    for (auto [edge, m] : mult) {
      auto [u, w] = edge;
      adjacency_[static_cast<size_t>(u + offset)].emplace_back(w + offset, m);
      if (u != w) {
        adjacency_[static_cast<size_t>(w + offset)].emplace_back(u + offset, m);
      }
    }
  }

  bool Preserves(const std::vector<int>& map) const {
    const int nb = total_ - na_;
    for (int u = 0; u < na_; ++u) {
      for (int w = 0; w < na_; ++w) {
        if (count_a_[static_cast<size_t>(u) * na_ + w] !=
            count_b_[static_cast<size_t>(map[u]) * nb + map[w]]) {
          return false;
        }
      }
    }
    return true;
  }

  int na_;
  int total_;
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
  std::vector<int> count_a_;
  std::vector<int> count_b_;
};

}  // namespace

bool MultiGraph::IsSimple() const {
  std::vector<std::pair<int, int>> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i].second) return false;
    if (i > 0 && sorted[i] == sorted[i - 1]) return false;
  }
  return true;
}

MultiGraph MakeGraph(int vertices, std::vector<std::pair<int, int>> edges) {
  if (vertices < 0) throw InputError("graph: negative vertex count");
  for (auto& [u, w] : edges) {
    if (u < 0 || w < 0 || u >= vertices || w >= vertices) {
      throw InputError("graph: endpoint out of range");
    }
    if (u > w) std::swap(u, w);
  }
  return MultiGraph{vertices, std::move(edges)};
}

MultiGraph CompleteGraph(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < vertices; ++u) {
    for (int w = u + 1; w < vertices; ++w) edges.emplace_back(u, w);
  }
  return MakeGraph(vertices, std::move(edges));
}

MultiGraph PathGraph(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < vertices; ++u) edges.emplace_back(u, u + 1);
  return MakeGraph(vertices, std::move(edges));
}

MultiGraph ParseGraph(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto tokens = Tokens(line);
    if (!have_header) {
      if (tokens.size() != 2 || tokens[0] != "graph" ||
          tokens[1].substr(0, 2) != "n=" ||
          !ParseInt(tokens[1].substr(2), &vertices) || vertices < 0) {
        throw ParseError(line_no, "expected 'graph n=<v>'");
      }
      have_header = true;
      continue;
    }
    int u = 0, w = 0;
    if (tokens.size() != 2 || !ParseInt(tokens[0], &u) ||
        !ParseInt(tokens[1], &w)) {
      throw ParseError(line_no, "expected '<u> <w>'");
    }
    if (u < 0 || w < 0 || u >= vertices || w >= vertices) {
      throw ParseError(line_no, "endpoint out of range");
    }
    edges.emplace_back(std::min(u, w), std::max(u, w));
  }
  if (!have_header) throw ParseError(line_no, "missing header line");
  return MultiGraph{vertices, std::move(edges)};
}

MultiGraph ReadGraphFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseGraph(buffer.str());
}

std::string SerializeGraph(const MultiGraph& g) {
  std::string out = "graph n=" + std::to_string(g.vertices) + "\n";
  for (auto [u, w] : g.edges) {
    out += std::to_string(u) + " " + std::to_string(w) + "\n";
  }
  return out;
}

MultiGraph AddLoops(const MultiGraph& g, int per_vertex) {
  if (per_vertex < 0) throw InputError("add loops: negative count");
  MultiGraph out{g.vertices, {}};
  for (int round = 0; round < per_vertex; ++round) {
    for (int v = 0; v < g.vertices; ++v) out.edges.emplace_back(v, v);
  }
  out.edges.insert(out.edges.end(), g.edges.begin(), g.edges.end());
  return out;
}

MultiGraph Subdivide(const MultiGraph& g, int t) {
  if (t < 1) throw InputError("subdivide: path length must be >= 1");
  MultiGraph out{g.vertices, {}};
  for (auto [u, w] : g.edges) {
    if (u == w || t == 1) {
      out.edges.emplace_back(u, w);
      continue;
    }
    int prev = u;
    for (int i = 1; i < t; ++i) {
      const int fresh = out.vertices++;
      out.edges.emplace_back(std::min(prev, fresh), std::max(prev, fresh));
      prev = fresh;
    }
    out.edges.emplace_back(std::min(prev, w), std::max(prev, w));
  }
  return out;
}

std::optional<std::vector<int>> GraphIsomorphism(const MultiGraph& a,
                                                 const MultiGraph& b) {
  if (a.vertices != b.vertices || a.edges.size() != b.edges.size()) {
    return std::nullopt;
  }
  if (a.vertices == 0) return std::vector<int>{};
  UnionGraph u(a, b);
  std::vector<int> mapping;
  if (!u.Search(std::vector<int>(static_cast<size_t>(u.total()), 0),
                &mapping)) {
    return std::nullopt;
  }
  return mapping;
}

}  // namespace matroid
