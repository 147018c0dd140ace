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

#include "matroid/intersection.h"

#include <charconv>
#include <fstream>
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

bool MatchFrom(const TripleSystem& system, size_t next,
               std::array<std::vector<bool>, 3>& used, std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) == system.s) return true;
  for (size_t k = next; k < system.triples.size(); ++k) {
    const auto& p = system.triples[k];
    if (used[0][p[0]] || used[1][p[1]] || used[2][p[2]]) continue;
    for (int i = 0; i < 3; ++i) used[i][p[i]] = true;
    chosen.push_back(static_cast<int>(k));
    if (MatchFrom(system, k + 1, used, chosen)) return true;
    chosen.pop_back();
    for (int i = 0; i < 3; ++i) used[i][p[i]] = false;
  }
  return false;
}

}  // namespace

TripleSystem MakeTripleSystem(int s, std::vector<std::array<int, 3>> triples) {
  if (s < 1) throw InputError("3dm: s must be at least 1");
  if (triples.empty()) throw InputError("3dm: no triples");
  for (const auto& p : triples) {
    for (int c : p) {
      if (c < 0 || c >= s) throw InputError("3dm: index out of range");
    }
  }
  CheckCapacity(static_cast<int>(triples.size()), "3dm");
  return TripleSystem{s, std::move(triples)};
}

TripleSystem ParseTripleSystem(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  int s = 0;
  std::vector<std::array<int, 3>> triples;
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
      if (tokens.size() != 2 || tokens[0] != "3dm" ||
          tokens[1].substr(0, 2) != "s=" || !ParseInt(tokens[1].substr(2), &s) ||
          s < 1) {
        throw ParseError(line_no, "expected '3dm s=<s>'");
      }
      have_header = true;
      continue;
    }
    std::array<int, 3> p{};
    if (tokens.size() != 3) throw ParseError(line_no, "expected '<a> <b> <c>'");
    for (int i = 0; i < 3; ++i) {
      if (!ParseInt(tokens[static_cast<size_t>(i)], &p[static_cast<size_t>(i)]) ||
          p[static_cast<size_t>(i)] < 0 || p[static_cast<size_t>(i)] >= s) {
        throw ParseError(line_no, "bad index '" +
                                      std::string(tokens[static_cast<size_t>(i)]) +
                                      "'");
      }
    }
    triples.push_back(p);
  }
  if (!have_header) throw ParseError(line_no, "missing header line");
  if (triples.empty()) throw ParseError(line_no, "no triples");
  return MakeTripleSystem(s, std::move(triples));
}

TripleSystem ReadTripleSystemFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseTripleSystem(buffer.str());
}

std::string SerializeTripleSystem(const TripleSystem& system) {
  std::string out = "3dm s=" + std::to_string(system.s) + "\n";
  for (const auto& p : system.triples) {
    out += std::to_string(p[0]) + " " + std::to_string(p[1]) + " " +
           std::to_string(p[2]) + "\n";
  }
  return out;
}

std::optional<std::vector<int>> FindMatching(const TripleSystem& system) {
  std::array<std::vector<bool>, 3> used;
  for (auto& u : used) u.assign(static_cast<size_t>(system.s), false);
  std::vector<int> chosen;
  if (!MatchFrom(system, 0, used, chosen)) return std::nullopt;
  return chosen;
}

std::optional<SubsetMask> Intersect3Bruteforce(const MatroidView& m1,
                                               const MatroidView& m2,
                                               const MatroidView& m3, int k) {
  if (m1.size() != m2.size() || m1.size() != m3.size()) {
    throw InputError("intersect3: ground sets differ in size");
  }
  std::optional<SubsetMask> found;
  ForEachKSubset(m1.ground(), k, [&](SubsetMask a) {
    if (m1.IsIndependent(a) && m2.IsIndependent(a) && m3.IsIndependent(a)) {
      found = a;
      return false;
    }
    return true;
  });
  return found;
}

std::optional<SubsetMask> Intersect3Bases(const Description& b1,
                                          const Description& b2,
                                          const Description& b3, int k) {
  for (const Description* d : {&b1, &b2, &b3}) {
    if (d->kind != Kind::kBases) {
      throw InputError("intersect3 bases: expected a bases description, got " +
                       std::string(KindName(d->kind)));
    }
  }
  if (b1.n != b2.n || b1.n != b3.n) {
    throw InputError("intersect3: ground sets differ in size");
  }
  if (k < 0) return std::nullopt;
  SubsetMask best;
  bool have = false;
  for (SubsetMask x : b1.sets) {
    for (SubsetMask y : b2.sets) {
      const SubsetMask xy = x & y;
      if (have && xy.size() <= best.size()) continue;
      for (SubsetMask z : b3.sets) {
        const SubsetMask xyz = xy & z;
        if (!have || xyz.size() > best.size()) {
          best = xyz;
          have = true;
        }
      }
    }
  }
  if (!have || best.size() < k) return std::nullopt;
  SubsetMask out;
  for (int e : best) {
    if (out.size() < k) out = out.with(e);
  }
  return out;
}

ThreeDmReduction Reduce3dm(const TripleSystem& system) {
  if (system.triples.empty()) throw InputError("3dm: no triples");
  const int t = static_cast<int>(system.triples.size());
  CheckCapacity(t, "3dm reduction");
  const SubsetMask ground = SubsetMask::Full(t);
  ThreeDmReduction out;
  out.target = system.s;
  for (int side = 0; side < 3; ++side) {
    std::vector<SubsetMask> classes(static_cast<size_t>(system.s));
    for (int e = 0; e < t; ++e) {
      const int value = system.triples[static_cast<size_t>(e)][static_cast<size_t>(side)];
      classes[static_cast<size_t>(value)] =
          classes[static_cast<size_t>(value)].with(e);
    }
    std::vector<SubsetMask> circuits;
    std::vector<SubsetMask> hyperplanes;
    for (int j = 0; j < system.s; ++j) {
      const SubsetMask c = classes[static_cast<size_t>(j)];
      if (c.empty()) {
        out.empty_classes.push_back({side, j});
        continue;
      }
      hyperplanes.push_back(ground - c);
      const std::vector<int> members = c.elements();
      for (size_t a = 0; a < members.size(); ++a) {
        for (size_t b = a + 1; b < members.size(); ++b) {
          circuits.push_back(SubsetMask::Of({members[a], members[b]}));
        }
      }
    }
    out.circuits[static_cast<size_t>(side)] =
        MakeDescription(Kind::kCircuits, t, std::move(circuits));
    out.hyperplanes[static_cast<size_t>(side)] =
        MakeDescription(Kind::kHyperplanes, t, std::move(hyperplanes));
  }
  return out;
}

}  // namespace matroid
