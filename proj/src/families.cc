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

#include "matroid/families.h"

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>

#include "matroid/errors.h"
#include "matroid/operations.h"

namespace matroid {
namespace {

class UniformOracle final : public RankOracle {
 public:
  UniformOracle(int r, int n) : r_(r), n_(n) {}
  int size() const override { return n_; }
  bool Independent(SubsetMask a) const override { return a.size() <= r_; }
  int Rank(SubsetMask a) const override { return std::min(a.size(), r_); }

 private:
  int r_;
  int n_;
};

class BicircularOracle final : public RankOracle {
 public:
  explicit BicircularOracle(MultiGraph g) : g_(std::move(g)) {}
  int size() const override { return g_.edge_count(); }

  bool Independent(SubsetMask a) const override {
    std::vector<int> parent(static_cast<size_t>(g_.vertices));
    std::iota(parent.begin(), parent.end(), 0);
    // Per root: edges minus vertices of the component, starting at -1 for
    // every vertex; a component is fine while this stays <= 0.
    std::vector<int> excess(static_cast<size_t>(g_.vertices), -1);
    auto find = [&parent](int v) {
      while (parent[static_cast<size_t>(v)] != v) {
        parent[static_cast<size_t>(v)] =
            parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
        v = parent[static_cast<size_t>(v)];
      }
      return v;
    };
    for (int e : a) {
      auto [u, w] = g_.edges[static_cast<size_t>(e)];
      int ru = find(u);
      int rw = find(w);
      if (ru != rw) {
        parent[static_cast<size_t>(rw)] = ru;
        excess[static_cast<size_t>(ru)] += excess[static_cast<size_t>(rw)];
      }
      if (++excess[static_cast<size_t>(ru)] > 0) return false;
    }
    return true;
  }

 private:
  MultiGraph g_;
};

constexpr FamilyInfo kInfo[] = {
    {"L10", "corank-one-uniform", 1, 3, 6},
    {"L11", "rank-one-uniform", 1, 3, 6},
    {"L15", "truncated-blowup-sum", 3, 3, 4},
    {"L17", "half-uniform-plus-parallel", 2, 2, 3},
    {"L18", "doubled-corank-one", 3, 3, 6},
    {"L20", "half-uniform", 1, 2, 3},
};

}  // namespace

MatroidView Uniform(int r, int n) {
  if (n < 0 || r < 0 || r > n) {
    throw InputError("uniform: need 0 <= r <= n, got r=" + std::to_string(r) +
                     " n=" + std::to_string(n));
  }
  CheckCapacity(n, "uniform");
  return MatroidView(std::make_shared<UniformOracle>(r, n));
}

const FamilyInfo& InfoOf(Family family) {
  return kInfo[static_cast<int>(family)];
}

std::optional<Family> FamilyFromName(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (InfoOf(f).tag == name || InfoOf(f).name == name) return f;
  }
  return std::nullopt;
}

int FamilyGroundSize(FamilyId id) {
  const int n = id.n;
  switch (id.family) {
    case Family::kCorankOneUniform:
    case Family::kRankOneUniform:
      return n;
    case Family::kTruncatedBlowupSum:
      return n * n + 2;
    case Family::kHalfUniformPlusParallel:
      return 2 * n + 1;
    case Family::kDoubledCorankOne:
    case Family::kHalfUniform:
      return 2 * n;
  }
  return 0;
}

MatroidView SeparationFamily(FamilyId id) {
  const FamilyInfo& info = InfoOf(id.family);
  if (id.n < info.min_n) {
    throw InputError(std::string(info.tag) + " needs n >= " +
                     std::to_string(info.min_n));
  }
  const std::string tag(info.tag);
  // n*n + 2 overflows long before n does.
  CheckCapacity(id.n > kMaxElements ? kMaxElements + 1 : FamilyGroundSize(id),
                tag.c_str());
  const int n = id.n;
  switch (id.family) {
    case Family::kCorankOneUniform:
      return Uniform(n - 1, n);
    case Family::kRankOneUniform:
      return Uniform(1, n);
    case Family::kTruncatedBlowupSum: {
      MatroidView sum =
          DirectSum(ParallelBlowup(Uniform(n - 1, n), n), Uniform(2, 2));
      return Truncate(sum, sum.rank() - 1);
    }
    case Family::kHalfUniformPlusParallel:
      return AddParallel(Uniform(n, 2 * n), 0);
    case Family::kDoubledCorankOne:
      return ParallelBlowup(Uniform(n - 1, n), 2);
    case Family::kHalfUniform:
      return Uniform(n, 2 * n);
  }
  throw InputError("unknown family");
}

MatroidView Bicircular(const MultiGraph& g) {
  CheckCapacity(g.edge_count(), "bicircular");
  return MatroidView(std::make_shared<BicircularOracle>(g));
}

Description PhiDescription(const MultiGraph& g) {
  if (!g.IsSimple()) throw InputError("phi: graph must be simple");
  if (g.vertices < 3) throw InputError("phi: graph needs at least 3 vertices");
  const int v = g.vertices;
  const int n = 2 * v + g.edge_count();
  CheckCapacity(n, "phi");
  std::vector<SubsetMask> sets;
  for (int i = 0; i < v; ++i) sets.push_back(SubsetMask::Of({i, v + i}));
  for (int k = 0; k < g.edge_count(); ++k) {
    auto [i, j] = g.edges[static_cast<size_t>(k)];
    for (int zi : {i, v + i}) {
      for (int zj : {j, v + j}) {
        sets.push_back(SubsetMask::Of({zi, zj, 2 * v + k}));
      }
    }
  }
  return MakeDescription(Kind::kNonSpanningCircuits, n, std::move(sets), {}, 3);
}

MatroidView Phi(const MultiGraph& g) { return ViewOf(PhiDescription(g)); }

int SubdivisionLength(int r) { return r / 2; }

MatroidView PhiR(const MultiGraph& g, int r) {
  if (!g.IsSimple()) throw InputError("phi_r: graph must be simple");
  if (r <= 2) throw InputError("phi_r: r must exceed 2");
  const int t = SubdivisionLength(r);
  CheckCapacity(g.vertices + g.edge_count() * t, "phi_r");
  MatroidView bicircular = Bicircular(Subdivide(AddLoops(g, 1), t));
  if (r > bicircular.rank()) {
    throw InputError("phi_r: r exceeds the rank of the bicircular matroid");
  }
  return Truncate(bicircular, r);
}

}  // namespace matroid
