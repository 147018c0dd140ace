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

#include "matroid/isomorphism.h"

#include <algorithm>
#include <unordered_set>

#include "matroid/encode.h"

namespace matroid {
namespace {

class CircuitMatcher {
 public:
  CircuitMatcher(int n, const std::vector<SubsetMask>& a,
                 const std::vector<SubsetMask>& b)
      : n_(n), a_(a), b_set_() {
    for (SubsetMask c : b) b_set_.insert(c.bits());
    inv_a_ = ElementInvariants(n, a);
    inv_b_ = ElementInvariants(n, b);

    // Assign rarest invariant classes first so conflicts surface early.
    order_.resize(static_cast<size_t>(n));
    for (int e = 0; e < n; ++e) order_[static_cast<size_t>(e)] = e;
    auto class_size = [this](int e) {
      return std::count(inv_a_.begin(), inv_a_.end(),
                        inv_a_[static_cast<size_t>(e)]);
    };
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return class_size(x) < class_size(y);
    });

    // Circuits checked at the step where their last element gets mapped.
    std::vector<int> position(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p) position[static_cast<size_t>(order_[p])] = p;
    completes_at_.resize(static_cast<size_t>(n));
    for (SubsetMask c : a_) {
      int last = 0;
      for (int e : c) last = std::max(last, position[static_cast<size_t>(e)]);
      completes_at_[static_cast<size_t>(last)].push_back(c);
    }
  }

  bool Consistent() const {
    std::vector<ElementInvariant> sa = inv_a_, sb = inv_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  }

  bool Search(int p, std::vector<int>& f, SubsetMask used) const {
    if (p == n_) return true;
    const int e = order_[static_cast<size_t>(p)];
    for (int g = 0; g < n_; ++g) {
      if (used.contains(g) ||
          inv_b_[static_cast<size_t>(g)] != inv_a_[static_cast<size_t>(e)]) {
        continue;
      }
      f[static_cast<size_t>(e)] = g;
      bool ok = true;
      for (SubsetMask c : completes_at_[static_cast<size_t>(p)]) {
        if (!b_set_.count(MapMask(c, f).bits())) {
          ok = false;
          break;
        }
      }
      if (ok && Search(p + 1, f, used.with(g))) return true;
    }
    f[static_cast<size_t>(e)] = -1;
    return false;
  }

 private:
  int n_;
  const std::vector<SubsetMask>& a_;
  std::unordered_set<SubsetMask::Word> b_set_;
  std::vector<ElementInvariant> inv_a_;
  std::vector<ElementInvariant> inv_b_;
  std::vector<int> order_;
  std::vector<std::vector<SubsetMask>> completes_at_;
};

}  // namespace

std::vector<ElementInvariant> ElementInvariants(
    int n, const std::vector<SubsetMask>& circuits) {
  std::vector<ElementInvariant> out(static_cast<size_t>(n));
  SubsetMask loops;
  for (SubsetMask c : circuits) {
    if (c.size() == 1) loops |= c;
  }
  std::vector<SubsetMask> closure(static_cast<size_t>(n), loops);
  for (int e = 0; e < n; ++e) {
    closure[static_cast<size_t>(e)] = closure[static_cast<size_t>(e)].with(e);
  }
  for (SubsetMask c : circuits) {
    if (c.size() == 2) {
      const int x = c.lowest();
      const int y = c.highest();
      closure[static_cast<size_t>(x)] = closure[static_cast<size_t>(x)].with(y);
      closure[static_cast<size_t>(y)] = closure[static_cast<size_t>(y)].with(x);
    }
    for (int e : c) {
      out[static_cast<size_t>(e)].circuit_degree++;
      out[static_cast<size_t>(e)].circuit_sizes.push_back(c.size());
    }
  }
  for (int e = 0; e < n; ++e) {
    auto& inv = out[static_cast<size_t>(e)];
    inv.loop = loops.contains(e);
    inv.closure_size =
        inv.loop ? loops.size() : closure[static_cast<size_t>(e)].size();
    std::sort(inv.circuit_sizes.begin(), inv.circuit_sizes.end());
  }
  return out;
}

std::optional<std::vector<int>> CircuitIsomorphism(
    int n, const std::vector<SubsetMask>& a_circuits,
    const std::vector<SubsetMask>& b_circuits) {
  if (a_circuits.size() != b_circuits.size()) return std::nullopt;
  CircuitMatcher matcher(n, a_circuits, b_circuits);
  if (!matcher.Consistent()) return std::nullopt;
  std::vector<int> f(static_cast<size_t>(n), -1);
  if (!matcher.Search(0, f, SubsetMask())) return std::nullopt;
  return f;
}

std::optional<std::vector<int>> Isomorphic(const MatroidView& a,
                                           const MatroidView& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return std::nullopt;
  const int n = a.size();
  const Description ca = EncodeFromRankTable(n, RankTable(a), Kind::kCircuits);
  const Description cb = EncodeFromRankTable(n, RankTable(b), Kind::kCircuits);
  return CircuitIsomorphism(n, ca.sets, cb.sets);
}

SubsetMask MapMask(SubsetMask a, const std::vector<int>& f) {
  SubsetMask out;
  for (int e : a) out = out.with(f[static_cast<size_t>(e)]);
  return out;
}

bool IsIsomorphism(const MatroidView& a, const MatroidView& b,
                   const std::vector<int>& f) {
  const int n = a.size();
  if (b.size() != n || static_cast<int>(f.size()) != n) return false;
  SubsetMask image;
  for (int g : f) {
    if (g < 0 || g >= n || image.contains(g)) return false;
    image = image.with(g);
  }
  bool ok = true;
  ForEachSubset(a.ground(), [&](SubsetMask s) {
    if (ok && a.Rank(s) != b.Rank(MapMask(s, f))) ok = false;
  });
  return ok;
}

}  // namespace matroid
