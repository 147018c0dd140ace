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

// Shared test corpus: small matroids with loops, coloops, parallel classes,
// binary and non-binary structure.

#ifndef MATROID_TESTS_CORPUS_H_
#define MATROID_TESTS_CORPUS_H_

#include <algorithm>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "matroid/families.h"
#include "matroid/graph.h"
#include "matroid/matroid_view.h"
#include "matroid/operations.h"

namespace corpus {

// Columns over GF(2), each given as a bit vector.
class BinaryOracle final : public matroid::RankOracle {
 public:
  explicit BinaryOracle(std::vector<std::uint32_t> columns)
      : columns_(std::move(columns)) {}
  int size() const override { return static_cast<int>(columns_.size()); }
  bool Independent(matroid::SubsetMask a) const override {
    std::vector<std::uint32_t> basis;
    for (int e : a) {
      std::uint32_t v = columns_[static_cast<std::size_t>(e)];
      for (std::uint32_t b : basis) v = std::min(v, v ^ b);
      if (v == 0) return false;
      // Reduction needs the basis ordered by leading bit, highest first.
      basis.insert(std::upper_bound(basis.begin(), basis.end(), v,
                                    std::greater<>()),
                   v);
    }
    return true;
  }

 private:
  std::vector<std::uint32_t> columns_;
};

inline matroid::MatroidView Binary(std::vector<std::uint32_t> columns) {
  return matroid::MatroidView(std::make_shared<BinaryOracle>(std::move(columns)));
}

struct Entry {
  std::string name;
  matroid::MatroidView view;
};

// Every entry has at most max_n elements.
inline std::vector<Entry> Matroids(int max_n) {
  using namespace matroid;
  std::vector<Entry> out;
  auto add = [&](std::string name, MatroidView v) {
    if (v.size() <= max_n) out.push_back({std::move(name), std::move(v)});
  };
  for (int n = 1; n <= 5; ++n) {
    for (int r = 0; r <= n; ++r) {
      add("U" + std::to_string(r) + "," + std::to_string(n), Uniform(r, n));
    }
  }
  add("U2,6", Uniform(2, 6));
  add("U3,6", Uniform(3, 6));
  add("U3,7", Uniform(3, 7));
  add("U4,7", Uniform(4, 7));
  add("M(K4)", Binary({0b001, 0b010, 0b100, 0b011, 0b101, 0b110}));
  add("F7", Binary({1, 2, 3, 4, 5, 6, 7}));
  add("F7*", Dual(Binary({1, 2, 3, 4, 5, 6, 7})));
  add("binary+loop+parallel", Binary({0, 1, 1, 2, 3, 4}));
  add("M(K4)/0", Minor(Binary({0b001, 0b010, 0b100, 0b011, 0b101, 0b110}),
                       SubsetMask::Of({0}), SubsetMask()));
  for (Family f : kAllFamilies) {
    const FamilyInfo& info = InfoOf(f);
    for (int n = info.min_n; n <= info.default_hi; ++n) {
      if (FamilyGroundSize({f, n}) <= max_n) {
        add(std::string(info.name) + " n=" + std::to_string(n),
            SeparationFamily({f, n}));
      }
    }
  }
  add("loop+U2,3", DirectSum(Uniform(0, 1), Uniform(2, 3)));
  add("coloop+U1,3", DirectSum(Uniform(1, 1), Uniform(1, 3)));
  add("U1,2+U1,2", DirectSum(Uniform(1, 2), Uniform(1, 2)));
  add("T(U2,3+U2,3)", Truncate(DirectSum(Uniform(2, 3), Uniform(2, 3)), 3));
  add("3U1,2", ParallelBlowup(Uniform(2, 2), 3));
  add("B(P3 with loops)", Bicircular(AddLoops(PathGraph(3), 1)));
  add("B(K4)", Bicircular(CompleteGraph(4)));
  add("B(theta)", Bicircular(MakeGraph(2, {{0, 1}, {0, 1}, {0, 1}, {0, 0}})));
  add("U2,4+parallel", AddParallel(Uniform(2, 4), 1));
  return out;
}

// Random relabeling of a matroid: element e of the result is perm[e] of
// the input.
class PermutedOracle final : public matroid::RankOracle {
 public:
  PermutedOracle(matroid::MatroidView base, std::vector<int> perm)
      : base_(std::move(base)), perm_(std::move(perm)) {}
  int size() const override { return base_.size(); }
  bool Independent(matroid::SubsetMask a) const override {
    matroid::SubsetMask b;
    for (int e : a) b = b.with(perm_[static_cast<std::size_t>(e)]);
    return base_.IsIndependent(b);
  }

 private:
  matroid::MatroidView base_;
  std::vector<int> perm_;
};

inline matroid::MatroidView Relabel(const matroid::MatroidView& v,
                                    std::mt19937& rng) {
  std::vector<int> perm(static_cast<std::size_t>(v.size()));
  for (int i = 0; i < v.size(); ++i) perm[static_cast<std::size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return matroid::MatroidView(std::make_shared<PermutedOracle>(v, perm));
}

}  // namespace corpus

#endif  // MATROID_TESTS_CORPUS_H_
