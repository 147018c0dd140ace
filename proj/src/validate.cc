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

#include "matroid/validate.h"

#include <algorithm>
#include <exception>
#include <functional>
#include <optional>
#include <unordered_set>

#include "matroid/encode.h"
#include "matroid/matroid_view.h"

namespace matroid {
namespace {

// A failing check returns the witness text; passing returns nullopt.
using Outcome = std::optional<std::string>;

class Checker {
 public:
  explicit Checker(const Description& d) : d_(d) {
    for (SubsetMask s : d.sets) members_.insert(s.bits());
  }

  void Run(const std::string& name, const std::function<Outcome()>& check) {
    ValidationCheck c;
    c.name = name;
    try {
      if (Outcome failure = check()) {
        c.passed = false;
        c.detail = *failure;
      }
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  ValidationReport Take() { return std::move(report_); }

  bool Has(SubsetMask s) const { return members_.count(s.bits()) > 0; }
  std::string Bits(SubsetMask s) const { return ToBitstring(s, d_.n); }
  SubsetMask ground() const { return SubsetMask::Full(d_.n); }

  Outcome Nonempty() const {
    if (d_.sets.empty()) return "no sets listed";
    return std::nullopt;
  }
  Outcome Contains(SubsetMask s) const {
    if (!Has(s)) return "missing " + Bits(s);
    return std::nullopt;
  }
  Outcome Antichain() const {
    for (SubsetMask a : d_.sets) {
      for (SubsetMask b : d_.sets) {
        if (a.proper_subset_of(b)) return Bits(a) + " inside " + Bits(b);
      }
    }
    return std::nullopt;
  }
  Outcome NoEmptySet() const {
    if (Has(SubsetMask())) return "empty set listed";
    return std::nullopt;
  }
  // C1, C2 distinct, e in both: some circuit inside (C1 | C2) - e.
  Outcome Elimination(const std::vector<SubsetMask>& circuits) const {
    for (SubsetMask a : circuits) {
      for (SubsetMask b : circuits) {
        if (a.bits() >= b.bits()) continue;
        for (int e : a & b) {
          const SubsetMask u = (a | b).without(e);
          const bool found =
              std::any_of(circuits.begin(), circuits.end(),
                          [u](SubsetMask c) { return c.subset_of(u); });
          if (!found) return "no circuit inside (" + Bits(a) + " | " +
                             Bits(b) + ") - " + std::to_string(e);
        }
      }
    }
    return std::nullopt;
  }
  Outcome Equicardinal(const std::vector<SubsetMask>& sets) const {
    for (SubsetMask s : sets) {
      if (s.size() != sets.front().size()) {
        return Bits(sets.front()) + " and " + Bits(s) + " differ in size";
      }
    }
    return std::nullopt;
  }
  Outcome BasisExchange(const std::vector<SubsetMask>& bases) const {
    std::unordered_set<SubsetMask::Word> set;
    for (SubsetMask b : bases) set.insert(b.bits());
    for (SubsetMask b1 : bases) {
      for (SubsetMask b2 : bases) {
        for (int x : b1 - b2) {
          bool found = false;
          for (int y : b2 - b1) {
            if (set.count(b1.without(x).with(y).bits())) {
              found = true;
              break;
            }
          }
          if (!found) {
            return "exchange fails for " + Bits(b1) + ", " + Bits(b2) +
                   " at " + std::to_string(x);
          }
        }
      }
    }
    return std::nullopt;
  }
  Outcome DownClosed() const {
    for (SubsetMask s : d_.sets) {
      for (int e : s) {
        if (!Has(s.without(e))) return Bits(s) + " without " +
                                       std::to_string(e) + " missing";
      }
    }
    return std::nullopt;
  }
  Outcome UpClosed() const {
    for (SubsetMask s : d_.sets) {
      for (int e : ground() - s) {
        if (!Has(s.with(e))) return Bits(s) + " with " + std::to_string(e) +
                                    " missing";
      }
    }
    return std::nullopt;
  }
  Outcome Augmentation() const {
    for (SubsetMask a : d_.sets) {
      for (SubsetMask b : d_.sets) {
        if (a.size() >= b.size()) continue;
        bool found = false;
        for (int e : b - a) {
          if (Has(a.with(e))) {
            found = true;
            break;
          }
        }
        if (!found) return "cannot augment " + Bits(a) + " from " + Bits(b);
      }
    }
    return std::nullopt;
  }

 private:
  const Description& d_;
  std::unordered_set<SubsetMask::Word> members_;
  ValidationReport report_;
};

std::vector<SubsetMask> MinSize(const std::vector<SubsetMask>& sets) {
  std::vector<SubsetMask> out;
  if (sets.empty()) return out;
  int m = sets.front().size();
  for (SubsetMask s : sets) m = std::min(m, s.size());
  for (SubsetMask s : sets) {
    if (s.size() == m) out.push_back(s);
  }
  return out;
}

void RankChecks(const Description& d, Checker& c) {
  std::vector<int> table(size_t{1} << d.n, -1);
  for (size_t i = 0; i < d.sets.size(); ++i) {
    table[d.sets[i].bits()] = d.set_ranks[i];
  }
  auto r = [&](SubsetMask a) { return table[a.bits()]; };
  const SubsetMask::Word limit = SubsetMask::Word{1} << d.n;
  c.Run("complete", [&]() -> Outcome {
    for (SubsetMask::Word b = 0; b < limit; ++b) {
      if (table[b] < 0) return "missing " + c.Bits(SubsetMask(b));
    }
    return std::nullopt;
  });
  c.Run("empty set has rank 0", [&]() -> Outcome {
    if (r(SubsetMask()) != 0) return "r(empty) = " + std::to_string(r({}));
    return std::nullopt;
  });
  c.Run("unit increase", [&]() -> Outcome {
    for (SubsetMask::Word b = 0; b < limit; ++b) {
      const SubsetMask a(b);
      for (int e : c.ground() - a) {
        const int diff = r(a.with(e)) - r(a);
        if (diff > 1) return c.Bits(a) + " + " + std::to_string(e);
      }
    }
    return std::nullopt;
  });
  c.Run("monotone", [&]() -> Outcome {
    for (SubsetMask::Word b = 0; b < limit; ++b) {
      const SubsetMask a(b);
      for (int e : c.ground() - a) {
        if (r(a.with(e)) < r(a)) return c.Bits(a) + " + " + std::to_string(e);
      }
    }
    return std::nullopt;
  });
  // Local form: r(A+e) + r(A+f) >= r(A+e+f) + r(A), equivalent to full
  // submodularity for integer unit-increase functions.
  c.Run("submodular", [&]() -> Outcome {
    for (SubsetMask::Word b = 0; b < limit; ++b) {
      const SubsetMask a(b);
      const SubsetMask rest = c.ground() - a;
      for (int e : rest) {
        for (int f : rest) {
          if (f <= e) continue;
          if (r(a.with(e)) + r(a.with(f)) < r(a.with(e).with(f)) + r(a)) {
            return "pair " + c.Bits(a.with(e)) + ", " + c.Bits(a.with(f));
          }
        }
      }
    }
    return std::nullopt;
  });
}

// Whitney's characterization: a hereditary family is the independent sets of
// a matroid iff I + e holds at most one circuit for every independent I.
// The elements of I + e lying in every circuit are e and each f with
// I + e - f independent; that core is itself dependent exactly when the
// circuit is unique.
void IndependenceAxiomChecks(const Description& d, Checker& c) {
  const MatroidView view = ViewOf(d);
  const std::size_t count = std::size_t{1} << d.n;
  std::vector<bool> indep(count);
  for (std::size_t a = 0; a < count; ++a) {
    indep[a] = view.IsIndependent(SubsetMask(static_cast<SubsetMask::Word>(a)));
  }
  auto in = [&](SubsetMask a) { return static_cast<bool>(indep[a.bits()]); };
  c.Run("hereditary independent sets", [&]() -> Outcome {
    for (std::size_t w = 0; w < count; ++w) {
      const SubsetMask a(static_cast<SubsetMask::Word>(w));
      if (!in(a)) continue;
      for (int e : a) {
        if (!in(a.without(e))) return c.Bits(a) + " without " + std::to_string(e);
      }
    }
    return std::nullopt;
  });
  c.Run("unique circuits", [&]() -> Outcome {
    for (std::size_t w = 0; w < count; ++w) {
      const SubsetMask a(static_cast<SubsetMask::Word>(w));
      if (!in(a)) continue;
      for (int e : c.ground() - a) {
        const SubsetMask grown = a.with(e);
        if (in(grown)) continue;
        SubsetMask core = SubsetMask::Singleton(e);
        for (int f : a) {
          if (in(grown.without(f))) core = core.with(f);
        }
        if (in(core)) {
          return c.Bits(a) + " + " + std::to_string(e) +
                 " holds two circuits";
        }
      }
    }
    return std::nullopt;
  });
  c.Run("rank agrees with independence", [&]() -> Outcome {
    std::vector<int> rank(count, 0);
    for (std::size_t w = 1; w < count; ++w) {
      const SubsetMask a(static_cast<SubsetMask::Word>(w));
      if (in(a)) {
        rank[w] = a.size();
      } else {
        for (int e : a) rank[w] = std::max(rank[w], rank[a.without(e).bits()]);
      }
      if (view.Rank(a) != rank[w]) return "rank of " + c.Bits(a);
    }
    return std::nullopt;
  });
}

void CyclicFlatChecks(const Description& d, Checker& c) {
  c.Run("ranks consistent", [&]() -> Outcome {
    for (size_t i = 0; i < d.sets.size(); ++i) {
      if (d.set_ranks[i] > d.sets[i].size()) {
        return c.Bits(d.sets[i]) + " rank exceeds size";
      }
      for (size_t j = 0; j < d.sets.size(); ++j) {
        if (!d.sets[i].proper_subset_of(d.sets[j])) continue;
        const int gap = d.set_ranks[j] - d.set_ranks[i];
        if (gap <= 0 || gap >= (d.sets[j] - d.sets[i]).size()) {
          return c.Bits(d.sets[i]) + " vs " + c.Bits(d.sets[j]);
        }
      }
    }
    return std::nullopt;
  });
  // The join of two cyclic flats is cl(Z1 | Z2), computed with the rank
  // function the list induces.
  c.Run("closed under join", [&]() -> Outcome {
    const MatroidView view = ViewOf(d);
    for (size_t i = 0; i < d.sets.size(); ++i) {
      for (size_t j = i + 1; j < d.sets.size(); ++j) {
        const SubsetMask join = view.Closure(d.sets[i] | d.sets[j]);
        auto it = std::find(d.sets.begin(), d.sets.end(), join);
        if (it == d.sets.end()) {
          return "join of " + c.Bits(d.sets[i]) + " and " + c.Bits(d.sets[j]) +
                 " missing";
        }
      }
    }
    return std::nullopt;
  });
}

}  // namespace

bool ValidationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ValidationCheck& c) { return c.passed; });
}

const ValidationCheck* ValidationReport::Find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string ValidationReport::ToString() const {
  std::string out;
  for (const auto& c : checks) {
    out += c.passed ? "PASS " : "FAIL ";
    out += c.name;
    if (!c.passed) out += ": " + c.detail;
    out += '\n';
  }
  return out;
}

ValidationReport Validate(const Description& d) {
  Checker c(d);
  bool structural = true;
  c.Run("structure", [&]() -> Outcome {
    try {
      Description copy = MakeDescription(d.kind, d.n, d.sets, d.set_ranks,
                                         d.rank);
      if (copy.sets.size() != d.sets.size()) return "set count changed";
    } catch (const std::exception& e) {
      structural = false;
      return e.what();
    }
    return std::nullopt;
  });
  // Rank tables are structurally required to be complete; still report the
  // axioms so hand-built tables get a witness.
  if (!structural && d.kind != Kind::kRank) return c.Take();

  switch (d.kind) {
    case Kind::kRank:
      RankChecks(d, c);
      if (!structural) return c.Take();
      break;
    case Kind::kIndependentSets:
      c.Run("contains empty set", [&] { return c.Contains(SubsetMask()); });
      c.Run("hereditary", [&] { return c.DownClosed(); });
      c.Run("augmentation", [&] { return c.Augmentation(); });
      break;
    case Kind::kSpanningSets:
      c.Run("contains ground set", [&] { return c.Contains(c.ground()); });
      c.Run("upward closed", [&] { return c.UpClosed(); });
      c.Run("basis exchange", [&] { return c.BasisExchange(MinSize(d.sets)); });
      break;
    case Kind::kBases:
      c.Run("nonempty", [&] { return c.Nonempty(); });
      c.Run("equicardinal", [&]() -> Outcome {
        if (d.sets.empty()) return std::nullopt;
        return c.Equicardinal(d.sets);
      });
      c.Run("basis exchange", [&] { return c.BasisExchange(d.sets); });
      break;
    case Kind::kFlats:
      c.Run("contains ground set", [&] { return c.Contains(c.ground()); });
      c.Run("closed under intersection", [&]() -> Outcome {
        for (SubsetMask a : d.sets) {
          for (SubsetMask b : d.sets) {
            if (!c.Has(a & b)) {
              return c.Bits(a) + " & " + c.Bits(b) + " missing";
            }
          }
        }
        return std::nullopt;
      });
      break;
    case Kind::kCircuits:
      c.Run("nonempty members", [&] { return c.NoEmptySet(); });
      c.Run("antichain", [&] { return c.Antichain(); });
      c.Run("circuit elimination", [&] { return c.Elimination(d.sets); });
      break;
    case Kind::kHyperplanes: {
      std::vector<SubsetMask> cocircuits;
      for (SubsetMask h : d.sets) cocircuits.push_back(c.ground() - h);
      c.Run("proper subsets", [&] { return c.Contains(c.ground()) ?
                                        std::nullopt :
                                        Outcome("ground set listed"); });
      c.Run("antichain", [&] { return c.Antichain(); });
      c.Run("cocircuit elimination", [&] { return c.Elimination(cocircuits); });
      break;
    }
    case Kind::kNonSpanningCircuits:
      c.Run("nonempty members", [&] { return c.NoEmptySet(); });
      c.Run("antichain", [&] { return c.Antichain(); });
      c.Run("sizes at most r", [&]() -> Outcome {
        for (SubsetMask s : d.sets) {
          if (s.size() > *d.rank) return c.Bits(s) + " larger than r";
        }
        return std::nullopt;
      });
      break;
    case Kind::kDependentHyperplanes:
      c.Run("antichain", [&] { return c.Antichain(); });
      c.Run("sizes at least r", [&]() -> Outcome {
        for (SubsetMask s : d.sets) {
          if (s.size() < *d.rank || s == c.ground()) {
            return c.Bits(s) + " cannot be a dependent hyperplane";
          }
        }
        return std::nullopt;
      });
      break;
    case Kind::kCyclicFlats:
      CyclicFlatChecks(d, c);
      break;
  }

  switch (d.kind) {
    case Kind::kFlats:
    case Kind::kNonSpanningCircuits:
    case Kind::kDependentHyperplanes:
    case Kind::kCyclicFlats:
      IndependenceAxiomChecks(d, c);
      break;
    default:
      break;
  }

  c.Run("round trip", [&]() -> Outcome {
    const Description again = EncodeFromOracle(ViewOf(d), d.kind);
    if (again == d) return std::nullopt;
    return "re-encoding gives " + std::to_string(again.sets.size()) +
           " sets instead of " + std::to_string(d.sets.size()) +
           (again.sets == d.sets ? " (ranks differ)" : "");
  });
  return c.Take();
}

}  // namespace matroid
