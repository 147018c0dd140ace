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

// Description sizes of the separation families across all ten kinds, with
// the closed-form counts they are expected to hit.

#ifndef MATROID_EXPERIMENTS_H_
#define MATROID_EXPERIMENTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroid/families.h"

namespace matroid {

enum class Comparison { kNone, kEqual, kAtMost };

struct ExperimentRow {
  // A kind keyword, or "cyclicflats-nonempty" for the count without the
  // empty set.
  std::string kind;
  std::int64_t listed_sets = 0;
  std::int64_t cells = 0;
  Comparison comparison = Comparison::kNone;
  std::int64_t expected = 0;
  // "pass", "fail", "-" (no closed form) or "skipped".
  std::string status;
};

struct ExperimentReport {
  Family family;
  int n = 0;
  bool skipped = false;
  std::string skip_reason;
  std::vector<ExperimentRow> rows;

  bool ok() const;
};

// Counts every kind from the rank table and checks the closed forms.
// Capacity problems produce a skipped report instead of an exception.
ExperimentReport RunFamily(FamilyId id);

// Every n in [lo, hi] for one family.
std::vector<ExperimentReport> RunFamilyRange(Family family, int lo, int hi);

// All families over their default ranges.
std::vector<ExperimentReport> RunSeparationSuite();

bool AllPassed(const std::vector<ExperimentReport>& reports);

// Space-aligned table and CSV (family, n, kind, listed_sets, cells,
// expected, status). Both are deterministic.
std::string FormatTable(const std::vector<ExperimentReport>& reports);
std::string FormatCsv(const std::vector<ExperimentReport>& reports);

}  // namespace matroid

#endif  // MATROID_EXPERIMENTS_H_
