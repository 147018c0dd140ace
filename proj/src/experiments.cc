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

#include "matroid/experiments.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "matroid/encode.h"
#include "matroid/errors.h"

namespace matroid {
namespace {

std::int64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

std::int64_t Power(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

struct ClosedForm {
  std::string kind;
  Comparison comparison;
  std::int64_t value;
};

std::vector<ClosedForm> ClosedForms(FamilyId id) {
  const int n = id.n;
  const std::int64_t two_n = Power(2, n);
  switch (id.family) {
    case Family::kCorankOneUniform:
      return {{"spanning", Comparison::kEqual, n + 1},
              {"flats", Comparison::kEqual, two_n - n}};
    case Family::kRankOneUniform:
      return {{"independent", Comparison::kEqual, n + 1},
              {"spanning", Comparison::kEqual, two_n - 1}};
    case Family::kTruncatedBlowupSum:
      return {{"nsc", Comparison::kEqual, Power(n, n) + n * Binomial(n, 2)},
              {"flats", Comparison::kAtMost, Power(2, n + 2)}};
    case Family::kHalfUniformPlusParallel:
      return {{"cyclicflats", Comparison::kEqual, 3},
              {"dephyp", Comparison::kEqual, Binomial(2 * n - 1, n - 2)}};
    case Family::kDoubledCorankOne:
      return {{"hyperplanes", Comparison::kEqual, (n * n - n) / 2},
              {"cyclicflats-nonempty", Comparison::kEqual, two_n - n - 1}};
    case Family::kHalfUniform:
      return {{"nsc", Comparison::kEqual, 0},
              {"circuits", Comparison::kEqual, Binomial(2 * n, n + 1)}};
  }
  return {};
}

std::string ExpectedText(const ExperimentRow& row) {
  switch (row.comparison) {
    case Comparison::kNone:
      return "";
    case Comparison::kEqual:
      return std::to_string(row.expected);
    case Comparison::kAtMost:
      return "<=" + std::to_string(row.expected);
  }
  return "";
}

std::vector<std::vector<std::string>> Cells(
    const std::vector<ExperimentReport>& reports) {
  std::vector<std::vector<std::string>> out;
  for (const ExperimentReport& r : reports) {
    const std::string tag(InfoOf(r.family).tag);
    for (const ExperimentRow& row : r.rows) {
      const bool blank = row.status == "skipped";
      out.push_back({tag, std::to_string(r.n), row.kind,
                     blank ? "" : std::to_string(row.listed_sets),
                     blank ? "" : std::to_string(row.cells), ExpectedText(row),
                     row.status});
    }
  }
  return out;
}

const std::vector<std::string> kColumns = {
    "family", "n", "kind", "listed_sets", "cells", "expected", "status"};

}  // namespace

bool ExperimentReport::ok() const {
  return std::none_of(rows.begin(), rows.end(),
                      [](const ExperimentRow& r) { return r.status == "fail"; });
}

ExperimentReport RunFamily(FamilyId id) {
  ExperimentReport report{id.family, id.n, false, "", {}};
  const std::vector<ClosedForm> forms = ClosedForms(id);
  std::map<std::string, std::int64_t> counts;
  try {
    const MatroidView view = SeparationFamily(id);
    const int n = view.size();
    const std::vector<std::uint8_t> table = RankTable(view);
    for (Kind kind : kAllKinds) {
      counts[std::string(KindName(kind))] = CountFromRankTable(n, table, kind);
    }
    // The empty set is a cyclic flat iff there are no loops.
    bool has_loop = false;
    for (int e = 0; e < n; ++e) has_loop |= table[std::size_t{1} << e] == 0;
    counts["cyclicflats-nonempty"] = counts["cyclicflats"] - (has_loop ? 0 : 1);

    std::vector<std::string> kinds;
    for (Kind kind : kAllKinds) kinds.emplace_back(KindName(kind));
    for (const ClosedForm& f : forms) {
      if (std::find(kinds.begin(), kinds.end(), f.kind) == kinds.end()) {
        kinds.push_back(f.kind);
      }
    }
    for (const std::string& kind : kinds) {
      ExperimentRow row;
      row.kind = kind;
      row.listed_sets = counts[kind];
      row.cells = row.listed_sets * n;
      row.status = "-";
      for (const ClosedForm& f : forms) {
        if (f.kind != kind) continue;
        row.comparison = f.comparison;
        row.expected = f.value;
        const bool pass = f.comparison == Comparison::kEqual
                              ? row.listed_sets == f.value
                              : row.listed_sets <= f.value;
        row.status = pass ? "pass" : "fail";
      }
      report.rows.push_back(row);
    }
  } catch (const CapacityError& e) {
    report.skipped = true;
    report.skip_reason = e.what();
    report.rows.clear();
    for (Kind kind : kAllKinds) {
      ExperimentRow row;
      row.kind = std::string(KindName(kind));
      row.status = "skipped";
      for (const ClosedForm& f : forms) {
        if (f.kind == row.kind) {
          row.comparison = f.comparison;
          row.expected = f.value;
        }
      }
      report.rows.push_back(row);
    }
  }
  return report;
}

std::vector<ExperimentReport> RunFamilyRange(Family family, int lo, int hi) {
  std::vector<ExperimentReport> out;
  for (int n = lo; n <= hi; ++n) out.push_back(RunFamily({family, n}));
  return out;
}

std::vector<ExperimentReport> RunSeparationSuite() {
  std::vector<ExperimentReport> out;
  for (Family f : kAllFamilies) {
    const FamilyInfo& info = InfoOf(f);
    for (ExperimentReport& r :
         RunFamilyRange(f, info.default_lo, info.default_hi)) {
      out.push_back(std::move(r));
    }
  }
  return out;
}

bool AllPassed(const std::vector<ExperimentReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const ExperimentReport& r) { return r.ok(); });
}

std::string FormatTable(const std::vector<ExperimentReport>& reports) {
  const auto cells = Cells(reports);
  std::vector<std::size_t> width;
  for (const std::string& c : kColumns) width.push_back(c.size());
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  std::ostringstream out;
  auto emit = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) line += "  ";
      // Text columns left-aligned, numbers right-aligned.
      const bool numeric = i == 1 || i == 3 || i == 4 || i == 5;
      const std::string pad(width[i] - row[i].size(), ' ');
      line += numeric ? pad + row[i] : row[i] + pad;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  };
  emit(kColumns);
  for (const auto& row : cells) emit(row);
  return out.str();
}

std::string FormatCsv(const std::vector<ExperimentReport>& reports) {
  std::ostringstream out;
  for (std::size_t i = 0; i < kColumns.size(); ++i) {
    out << (i > 0 ? "," : "") << kColumns[i];
  }
  out << '\n';
  for (const auto& row : Cells(reports)) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i > 0 ? "," : "") << row[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace matroid
