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

#include "matroid/description.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <utility>

#include "matroid/errors.h"

namespace matroid {
namespace {

constexpr std::array<std::string_view, 10> kKindNames = {
    "rank",     "independent", "spanning", "bases",  "flats",
    "circuits", "hyperplanes", "nsc",      "dephyp", "cyclicflats",
};

bool ParseInt(std::string_view text, int* out) {
  if (text.empty()) return false;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, *out);
  return ec == std::errc() && ptr == last;
}

std::int64_t BitWidth(std::int64_t value) {
  std::int64_t bits = 1;
  while (value > 1) {
    value >>= 1;
    ++bits;
  }
  return bits;
}

std::vector<std::string_view> SplitSpaces(std::string_view line) {
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

}  // namespace

std::string_view KindName(Kind kind) {
  return kKindNames[static_cast<size_t>(kind)];
}

std::optional<Kind> KindFromName(std::string_view name) {
  for (size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<Kind>(i);
  }
  return std::nullopt;
}

Description MakeDescription(Kind kind, int n, std::vector<SubsetMask> sets,
                            std::vector<int> set_ranks,
                            std::optional<int> rank) {
  CheckCapacity(n, "description");
  const std::string name(KindName(kind));
  if (HasSetRanks(kind)) {
    if (set_ranks.size() != sets.size()) {
      throw InputError(name + ": every listed set needs a rank");
    }
  } else if (!set_ranks.empty()) {
    throw InputError(name + ": sets of this kind carry no rank");
  }
  if (HasHeaderRank(kind)) {
    if (!rank) throw InputError(name + ": header rank r is required");
    if (*rank < 0 || *rank > n) throw InputError(name + ": r out of range");
  } else if (rank) {
    throw InputError(name + ": header rank r is not allowed");
  }
  for (SubsetMask s : sets) {
    if (!s.fits(n)) throw InputError(name + ": set wider than ground set");
  }
  for (int r : set_ranks) {
    if (r < 0 || r > n) throw InputError(name + ": set rank out of range");
  }

  std::vector<size_t> order(sets.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return CanonicalLess(sets[a], sets[b]);
  });
  Description d;
  d.kind = kind;
  d.n = n;
  d.rank = rank;
  d.sets.reserve(sets.size());
  for (size_t i : order) {
    if (!d.sets.empty() && d.sets.back() == sets[i]) {
      throw InputError(name + ": duplicate set " + ToBitstring(sets[i], n));
    }
    d.sets.push_back(sets[i]);
    if (HasSetRanks(kind)) d.set_ranks.push_back(set_ranks[i]);
  }
  if (kind == Kind::kRank && d.sets.size() != (size_t{1} << n)) {
    throw InputError("rank: table must list all 2^n subsets");
  }
  return d;
}

Description ParseDescription(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  Kind kind = Kind::kBases;
  int n = 0;
  std::optional<int> rank;
  std::vector<SubsetMask> sets;
  std::vector<int> set_ranks;
  std::vector<int> set_lines;

  size_t pos = 0;
  while (pos < text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    if (!have_header) {
      auto tokens = SplitSpaces(line);
      if (tokens.size() < 3 || tokens.size() > 4 || tokens[0] != "matroid") {
        throw ParseError(line_no, "expected 'matroid <kind> n=<n>[ r=<r>]'");
      }
      auto k = KindFromName(tokens[1]);
      if (!k) {
        throw ParseError(line_no,
                         "unknown kind '" + std::string(tokens[1]) + "'");
      }
      kind = *k;
      if (tokens[2].substr(0, 2) != "n=" || !ParseInt(tokens[2].substr(2), &n) ||
          n < 0) {
        throw ParseError(line_no, "malformed n=<n>");
      }
      if (n > MaxGroundSize()) {
        throw ParseError(line_no, "n=" + std::to_string(n) +
                                      " exceeds the ground-set cap");
      }
      if (tokens.size() == 4) {
        int r = 0;
        if (tokens[3].substr(0, 2) != "r=" ||
            !ParseInt(tokens[3].substr(2), &r)) {
          throw ParseError(line_no, "malformed r=<r>");
        }
        if (!HasHeaderRank(kind)) {
          throw ParseError(line_no, "r= is not allowed for this kind");
        }
        if (r < 0 || r > n) throw ParseError(line_no, "r out of range");
        rank = r;
      } else if (HasHeaderRank(kind)) {
        throw ParseError(line_no, "missing r=<r> for this kind");
      }
      have_header = true;
      continue;
    }

    std::string_view bits = line;
    std::optional<int> set_rank;
    if (size_t colon = line.find(':'); colon != std::string_view::npos) {
      bits = line.substr(0, colon);
      int r = 0;
      if (!ParseInt(line.substr(colon + 1), &r) || r < 0 || r > n) {
        throw ParseError(line_no, "malformed rank annotation");
      }
      set_rank = r;
    }
    if (bits.size() != static_cast<size_t>(n)) {
      throw ParseError(line_no, "bitstring length " +
                                    std::to_string(bits.size()) +
                                    " != n=" + std::to_string(n));
    }
    SubsetMask m;
    if (!FromBitstring(bits, &m)) {
      throw ParseError(line_no, "bitstring must contain only 0 and 1");
    }
    if (HasSetRanks(kind)) {
      if (!set_rank) throw ParseError(line_no, "missing :<rank> annotation");
      set_ranks.push_back(*set_rank);
    } else if (set_rank) {
      throw ParseError(line_no, "rank annotation not allowed for this kind");
    }
    sets.push_back(m);
    set_lines.push_back(line_no);
  }
  if (!have_header) throw ParseError(line_no, "missing header line");

  // Duplicate detection with the offending line.
  std::vector<size_t> order(sets.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return sets[a] != sets[b] ? sets[a] < sets[b] : a < b;
  });
  for (size_t i = 1; i < order.size(); ++i) {
    if (sets[order[i]] == sets[order[i - 1]]) {
      throw ParseError(set_lines[order[i]], "duplicate set");
    }
  }
  try {
    return MakeDescription(kind, n, std::move(sets), std::move(set_ranks),
                           rank);
  } catch (const InputError& e) {
    throw ParseError(line_no, e.what());
  }
}

Description ReadDescriptionFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseDescription(buffer.str());
}

std::string Serialize(const Description& desc) {
  std::string out = "matroid ";
  out += KindName(desc.kind);
  out += " n=" + std::to_string(desc.n);
  if (desc.rank) out += " r=" + std::to_string(*desc.rank);
  out += '\n';
  for (size_t i = 0; i < desc.sets.size(); ++i) {
    out += ToBitstring(desc.sets[i], desc.n);
    if (HasSetRanks(desc.kind)) out += ':' + std::to_string(desc.set_ranks[i]);
    out += '\n';
  }
  return out;
}

SizeMeasure SizeOf(const Description& desc) {
  SizeMeasure m;
  m.listed_sets = static_cast<std::int64_t>(desc.sets.size());
  m.cells = m.listed_sets * desc.n;
  const std::int64_t field = BitWidth(desc.n);
  m.header_bits = field;
  if (desc.rank) m.header_bits += field;
  if (HasSetRanks(desc.kind)) m.header_bits += field * m.listed_sets;
  return m;
}

}  // namespace matroid
