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

#ifndef MATROID_ENCODE_H_
#define MATROID_ENCODE_H_

#include <cstdint>
#include <vector>

#include "matroid/description.h"
#include "matroid/matroid_view.h"

namespace matroid {

// Exhaustive encoder: classifies all 2^n subsets by the defining predicate of
// `kind` and attaches ranks where the kind needs them.
Description EncodeFromOracle(const MatroidView& view, Kind kind);

// Same, from a precomputed rank table (index = mask bits).
Description EncodeFromRankTable(int n, const std::vector<std::uint8_t>& table,
                                Kind kind);

// Number of subsets of each kind, from a rank table, without building lists.
std::int64_t CountFromRankTable(int n, const std::vector<std::uint8_t>& table,
                                Kind kind);

// True iff both descriptions induce the same rank function.
// Throws InputError if the ground sets differ in size.
bool SemanticallyEqual(const Description& a, const Description& b);

// True iff both views have the same size and rank function.
bool SameMatroid(const MatroidView& a, const MatroidView& b);

}  // namespace matroid

#endif  // MATROID_ENCODE_H_
