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

#include "matroid/subset_mask.h"

#include <cstdlib>
#include <string>

#include "matroid/errors.h"

namespace matroid {

std::string ToBitstring(SubsetMask m, int n) {
  std::string out(static_cast<size_t>(n), '0');
  for (int e : m) {
    if (e < n) out[static_cast<size_t>(e)] = '1';
  }
  return out;
}

bool FromBitstring(std::string_view text, SubsetMask* out) {
  if (text.size() > static_cast<size_t>(kMaxElements)) return false;
  SubsetMask m;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      m = m.with(static_cast<int>(i));
    } else if (text[i] != '0') {
      return false;
    }
  }
  *out = m;
  return true;
}

int MaxGroundSize() {
  const char* env = std::getenv("MATROID_MAX_N");
  if (env == nullptr || *env == '\0') return kMaxElements;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || value < 0) return kMaxElements;
  return value < kMaxElements ? static_cast<int>(value) : kMaxElements;
}

void CheckCapacity(int n, const char* what) {
  if (n < 0) throw InputError(std::string(what) + ": negative element count");
  const int cap = MaxGroundSize();
  if (n > cap) {
    throw CapacityError(std::string(what) + ": " + std::to_string(n) +
                        " elements exceeds the cap of " + std::to_string(cap));
  }
}

}  // namespace matroid
