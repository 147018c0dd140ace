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

#ifndef MATROID_VALIDATE_H_
#define MATROID_VALIDATE_H_

#include <string>
#include <vector>

#include "matroid/description.h"

namespace matroid {

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::string detail;  // witness on failure
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  const ValidationCheck* Find(const std::string& name) const;
  // One line per check: "PASS name" / "FAIL name: detail".
  std::string ToString() const;
};

// Kind-specific axiom checks followed by a round trip (decode, re-encode the
// same kind, compare). Never throws on a bad description.
ValidationReport Validate(const Description& desc);

}  // namespace matroid

#endif  // MATROID_VALIDATE_H_
