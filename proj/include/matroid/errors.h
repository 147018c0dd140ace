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

#ifndef MATROID_ERRORS_H_
#define MATROID_ERRORS_H_

#include <stdexcept>
#include <string>

namespace matroid {

class MatroidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violated by the caller (bad mask, overlapping minor sets, ...).
class InputError : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

// Ground set would exceed the supported width.
class CapacityError : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

class PlanError : public MatroidError {
 public:
  using MatroidError::MatroidError;
};

class ParseError : public MatroidError {
 public:
  ParseError(int line, const std::string& what)
      : MatroidError("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Effective ground-set cap: kMaxElements, lowered (never raised) by the
// MATROID_MAX_N environment variable.
int MaxGroundSize();

// Throws CapacityError if n exceeds MaxGroundSize() or is negative.
void CheckCapacity(int n, const char* what);

}  // namespace matroid

#endif  // MATROID_ERRORS_H_
