// Copyright 2026 The ramsey-online Authors
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

#ifndef RAMSEY_ERRORS_H_
#define RAMSEY_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ramsey {

// A caller handed an operation arguments outside its contract.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A proven invariant failed at runtime. Always a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A Builder declared a win the engine could not confirm, or misbehaved.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The exact solver refuses instances whose game tree is too large.
class IntractableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed transcript or coloring document.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace internal {

[[noreturn]] void ThrowInvariant(const char* expr, const char* file, int line,
                                 const std::string& detail);

}  // namespace internal
}  // namespace ramsey

// Always-on invariant check; throws InvariantViolation.
#define RAMSEY_INVARIANT(cond, detail)                                   \
  do {                                                                   \
    if (!(cond)) {                                                       \
      ::ramsey::internal::ThrowInvariant(#cond, __FILE__, __LINE__,      \
                                         (detail));                      \
    }                                                                    \
  } while (false)

#endif  // RAMSEY_ERRORS_H_
