// Copyright 2026 The phull Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace phull {

enum class ErrorCode {
  invalid_argument,
  dimension_mismatch,
  zero_representative,
  chart_violation,
  aliasing,
  budget_exceeded,
  numerical_failure,
  not_enclosing,
  on_compactum,
  inapplicable,
  io,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the core carries one of the codes above; the C
/// boundary maps them one-to-one onto phull_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, const std::string& what,
                    ErrorCode code = ErrorCode::invalid_argument) {
  if (!ok) fail(code, what);
}

}  // namespace phull
