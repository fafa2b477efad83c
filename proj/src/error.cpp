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

#include "phull/error.hpp"

namespace phull {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::zero_representative: return "zero_representative";
    case ErrorCode::chart_violation: return "chart_violation";
    case ErrorCode::aliasing: return "aliasing";
    case ErrorCode::budget_exceeded: return "budget_exceeded";
    case ErrorCode::numerical_failure: return "numerical_failure";
    case ErrorCode::not_enclosing: return "not_enclosing";
    case ErrorCode::on_compactum: return "on_compactum";
    case ErrorCode::inapplicable: return "inapplicable";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

}  // namespace phull
