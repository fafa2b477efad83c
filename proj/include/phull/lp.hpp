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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace phull {

/// Row-major dense matrix.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
  void append_row(std::span<const double> r);
};

enum class LpStatus { optimal, unbounded, numerical_failure };

const char* to_string(LpStatus s);

struct LpOptions {
  double pivot_tolerance = 1e-11;
  double optimality_tolerance = 1e-12;
  double feasibility_tolerance = 1e-9;
  /// Consecutive degenerate pivots before switching to Bland's rule for good.
  int degenerate_limit = 50;
  /// 0 selects 50 * (rows + cols).
  std::size_t max_iterations = 0;
};

struct LpResult {
  LpStatus status = LpStatus::numerical_failure;
  double value = 0;
  std::vector<double> x;
  std::size_t iterations = 0;
  bool used_bland = false;
  /// max(0, max_i (A x - b)_i)
  double max_violation = 0;
  /// Smallest and largest |pivot| met; their ratio is the conditioning hint
  /// reported with numerical_failure.
  double min_pivot = 0;
  double max_pivot = 0;
  std::string diagnostics;
};

/// maximize c.x subject to A x <= b with x free. The origin must be feasible
/// (b >= 0); negative b raises invalid_argument. Dense tableau simplex,
/// Dantzig pricing with a permanent switch to Bland's rule after a run of
/// degenerate pivots.
LpResult solve_lp(const DenseMatrix& A, std::span<const double> b, std::span<const double> c,
                  const LpOptions& options = {});

}  // namespace phull
