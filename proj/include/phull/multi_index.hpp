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
#include <cstdint>
#include <span>
#include <vector>

namespace phull {

/// Exponent vector of a monomial Z_0^a_0 ... Z_n^a_n.
struct MultiIndex {
  std::vector<int> exponents;

  int degree() const;
  std::size_t variables() const { return exponents.size(); }
  bool operator==(const MultiIndex&) const = default;
};

/// binomial(n, k) in 64-bit; saturates at UINT64_MAX instead of wrapping.
std::uint64_t binomial(int n, int k);

/// Dimension of C[Z_0..Z_n]_d, i.e. binomial(n+d, d).
std::size_t homogeneous_dimension(int n, int d);

/// All exponent vectors of length n+1 and total degree d in graded
/// lexicographic order: the exponent of Z_0 descends first, then Z_1, ...
/// Example (n=1, d=2): (2,0), (1,1), (0,2).
std::vector<MultiIndex> enumerate_monomials(int n, int d);

/// Position of `alpha` in enumerate_monomials(alpha.size()-1, degree(alpha)).
std::size_t monomial_rank(std::span<const int> alpha);

/// Exponent table for all indices of C[Z_0..Z_n]_d, flattened row-major
/// (size * (n+1) ints). Cached per (n, d); the pointer stays valid for the
/// life of the process.
const std::vector<int>& exponent_table(int n, int d);

}  // namespace phull
