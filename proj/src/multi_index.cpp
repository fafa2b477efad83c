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

#include "phull/multi_index.hpp"

#include <limits>
#include <map>
#include <mutex>
#include <numeric>

#include "phull/error.hpp"

namespace phull {

int MultiIndex::degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), 0);
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    auto num = static_cast<std::uint64_t>(n - k + i);
    if (r > std::numeric_limits<std::uint64_t>::max() / num)
      return std::numeric_limits<std::uint64_t>::max();
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::size_t homogeneous_dimension(int n, int d) {
  require(n >= 0 && d >= 0, "homogeneous_dimension: n and d must be nonnegative");
  return static_cast<std::size_t>(binomial(n + d, d));
}

namespace {

void fill(std::vector<int>& current, std::size_t pos, int remaining,
          std::vector<MultiIndex>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    out.push_back(MultiIndex{current});
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[pos] = e;
    fill(current, pos + 1, remaining - e, out);
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_monomials(int n, int d) {
  require(n >= 0 && d >= 0, "enumerate_monomials: n and d must be nonnegative");
  std::vector<MultiIndex> out;
  out.reserve(homogeneous_dimension(n, d));
  std::vector<int> current(static_cast<std::size_t>(n) + 1, 0);
  fill(current, 0, d, out);
  return out;
}

std::size_t monomial_rank(std::span<const int> alpha) {
  const int vars = static_cast<int>(alpha.size());
  require(vars >= 1, "monomial_rank: empty multi-index");
  int remaining = 0;
  for (int a : alpha) {
    require(a >= 0, "monomial_rank: negative exponent");
    remaining += a;
  }
  std::uint64_t rank = 0;
  for (int k = 0; k + 1 < vars; ++k) {
    const int rest_vars = vars - k - 1;
    // Indices that put a larger exponent in slot k come first.
    for (int e = remaining; e > alpha[k]; --e)
      rank += binomial(remaining - e + rest_vars - 1, rest_vars - 1);
    remaining -= alpha[k];
  }
  return static_cast<std::size_t>(rank);
}

const std::vector<int>& exponent_table(int n, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<int>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, d});
  if (it != cache.end()) return it->second;
  std::vector<int> flat;
  for (const auto& m : enumerate_monomials(n, d))
    flat.insert(flat.end(), m.exponents.begin(), m.exponents.end());
  return cache.emplace(std::make_pair(n, d), std::move(flat)).first->second;
}

}  // namespace phull
