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

// Shared helpers for the unit tests.

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <doctest.h>

#include "phull/error.hpp"
#include "phull/multi_index.hpp"
#include "phull/polynomial.hpp"
#include "phull/rng.hpp"

namespace phull::test {

// Runs `body` and checks that it throws phull::Error carrying `code`.
template <class F>
void check_error(ErrorCode code, F&& body) {
  bool thrown = false;
  try {
    body();
  } catch (const Error& e) {
    thrown = true;
    CHECK_MESSAGE(e.code() == code, e.what());
  }
  CHECK_MESSAGE(thrown, "expected phull::Error ", to_string(code));
}

inline CVector random_cvector(CounterRng& rng, std::size_t len) {
  CVector v(len);
  for (auto& z : v) z = rng.complex_normal();
  return v;
}

inline HomogeneousPolynomial random_poly(CounterRng& rng, int n, int d) {
  return HomogeneousPolynomial(n, d, random_cvector(rng, homogeneous_dimension(n, d)));
}

// Evaluation straight from the exponent list, without the library's
// monomial tables.
inline Complex naive_eval(const HomogeneousPolynomial& p, std::span<const Complex> z) {
  const auto monos = enumerate_monomials(p.n(), p.degree());
  Complex s = 0;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    Complex term = p.coeffs()[i];
    for (std::size_t k = 0; k < z.size(); ++k)
      for (int e = 0; e < monos[i].exponents[k]; ++e) term *= z[k];
    s += term;
  }
  return s;
}

inline double norm2(std::span<const Complex> z) {
  double s = 0;
  for (auto c : z) s += std::norm(c);
  return std::sqrt(s);
}

}  // namespace phull::test
