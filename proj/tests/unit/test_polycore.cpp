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

#include <cmath>
#include <numbers>
#include <set>

#include "helpers.hpp"

using namespace phull;
using phull::test::check_error;

TEST_CASE("binomial and dimensions") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(60, 30) == 118264581564861424ULL);
  CHECK(binomial(200, 100) == UINT64_MAX);
  CHECK(homogeneous_dimension(2, 3) == 10);
  CHECK(homogeneous_dimension(1, 7) == 8);
  CHECK(homogeneous_dimension(0, 4) == 1);
}

TEST_CASE("monomials are enumerated in graded lexicographic order") {
  const auto m = enumerate_monomials(1, 2);
  REQUIRE(m.size() == 3);
  CHECK(m[0].exponents == std::vector<int>{2, 0});
  CHECK(m[1].exponents == std::vector<int>{1, 1});
  CHECK(m[2].exponents == std::vector<int>{0, 2});

  for (int n : {0, 1, 2, 3})
    for (int d : {0, 1, 4}) {
      const auto all = enumerate_monomials(n, d);
      CHECK(all.size() == homogeneous_dimension(n, d));
      std::set<std::vector<int>> seen;
      for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].degree() == d);
        CHECK(monomial_rank(all[i].exponents) == i);
        seen.insert(all[i].exponents);
        if (i > 0) CHECK(all[i - 1].exponents > all[i].exponents);
      }
      CHECK(seen.size() == all.size());
      const auto& table = exponent_table(n, d);
      CHECK(table.size() == all.size() * static_cast<std::size_t>(n + 1));
    }
}

TEST_CASE("compensated summation recovers cancelled terms") {
  CompensatedSum s;
  s.add({1e16, -1e16});
  s.add({1.0, 2.0});
  s.add({-1e16, 1e16});
  CHECK(s.value() == Complex{1.0, 2.0});
}

TEST_CASE("evaluation matches the naive expansion") {
  CounterRng rng(1, "polycore.eval");
  for (int n : {1, 2, 3})
    for (int d : {0, 1, 3, 6}) {
      const auto p = test::random_poly(rng, n, d);
      const auto z = test::random_cvector(rng, static_cast<std::size_t>(n) + 1);
      const Complex want = test::naive_eval(p, z);
      CHECK(std::abs(eval(p, z) - want) <= 1e-12 * (1 + std::abs(want)));
      CHECK(std::abs(p(z) - want) <= 1e-12 * (1 + std::abs(want)));
      const auto row = monomial_values(n, d, z);
      Complex dot = 0;
      for (std::size_t i = 0; i < row.size(); ++i) dot += p.coeffs()[i] * row[i];
      CHECK(std::abs(dot - want) <= 1e-12 * (1 + std::abs(want)));
    }
}

TEST_CASE("coefficient access by multi-index") {
  HomogeneousPolynomial p(2, 3);
  const int a[] = {1, 0, 2};
  p.set_coeff(a, {2.0, -1.0});
  CHECK(p.coeff(a) == Complex{2.0, -1.0});
  const auto m = HomogeneousPolynomial::monomial(a, 3.0);
  CHECK(m.n() == 2);
  CHECK(m.degree() == 3);
  const Complex z[] = {2.0, 5.0, Complex{0, 1}};
  CHECK(std::abs(m(z) - Complex{-6.0, 0}) < 1e-14);
  const int wrong_degree[] = {1, 1, 0};
  check_error(ErrorCode::invalid_argument, [&] { p.set_coeff(wrong_degree, 1.0); });
  const int wrong_arity[] = {3, 0};
  check_error(ErrorCode::dimension_mismatch, [&] { (void)p.coeff(wrong_arity); });
}

TEST_CASE("section norm depends only on the point") {
  CounterRng rng(2, "polycore.fs");
  const auto p = test::random_poly(rng, 2, 4);
  const auto z = test::random_cvector(rng, 3);
  const double base = fs_section_norm(p, z);
  CHECK(base == doctest::Approx(std::abs(test::naive_eval(p, z)) / std::pow(test::norm2(z), 4)));
  for (Complex lambda : {Complex{3, 0}, Complex{0, -0.25}, std::polar(7.0, 1.1)}) {
    CVector w = z;
    for (auto& c : w) c *= lambda;
    CHECK(fs_section_norm(p, w) == doctest::Approx(base).epsilon(1e-12));
  }
  const CVector zero(3);
  check_error(ErrorCode::zero_representative, [&] { (void)fs_section_norm(p, zero); });
}

TEST_CASE("products and powers are exact convolutions") {
  // (Z0 + Z1)(Z0 - Z1) = Z0^2 - Z1^2
  const HomogeneousPolynomial a(1, 1, CVector{1.0, 1.0}), b(1, 1, CVector{1.0, -1.0});
  const auto c = multiply(a, b);
  REQUIRE(c.size() == 3);
  CHECK(c.coeffs()[0] == Complex{1, 0});
  CHECK(c.coeffs()[1] == Complex{0, 0});
  CHECK(c.coeffs()[2] == Complex{-1, 0});

  CounterRng rng(3, "polycore.mul");
  const auto p = test::random_poly(rng, 2, 2), q = test::random_poly(rng, 2, 3);
  const auto z = test::random_cvector(rng, 3);
  const Complex pq = multiply(p, q)(z);
  CHECK(std::abs(pq - p(z) * q(z)) <= 1e-12 * std::abs(pq));
  const auto p3 = veronese_power(p, 3);
  CHECK(p3.degree() == 6);
  const Complex want = p(z) * p(z) * p(z);
  CHECK(std::abs(p3(z) - want) <= 1e-12 * std::abs(want));
  CHECK(std::abs(multiply(multiply(p, p), p)(z) - want) <= 1e-12 * std::abs(want));

  check_error(ErrorCode::dimension_mismatch, [&] { (void)multiply(a, p); });
  check_error(ErrorCode::budget_exceeded, [&] { (void)veronese_power(p, 40); });
  check_error(ErrorCode::budget_exceeded, [] { HomogeneousPolynomial(1, 65); });
}

TEST_CASE("degree components are extracted exactly from values") {
  // p(z) = 2 + (z0 - 3 z1) + z0 z1^2 on C^2, components of degree 0, 1, 3.
  auto p = [](std::span<const Complex> z) {
    return 2.0 + (z[0] - 3.0 * z[1]) + z[0] * z[1] * z[1];
  };
  const Complex z[] = {Complex{0.3, -1.2}, Complex{2.0, 0.5}};
  const Complex want[] = {2.0, z[0] - 3.0 * z[1], 0.0, z[0] * z[1] * z[1]};
  for (int N : {4, 7, 16})
    for (int m = 0; m < 4; ++m) {
      const Complex got = extract_degree_component(p, z, m, N, 3);
      CHECK(std::abs(got - want[m]) <= 1e-13 * (1 + std::abs(want[m])));
    }
  check_error(ErrorCode::aliasing, [&] { (void)extract_degree_component(p, z, 1, 3, 3); });
  check_error(ErrorCode::invalid_argument, [&] { (void)extract_degree_component(p, z, 5, 4, 3); });
}

TEST_CASE("polydisk sup sampling on the torus") {
  // |Z0 + Z1| peaks at 2 on equal phases, which the grid contains.
  const HomogeneousPolynomial s(1, 1, CVector{1.0, 1.0});
  CHECK(polydisk_sup_lower(s, 5) == doctest::Approx(2.0));
  const int alpha[] = {2, 1, 0};
  CHECK(polydisk_sup_lower(HomogeneousPolynomial::monomial(alpha, 0.5), 13) ==
        doctest::Approx(0.5));
  CounterRng rng(4, "polycore.sup");
  const auto p = test::random_poly(rng, 2, 3);
  CHECK(polydisk_sup_lower(p, 13) <= coeff_l1_norm(p) * (1 + 1e-12));
  check_error(ErrorCode::invalid_argument, [&] { (void)polydisk_sup_lower(p, 12); });
  check_error(ErrorCode::budget_exceeded, [&] { (void)polydisk_sup_lower(p, 13, 100); });
}

TEST_CASE("affine polynomials homogenize by the first coordinate") {
  CounterRng rng(5, "polycore.affine");
  AffinePolynomial p(2, 3, test::random_cvector(rng, homogeneous_dimension(2, 3)));
  const auto P = p.homogenize();
  CHECK(P.coeffs() == p.coeffs());
  CHECK(AffinePolynomial::dehomogenize(P).coeffs() == p.coeffs());
  const CVector z = test::random_cvector(rng, 2);
  const CVector Z = {1.0, z[0], z[1]};
  CHECK(std::abs(p(z) - P(Z)) <= 1e-12 * std::abs(P(Z)));
  CHECK(affine_section_norm(p, z, 3) == doctest::Approx(fs_section_norm(P, Z)).epsilon(1e-12));
  const auto row = affine_monomial_values(2, 3, z);
  Complex dot = 0;
  for (std::size_t i = 0; i < row.size(); ++i) dot += p.coeffs()[i] * row[i];
  CHECK(std::abs(dot - p(z)) <= 1e-12 * std::abs(p(z)));

  const int beta[] = {1, 2};
  p.set_coeff(beta, 4.0);
  CHECK(p.coeff(beta) == Complex{4.0, 0});
  const int high[] = {2, 2};
  check_error(ErrorCode::invalid_argument, [&] { p.set_coeff(high, 1.0); });
  check_error(ErrorCode::invalid_argument, [&] { (void)affine_section_norm(p, z, 2); });
}

TEST_CASE("counter generator is a pure function of seed, stream and index") {
  CounterRng a(42, "stream"), b(42, "stream"), c(42, "other");
  for (int i = 0; i < 5; ++i) CHECK(a.next_u64() == b.next_u64());
  CHECK(a.next_u64() != c.next_u64());
  double mean = 0;
  for (int i = 0; i < 20000; ++i) mean += a.uniform();
  CHECK(mean / 20000 == doctest::Approx(0.5).epsilon(0.02));
}
