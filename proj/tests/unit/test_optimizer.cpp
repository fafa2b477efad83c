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
#include <limits>
#include <numbers>

#include "phull/lp.hpp"
#include "phull/modulus.hpp"
#include "helpers.hpp"

using namespace phull;
using phull::test::check_error;

namespace {

// Maximum of c.x over {A x <= b} in the plane by enumerating the vertices
// cut out by pairs of constraints.
double brute_force_2d(const DenseMatrix& A, const std::vector<double>& b, const double c[2]) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < A.rows; ++i)
    for (std::size_t j = i + 1; j < A.rows; ++j) {
      const double det = A(i, 0) * A(j, 1) - A(i, 1) * A(j, 0);
      if (std::abs(det) < 1e-12) continue;
      const double x = (b[i] * A(j, 1) - A(i, 1) * b[j]) / det;
      const double y = (A(i, 0) * b[j] - b[i] * A(j, 0)) / det;
      bool feasible = true;
      for (std::size_t k = 0; k < A.rows; ++k)
        feasible = feasible && A(k, 0) * x + A(k, 1) * y <= b[k] + 1e-9;
      if (feasible) best = std::max(best, c[0] * x + c[1] * y);
    }
  return best;
}

Complex dot(const CVector& c, const CVector& v) {
  Complex s = 0;
  for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * v[k];
  return s;
}

void check_witness(const BracketedValue& b, const ModulusProgram& prog) {
  double top = 0;
  for (const auto& v : prog.constraints) top = std::max(top, std::abs(dot(b.witness, v)));
  CHECK(top <= 1 + 1e-9);
  CHECK(std::abs(dot(b.witness, prog.objective)) == doctest::Approx(b.lo).epsilon(1e-9));
}

}  // namespace

TEST_CASE("dense simplex on a small polytope") {
  DenseMatrix A(3, 2);
  A(0, 0) = 1;
  A(1, 1) = 1;
  A(2, 0) = A(2, 1) = 1;
  const std::vector<double> b = {1, 2, 2.5};
  const double c[] = {1, 1};
  const auto r = solve_lp(A, b, c);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == doctest::Approx(2.5));
  CHECK(r.x[0] + r.x[1] == doctest::Approx(2.5));
  CHECK(r.max_violation <= 1e-12);
}

TEST_CASE("dense simplex agrees with vertex enumeration") {
  CounterRng rng(21, "optimizer.lp");
  for (int trial = 0; trial < 40; ++trial) {
    // Rows in every direction keep the polytope bounded; b > 0 keeps the
    // origin feasible.
    const int m = 6 + trial % 7;
    DenseMatrix A(static_cast<std::size_t>(m), 2);
    std::vector<double> b;
    for (int i = 0; i < m; ++i) {
      const double t = 2 * std::numbers::pi * (i + rng.uniform(0, 0.5)) / m;
      A(static_cast<std::size_t>(i), 0) = std::cos(t);
      A(static_cast<std::size_t>(i), 1) = std::sin(t);
      b.push_back(rng.uniform(0.2, 2.0));
    }
    const double c[] = {rng.normal(), rng.normal()};
    const auto r = solve_lp(A, b, c);
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.value == doctest::Approx(brute_force_2d(A, b, c)).epsilon(1e-9));
  }
}

TEST_CASE("dense simplex reports unboundedness and degenerate vertices") {
  DenseMatrix A(1, 2);
  A(0, 0) = -1;
  const std::vector<double> b = {1};
  const double c[] = {1, 0};
  CHECK(solve_lp(A, b, c).status == LpStatus::unbounded);

  // Eight constraints through the optimal vertex (1, 1).
  DenseMatrix D(0, 2);
  std::vector<double> bd;
  for (int i = 0; i < 8; ++i) {
    const double t = 0.1 + 1.3 * i / 7.0;
    const double row[] = {std::cos(t), std::sin(t)};
    D.append_row(row);
    bd.push_back(row[0] + row[1]);
  }
  const double low[] = {-1, 0};
  D.append_row(low);
  bd.push_back(5);
  const double low2[] = {0, -1};
  D.append_row(low2);
  bd.push_back(5);
  const double cd[] = {1, 1};
  const auto r = solve_lp(D, bd, cd);
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == doctest::Approx(2.0));

  const std::vector<double> negative = {-1};
  check_error(ErrorCode::invalid_argument, [&] { (void)solve_lp(A, negative, c); });
}

TEST_CASE("certification ratio") {
  CHECK(certification_ratio(64, 64) ==
        doctest::Approx(1 / std::pow(std::cos(std::numbers::pi / 64), 2)));
  CHECK(certification_ratio(8, 16) ==
        doctest::Approx(1 / (std::cos(std::numbers::pi / 8) * std::cos(std::numbers::pi / 16))));
}

TEST_CASE("one-dimensional modulus programs have value |o| / max |v|") {
  CounterRng rng(22, "optimizer.1d");
  for (int trial = 0; trial < 10; ++trial) {
    ModulusProgram p;
    p.objective = {rng.complex_normal()};
    double top = 0;
    for (int j = 0; j < 5; ++j) {
      p.constraints.push_back({rng.complex_normal()});
      top = std::max(top, std::abs(p.constraints.back()[0]));
    }
    const double value = std::abs(p.objective[0]) / top;
    const auto b = solve_modulus_program(p);
    REQUIRE(b.status == BracketStatus::bracketed);
    CHECK(b.lo <= value * (1 + 1e-12));
    CHECK(b.hi >= value * (1 - 1e-12));
    CHECK(b.hi <= b.lo * certification_ratio(p.m_con, p.m_obj) * (1 + 1e-12));
    check_witness(b, p);
  }
}

TEST_CASE("linear forms on circle samples obey the monomial bound") {
  // sup |a + b z| over |a + b e^{it_j}| <= 1 is |z| up to sampling error
  // for |z| > 1, attained by the coordinate function.
  ModulusProgram p;
  for (int j = 0; j < 64; ++j) p.constraints.push_back({1.0, std::polar(1.0, 2 * std::numbers::pi * j / 64)});
  for (double r : {1.5, 3.0}) {
    p.objective = {1.0, std::polar(r, 0.4)};
    const auto b = solve_modulus_program(p);
    REQUIRE(b.status == BracketStatus::bracketed);
    CHECK(b.hi >= r);
    CHECK(b.lo <= r * 1.01);
    CHECK(b.lo >= r / certification_ratio(p.m_con, p.m_obj) * 0.99);
    CHECK(b.rank == 2);
    check_witness(b, p);
  }
}

TEST_CASE("modulus bracket dominates the realified polygon LP") {
  CounterRng rng(23, "optimizer.lp_compare");
  for (int trial = 0; trial < 6; ++trial) {
    ModulusProgram p;
    p.m_con = p.m_obj = 16;
    const std::size_t D = 3;
    p.objective = test::random_cvector(rng, D);
    for (int j = 0; j < 8; ++j) p.constraints.push_back(test::random_cvector(rng, D));
    // Direction theta = 0 of the polygon LP with the same phases.
    DenseMatrix A(0, 2 * D);
    std::vector<double> bvec;
    for (const auto& v : p.constraints)
      for (int k = 0; k < p.m_con; ++k) {
        const Complex e = std::polar(1.0, 2 * std::numbers::pi * k / p.m_con);
        std::vector<double> row(2 * D);
        for (std::size_t q = 0; q < D; ++q) {
          const Complex w = e * v[q];
          row[q] = w.real();
          row[D + q] = -w.imag();
        }
        A.append_row(row);
        bvec.push_back(1);
      }
    std::vector<double> c(2 * D);
    for (std::size_t q = 0; q < D; ++q) {
      c[q] = p.objective[q].real();
      c[D + q] = -p.objective[q].imag();
    }
    const auto lp = solve_lp(A, bvec, c);
    REQUIRE(lp.status == LpStatus::optimal);
    const auto b = solve_modulus_program(p);
    REQUIRE(b.status == BracketStatus::bracketed);
    CHECK(lp.value <= b.hi * (1 + 1e-9));
    CHECK(b.lo <= b.hi);
    CHECK(b.hi <= b.lo * certification_ratio(p.m_con, p.m_obj) * (1 + 1e-9));
    check_witness(b, p);
  }
}

TEST_CASE("rank-deficient constraints are reduced to their row space") {
  ModulusProgram p;
  for (double s : {1.0, -2.0, 0.5}) p.constraints.push_back({s, s});
  SUBCASE("objective inside the row space") {
    p.objective = {3.0, 3.0};
    const auto b = solve_modulus_program(p);
    REQUIRE(b.status == BracketStatus::bracketed);
    CHECK(b.rank == 1);
    CHECK(b.lo <= 1.5 * (1 + 1e-12));
    CHECK(b.hi >= 1.5 * (1 - 1e-12));
    check_witness(b, p);
  }
  SUBCASE("objective leaving the row space") {
    p.objective = {1.0, -1.0};
    const auto b = solve_modulus_program(p);
    CHECK(b.status == BracketStatus::unbounded);
    CHECK(b.rank == 1);
    CHECK(std::isinf(b.hi));
    CHECK(b.lo > 1e6);
  }
}

TEST_CASE("degenerate programs at a constraint point") {
  // Rows are degree-4 evaluations at unit vectors and the objective is one
  // of them. (conj(x) . z)^4 is bounded by 1 on every row and equals 1 at x,
  // so the value is exactly 1, and many dual multipliers vanish there.
  CounterRng rng(24, "optimizer.degenerate");
  ModulusProgram p;
  for (int j = 0; j < 40; ++j) {
    auto z = test::random_cvector(rng, 3);
    const double r = test::norm2(z);
    for (auto& c : z) c /= r;
    p.constraints.push_back(monomial_values(2, 4, z));
  }
  for (std::size_t j : {0u, 7u, 21u}) {
    p.objective = p.constraints[j];
    const auto b = solve_modulus_program(p);
    REQUIRE(b.status == BracketStatus::bracketed);
    CHECK(b.lo <= 1 + 1e-9);
    CHECK(b.hi >= 1 - 1e-9);
    CHECK(b.hi <= certification_ratio(p.m_con, p.m_obj) * (1 + 1e-6));
  }
}

TEST_CASE("modulus program argument checks") {
  ModulusProgram p;
  p.objective = {1.0};
  check_error(ErrorCode::invalid_argument, [&] { (void)solve_modulus_program(p); });
  p.constraints = {{1.0}};
  p.m_con = 7;
  check_error(ErrorCode::invalid_argument, [&] { (void)solve_modulus_program(p); });
}
