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

#include "phull/families.hpp"
#include "helpers.hpp"

using namespace phull;
using phull::test::check_error;

namespace {

// exp(z) minus its Taylor polynomial of degree d, summed directly.
Complex exp_tail(Complex z, int d) {
  Complex term = 1, s = 0;
  for (int n = 1; n <= d; ++n) term *= z / static_cast<double>(n);
  for (int n = d + 1; n < d + 60; ++n) {
    term *= z / static_cast<double>(n);
    s += term;
  }
  return s;
}

GapSeriesGraph small_gap() {
  GapSeriesGraph g;
  g.exponents = {1, 2, 6, 24, 120};
  g.coeffs = {1.0, 0.25, 1.0 / 9, 1.0 / 16, 1.0 / 25};
  return g;
}

}  // namespace

TEST_CASE("entire truncation family vanishes up to the Taylor tail") {
  const auto g = exp_graph(0.5);
  for (int d : {1, 4, 9}) {
    const auto p = entire_truncation_family(g.taylor, d);
    CHECK(p.degree_cap() == d);
    for (Complex z : {Complex{0.5, 0}, Complex{0.1, -0.4}}) {
      const CVector zw = {z, std::exp(z)};
      const Complex tail = exp_tail(z, d);
      CHECK(std::abs(p(zw) - tail) <= 1e-14 + 1e-12 * std::abs(tail));
      CHECK(std::abs(family_tail(g, d, z) - tail) <= 1e-15 + 1e-12 * std::abs(tail));
    }
  }
  check_error(ErrorCode::invalid_argument,
              [&] { (void)entire_truncation_family(g.taylor, static_cast<int>(g.taylor.size())); });
}

TEST_CASE("gap truncation family keeps the first k terms") {
  const auto g = small_gap();
  const Complex z{0.3, 0.4};
  for (int k = 1; k <= 3; ++k) {
    const auto p = gap_truncation_family(g, k);
    Complex tail = 0;
    for (std::size_t j = static_cast<std::size_t>(k); j < g.exponents.size(); ++j)
      tail += g.coeffs[j] * std::pow(z, static_cast<double>(g.exponents[j]));
    const CVector zw = {z, graph_function(g, z)};
    CHECK(std::abs(p(zw) - tail) <= 1e-15);
    CHECK(std::abs(family_tail(g, k, z) - tail) <= 1e-15);
    CHECK(p.degree_cap() == g.exponents[static_cast<std::size_t>(k) - 1]);
  }
}

TEST_CASE("probes split into curve parameter and offset") {
  const CurveGenerator g = exp_graph(0.5);
  const auto on = FamilyProbe::from_point(g, 0.3, std::exp(0.3));
  CHECK(on.offset == Complex{0, 0});
  const auto off = FamilyProbe::from_point(g, 0.3, 2.0);
  CHECK(std::abs(off.offset - (2.0 - std::exp(0.3))) < 1e-14);
}

TEST_CASE("exclusion certificates on the exp graph") {
  const auto K = sample(exp_graph(0.5), 200);
  const auto out = certify_exclusion(K, FamilyProbe::from_point(K.generator, 0.0, 2.0), {5, 10});
  CHECK(out.family == "entire_graph");
  CHECK(out.verdict == ExclusionVerdict::diverging);
  CHECK(out.sampled_growth);
  CHECK(out.bound_growth);
  for (const auto& r : out.records) {
    // Records are re-derivable from the stored columns.
    double sup = 0;
    for (auto z : K.parameters) sup = std::max(sup, std::abs(exp_tail(z, r.rung)));
    CHECK(r.sup_sampled == doctest::Approx(sup).epsilon(1e-10));
    CHECK(r.value_at_x == doctest::Approx(std::abs(1.0 + exp_tail(0.0, r.rung))));
    CHECK(r.c_sampled == doctest::Approx(std::pow(r.value_at_x / r.sup_sampled, 1.0 / r.d)));
    // Sampling can only under-estimate the sup over the curve.
    CHECK(r.sup_sampled <= r.sup_bound * (1 + 1e-12));
    CHECK(r.c_bound <= r.c_sampled * (1 + 1e-12));
  }

  const auto on = certify_exclusion(K, FamilyProbe::from_point(K.generator, 0.3, std::exp(0.3)),
                                    {5, 10});
  CHECK(on.verdict == ExclusionVerdict::bounded);
}

TEST_CASE("exclusion certificates on the gap series graph") {
  const auto g = small_gap();
  const auto K = sample(g, 200);
  const Complex f = graph_function(g, 0.5);
  // The 1/k^2 coefficients slow the implied growth at low rungs, so the
  // ladder reaches the fourth term.
  const auto off =
      certify_exclusion(K, FamilyProbe::from_point(K.generator, 0.5, f + 1.0), {2, 3, 4});
  CHECK(off.family == "gap_series_graph");
  CHECK(off.verdict == ExclusionVerdict::diverging);
  const auto on = certify_exclusion(K, FamilyProbe::from_point(K.generator, 0.5, f), {2, 3, 4});
  CHECK(on.verdict == ExclusionVerdict::bounded);
}

TEST_CASE("exclusion certificates need a graph family") {
  const auto K = sample(CircleInLine{}, 16);
  check_error(ErrorCode::inapplicable,
              [&] { (void)certify_exclusion(K, FamilyProbe{0.0, 1.0}, {2, 3}); });
  check_error(ErrorCode::inapplicable,
              [&] { (void)FamilyProbe::from_point(K.generator, 0.0, 1.0); });
}

TEST_CASE("torus curve probes") {
  const auto K = sample(TorusExpCurve{}, 120);
  const std::vector<std::pair<Complex, Complex>> probes = {{1.0, std::exp(2.0)}, {1.0, 1.0}};
  const auto res = torus_exp_curve_probe(K, probes, {1, 2, 4});
  REQUIRE(res.size() == 2);
  CHECK(res[0].nearest_sample < 1e-12);
  CHECK(res[0].classification == Classification::converged);
  CHECK(res[1].classification == Classification::diverging);
  for (const auto& e : res[1].profile) CHECK(e.status == ExtremalStatus::bracketed);
}
