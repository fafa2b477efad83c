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

#include "phull/json_io.hpp"
#include "helpers.hpp"

using namespace phull;
using phull::test::check_error;

TEST_CASE("complex numbers and vectors") {
  CHECK(complex_json({1.5, -2}) == Json::parse("[1.5, -2.0]"));
  CHECK(complex_from_json(Json::parse("[0.25, 3]")) == Complex{0.25, 3});
  CHECK(complex_from_json(Json(2.5)) == Complex{2.5, 0});
  check_error(ErrorCode::invalid_argument, [] { (void)complex_from_json(Json::parse("[1, 2, 3]")); });
  check_error(ErrorCode::invalid_argument, [] { (void)complex_from_json(Json("x")); });
  const CVector v = {1.0, Complex{0, 1}};
  CHECK(cvector_from_json(cvector_json(v)) == v);
  CHECK(number_json(0.5) == Json(0.5));
  CHECK(number_json(std::numeric_limits<double>::infinity()).is_null());
  CHECK(number_json(std::nan("")).is_null());
}

TEST_CASE("strict key checking") {
  const auto j = Json::parse(R"({"a": 1, "b": 2})");
  check_keys(j, {"a", "b", "c"}, "test");
  check_error(ErrorCode::invalid_argument, [&] { check_keys(j, {"a"}, "test"); });
  check_error(ErrorCode::invalid_argument,
              [] { (void)solver_from_json(Json::parse(R"({"m_conn": 8})")); });
}

TEST_CASE("polynomial round trip") {
  CounterRng rng(61, "json.poly");
  const auto p = test::random_poly(rng, 2, 3);
  const auto q = polynomial_from_json(Json::parse(to_json(p).dump()));
  CHECK(q.n() == 2);
  CHECK(q.degree() == 3);
  CHECK(q.coeffs() == p.coeffs());
  check_error(ErrorCode::dimension_mismatch, [] {
    (void)polynomial_from_json(Json::parse(R"({"n": 1, "d": 2, "coeffs": [[1, 0]]})"));
  });
}

TEST_CASE("generator round trips") {
  GapSeriesGraph gap;
  gap.exponents = {1, 2, 6};
  gap.coeffs = {1.0, 0.5, 0.25};
  CircleInLine circle;
  circle.radius = 2;
  circle.center = Complex{0.5, 0};
  ExplicitCloud cloud;
  cloud.n = 1;
  cloud.points = {{1.0, 0.0}, {1.0, 1.0}};
  for (const CurveGenerator& g :
       {CurveGenerator{circle}, CurveGenerator{exp_graph(0.5, 30)}, CurveGenerator{gap},
        CurveGenerator{TorusExpCurve{}}, CurveGenerator{cloud}}) {
    const auto back = generator_from_json(Json::parse(to_json(g).dump()));
    CHECK(generator_kind(back) == generator_kind(g));
    CHECK(to_json(back) == to_json(g));
  }
  const auto e = generator_from_json(
      Json::parse(R"({"kind": "entire_graph", "function": "exp", "terms": 20, "radius": 0.5})"));
  const auto& eg = std::get<EntireGraph>(e);
  CHECK(eg.taylor.size() == 20);
  CHECK(std::abs(eg.taylor[3] - 1.0 / 6) < 1e-16);
  check_error(ErrorCode::invalid_argument,
              [] { (void)generator_from_json(Json::parse(R"({"kind": "sphere"})")); });
}

TEST_CASE("compactum round trip keeps the fingerprint") {
  const auto K = with_orbit(sample(exp_graph(0.5), 24), 5);
  const auto back = compactum_from_json(Json::parse(to_json(K).dump()));
  CHECK(back.size() == K.size());
  CHECK(back.orbit_size == 5);
  CHECK(fingerprint(back) == fingerprint(K));
}

TEST_CASE("options, charts and grids round trip") {
  SolverOptions s;
  s.m_con = 128;
  s.m_obj = 32;
  const auto s2 = solver_from_json(to_json(s));
  CHECK(s2.m_con == 128);
  CHECK(s2.m_obj == 32);

  Thresholds t;
  t.tau_conv = 0.5;
  CHECK(thresholds_from_json(to_json(t)).tau_conv == 0.5);

  ChartSpec c;
  c.base = {1.0, 2.0};
  c.direction = {0.0, Complex{0, 1}};
  CHECK(chart_from_json(to_json(c)).direction == c.direction);
  check_error(ErrorCode::invalid_argument,
              [] { (void)chart_from_json(Json::parse(R"({"base": [1], "direction": [0]})")); });

  GridSpec polar;
  polar.kind = GridSpec::Kind::polar;
  polar.radii = {1, 2};
  polar.phases = 3;
  GridSpec list;
  list.kind = GridSpec::Kind::list;
  list.points = {Complex{1, 1}};
  for (const auto& g : {GridSpec{}, polar, list})
    CHECK(grid_points(grid_from_json(to_json(g))) == grid_points(g));
}

TEST_CASE("result serialization") {
  ExtremalResult r;
  r.x = ProjectivePoint::from(CVector{1.0, 2.0});
  r.d = 4;
  r.lam_lo = 0.5;
  r.lam_hi = std::numeric_limits<double>::infinity();
  r.status = ExtremalStatus::interpolation_regime;
  const auto j = to_json(r);
  CHECK(j["lam_hi"].is_null());
  CHECK(j["status"] == "interpolation_regime");
  CHECK(j["d"] == 4);
}

TEST_CASE("exclusion records are re-derivable from their JSON") {
  const auto K = sample(exp_graph(0.5), 200);
  const auto c = certify_exclusion(K, FamilyProbe::from_point(K.generator, 0.0, 2.0), {5, 10, 20});
  const auto j = Json::parse(to_json(c).dump());
  CHECK(j["verdict"] == "diverging");
  for (const auto& r : j["records"]) {
    const double d = r["d"];
    const double value = r["value_at_x"];
    CHECK(std::abs(std::pow(value / r["sup_sampled"].get<double>(), 1 / d) -
                   r["c_sampled"].get<double>()) <= 1e-10 * r["c_sampled"].get<double>());
    CHECK(std::abs(std::pow(value / r["sup_bound"].get<double>(), 1 / d) -
                   r["c_bound"].get<double>()) <= 1e-10 * r["c_bound"].get<double>());
  }
}

TEST_CASE("scan manifest") {
  const auto K = sample(CircleInLine{}, 32);
  ScanSpec spec;
  spec.grid.nx = spec.grid.ny = 2;
  spec.degrees = {1, 2};
  const auto m = scan_manifest(scan(K, spec), K);
  for (const char* key : {"chart", "grid", "degrees", "thresholds", "K_fingerprint", "cells",
                          "classifications", "failed_cells"})
    CHECK_MESSAGE(m.contains(key), key);
  CHECK(m["K_fingerprint"] == fingerprint(K));
  CHECK(m["failed_cells"] == 0);
}
