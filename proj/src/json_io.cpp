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

#include "phull/json_io.hpp"

#include <cmath>

#include "phull/error.hpp"

namespace phull {

void check_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  require(j.is_object(), where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    require(ok, where + ": unknown key '" + key + "'");
  }
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(),
          "json: complex numbers are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json cvector_json(const CVector& v) {
  Json a = Json::array();
  for (const auto& z : v) a.push_back(complex_json(z));
  return a;
}

CVector cvector_from_json(const Json& j) {
  require(j.is_array(), "json: expected an array of complex numbers");
  CVector v;
  for (const auto& e : j) v.push_back(complex_from_json(e));
  return v;
}

Json number_json(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json to_json(const HomogeneousPolynomial& p) {
  return {{"n", p.n()}, {"d", p.degree()}, {"coeffs", cvector_json(p.coeffs())}};
}

HomogeneousPolynomial polynomial_from_json(const Json& j) {
  check_keys(j, {"n", "d", "coeffs"}, "polynomial");
  return HomogeneousPolynomial(j.at("n").get<int>(), j.at("d").get<int>(),
                               cvector_from_json(j.at("coeffs")));
}

Json to_json(const CurveGenerator& g) {
  Json j{{"kind", generator_kind(g)}};
  if (auto* c = std::get_if<CircleInLine>(&g)) {
    j["n"] = c->n;
    j["base"] = cvector_json(c->base);
    j["direction"] = cvector_json(c->direction);
    j["center"] = complex_json(c->center);
    j["radius"] = c->radius;
  } else if (auto* e = std::get_if<EntireGraph>(&g)) {
    if (e->function == "exp") {
      j["function"] = "exp";
      j["terms"] = e->taylor.size();
    } else {
      j["taylor"] = cvector_json(e->taylor);
    }
    j["radius"] = e->radius;
  } else if (auto* s = std::get_if<GapSeriesGraph>(&g)) {
    j["exponents"] = s->exponents;
    j["coeffs"] = cvector_json(s->coeffs);
    j["lambda"] = s->lambda;
    j["radius"] = s->radius;
  } else if (auto* x = std::get_if<ExplicitCloud>(&g)) {
    j["n"] = x->n;
    Json pts = Json::array();
    for (const auto& p : x->points) pts.push_back(cvector_json(p));
    j["points"] = pts;
  }
  return j;
}

CurveGenerator generator_from_json(const Json& j) {
  require(j.is_object() && j.contains("kind"), "generator: missing 'kind'");
  const auto kind = j.at("kind").get<std::string>();
  CurveGenerator g;
  if (kind == "circle_in_line") {
    check_keys(j, {"kind", "n", "base", "direction", "center", "radius"}, "circle_in_line");
    CircleInLine c;
    c.n = j.value("n", 1);
    if (j.contains("base")) c.base = cvector_from_json(j["base"]);
    if (j.contains("direction")) c.direction = cvector_from_json(j["direction"]);
    if (j.contains("center")) c.center = complex_from_json(j["center"]);
    c.radius = j.value("radius", 1.0);
    g = c;
  } else if (kind == "entire_graph") {
    check_keys(j, {"kind", "taylor", "function", "terms", "radius"}, "entire_graph");
    const double r = j.value("radius", 0.5);
    if (j.contains("function")) {
      require(j["function"] == "exp", "entire_graph: only function 'exp' is built in");
      require(!j.contains("taylor"), "entire_graph: give either 'function' or 'taylor'");
      g = exp_graph(r, j.value("terms", 60));
    } else {
      EntireGraph e;
      e.taylor = cvector_from_json(j.at("taylor"));
      e.radius = r;
      g = e;
    }
  } else if (kind == "gap_series_graph") {
    check_keys(j, {"kind", "exponents", "coeffs", "lambda", "radius"}, "gap_series_graph");
    GapSeriesGraph s;
    s.exponents = j.at("exponents").get<std::vector<long long>>();
    s.coeffs = cvector_from_json(j.at("coeffs"));
    s.lambda = j.value("lambda", 1.5);
    s.radius = j.value("radius", 0.5);
    g = s;
  } else if (kind == "torus_exp_curve") {
    check_keys(j, {"kind"}, "torus_exp_curve");
    g = TorusExpCurve{};
  } else if (kind == "explicit_cloud") {
    check_keys(j, {"kind", "n", "points"}, "explicit_cloud");
    ExplicitCloud x;
    x.n = j.at("n").get<int>();
    for (const auto& p : j.at("points")) x.points.push_back(cvector_from_json(p));
    g = x;
  } else {
    fail(ErrorCode::invalid_argument, "generator: unknown kind '" + kind + "'");
  }
  validate(g);
  return g;
}

Json to_json(const SampledCompactum& K) {
  Json pts = Json::array();
  for (const auto& p : K.points) pts.push_back(cvector_json(p.rep));
  return {{"n", K.n}, {"generator", to_json(K.generator)}, {"orbit_size", K.orbit_size},
          {"points", pts}, {"parameters", cvector_json(K.parameters)}};
}

SampledCompactum compactum_from_json(const Json& j) {
  check_keys(j, {"n", "generator", "orbit_size", "points", "parameters"}, "compactum");
  std::vector<CVector> reps;
  for (const auto& p : j.at("points")) reps.push_back(cvector_from_json(p));
  CurveGenerator g = ExplicitCloud{};
  if (j.contains("generator")) g = generator_from_json(j["generator"]);
  auto K = make_compactum(j.at("n").get<int>(), reps, g);
  K.orbit_size = j.value("orbit_size", 1);
  if (j.contains("parameters")) K.parameters = cvector_from_json(j["parameters"]);
  require(K.parameters.empty() || K.parameters.size() == K.size(),
          "compactum: one parameter per point", ErrorCode::dimension_mismatch);
  return K;
}

SolverOptions solver_from_json(const Json& j) {
  check_keys(j, {"m_con", "m_obj", "pivot_tolerance", "optimality_tolerance"}, "solver");
  SolverOptions s;
  s.m_con = j.value("m_con", s.m_con);
  s.m_obj = j.value("m_obj", s.m_obj);
  s.modulus.pivot_tolerance = j.value("pivot_tolerance", s.modulus.pivot_tolerance);
  s.modulus.optimality_tolerance = j.value("optimality_tolerance", s.modulus.optimality_tolerance);
  return s;
}

Json to_json(const SolverOptions& s) {
  return {{"m_con", s.m_con}, {"m_obj", s.m_obj},
          {"pivot_tolerance", s.modulus.pivot_tolerance},
          {"optimality_tolerance", s.modulus.optimality_tolerance}};
}

Thresholds thresholds_from_json(const Json& j) {
  check_keys(j, {"tau_conv", "tau_grow", "on_k_distance"}, "thresholds");
  Thresholds t;
  t.tau_conv = j.value("tau_conv", t.tau_conv);
  t.tau_grow = j.value("tau_grow", t.tau_grow);
  t.on_k_distance = j.value("on_k_distance", t.on_k_distance);
  return t;
}

Json to_json(const Thresholds& t) {
  return {{"tau_conv", t.tau_conv}, {"tau_grow", t.tau_grow}, {"on_k_distance", t.on_k_distance}};
}

ChartSpec chart_from_json(const Json& j) {
  check_keys(j, {"base", "direction"}, "chart");
  ChartSpec c;
  c.base = cvector_from_json(j.at("base"));
  c.direction = cvector_from_json(j.at("direction"));
  require(c.base.size() == c.direction.size() && c.base.size() >= 2,
          "chart: base and direction must have the same length n+1 >= 2");
  return c;
}

Json to_json(const ChartSpec& c) {
  return {{"base", cvector_json(c.base)}, {"direction", cvector_json(c.direction)}};
}

GridSpec grid_from_json(const Json& j) {
  require(j.is_object() && j.contains("kind"), "grid: missing 'kind'");
  GridSpec g;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "box") {
    check_keys(j, {"kind", "re", "im", "nx", "ny"}, "grid");
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.at("im").get<std::vector<double>>();
    require(re.size() == 2 && im.size() == 2, "grid: re and im are [min, max] pairs");
    g.kind = GridSpec::Kind::box;
    g.re_min = re[0];
    g.re_max = re[1];
    g.im_min = im[0];
    g.im_max = im[1];
    g.nx = j.at("nx").get<int>();
    g.ny = j.at("ny").get<int>();
  } else if (kind == "polar") {
    check_keys(j, {"kind", "radii", "phases", "phase_offset"}, "grid");
    g.kind = GridSpec::Kind::polar;
    g.radii = j.at("radii").get<std::vector<double>>();
    g.phases = j.at("phases").get<int>();
    g.phase_offset = j.value("phase_offset", 0.0);
  } else if (kind == "list") {
    check_keys(j, {"kind", "points"}, "grid");
    g.kind = GridSpec::Kind::list;
    g.points = cvector_from_json(j.at("points"));
  } else {
    fail(ErrorCode::invalid_argument, "grid: unknown kind '" + kind + "'");
  }
  return g;
}

Json to_json(const GridSpec& g) {
  switch (g.kind) {
    case GridSpec::Kind::box:
      return {{"kind", "box"}, {"re", {g.re_min, g.re_max}}, {"im", {g.im_min, g.im_max}},
              {"nx", g.nx}, {"ny", g.ny}};
    case GridSpec::Kind::polar:
      return {{"kind", "polar"}, {"radii", g.radii}, {"phases", g.phases},
              {"phase_offset", g.phase_offset}};
    case GridSpec::Kind::list:
      return {{"kind", "list"}, {"points", cvector_json(g.points)}};
  }
  return {};
}

Json to_json(const ExtremalResult& r) {
  return {{"x", cvector_json(r.x.rep)}, {"d", r.d}, {"lam_lo", number_json(r.lam_lo)},
          {"lam_hi", number_json(r.lam_hi)}, {"status", to_string(r.status)},
          {"witness", to_json(r.witness)}, {"lp_iterations", r.lp_iterations}};
}

namespace {

Json degree_set_json(const DegreeSetBracket& b) {
  return {{"degrees", b.degrees}, {"lam_lo", number_json(b.lam_lo)},
          {"lam_hi", number_json(b.lam_hi)}, {"unbounded", b.unbounded}};
}

}  // namespace

Json to_json(const VeroneseReport& r) {
  return {{"multiples", degree_set_json(r.multiples)}, {"full", degree_set_json(r.full)},
          {"slack", r.slack}, {"consistent", r.consistent}};
}

Json to_json(const HomNorm& h) {
  return {{"d", h.d}, {"lo", number_json(h.lo)}, {"hi", number_json(h.hi)},
          {"status", to_string(h.status)}};
}

Json to_json(const TripleNormReport& r) {
  Json ladder = Json::array();
  for (const auto& h : r.ladder) ladder.push_back(to_json(h));
  Json j{{"ladder", ladder},
         {"triple_norm_evidence", {{"lo", r.evidence_lo}, {"hi", number_json(r.evidence_hi)}}},
         {"flags", {{"strictly_increasing", r.strictly_increasing}, {"unit", r.unit}}}};
  if (r.unit) {
    j["best_constant"] = {{"lo", number_json(r.best_constant.lo)},
                          {"hi", number_json(r.best_constant.hi)}};
    j["flags"]["agrees_with_best_constant"] = r.agrees;
  }
  return j;
}

Json to_json(const SupermultiplicativityReport& r) {
  return {{"sum_checks", r.sum_checks}, {"product_checks", r.product_checks},
          {"violations", r.violations}, {"worst_gap", r.worst_gap}};
}

Json to_json(const StabilityReport& r) {
  Json classes = Json::array();
  for (auto c : r.classes) classes.push_back(to_string(c));
  Json c_hi = Json::array();
  for (const auto& row : r.c_hi) {
    Json a = Json::array();
    for (double v : row) a.push_back(number_json(v));
    c_hi.push_back(a);
  }
  return {{"sup_c_hi", number_json(r.sup_c_hi)}, {"argmax", r.argmax}, {"c_hi", c_hi},
          {"classes", classes}, {"growth", r.growth}, {"finite", r.finite}, {"passed", r.passed}};
}

Json to_json(const GelfandReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back({{"section", x.section}, {"sample", x.sample}, {"lhs", x.lhs}, {"rhs", x.rhs}});
  return {{"checks", r.checks}, {"violations", v}, {"min_slack_ratio", number_json(r.min_slack_ratio)}};
}

Json to_json(const ExclusionCertificate& c) {
  Json recs = Json::array();
  for (const auto& r : c.records)
    recs.push_back({{"rung", r.rung}, {"d", r.d}, {"value_at_x", r.value_at_x},
                    {"sup_sampled", r.sup_sampled}, {"sup_bound", r.sup_bound},
                    {"proof_bound", r.proof_bound}, {"c_sampled", number_json(r.c_sampled)},
                    {"c_bound", number_json(r.c_bound)}});
  return {{"x", {{"z", complex_json(c.x.z)}, {"offset", complex_json(c.x.offset)}}},
          {"family", c.family}, {"records", recs}, {"growth_factor", c.growth_factor},
          {"sampled_growth", c.sampled_growth}, {"bound_growth", c.bound_growth},
          {"verdict", to_string(c.verdict)}};
}

Json to_json(const CurveProbeResult& r) {
  Json prof = Json::array();
  for (const auto& e : r.profile)
    prof.push_back({{"d", e.d}, {"lam_lo", number_json(e.lam_lo)},
                    {"lam_hi", number_json(e.lam_hi)}, {"status", to_string(e.status)}});
  return {{"z", complex_json(r.z)}, {"w", complex_json(r.w)}, {"profile", prof},
          {"classification", to_string(r.classification)}, {"nearest_sample", r.nearest_sample}};
}

Json to_json(const DualityReport& r) {
  return {{"enclosing", r.enclosing}, {"mass", r.mass}, {"lam_lo", number_json(r.lam_lo)},
          {"lam_hi", number_json(r.lam_hi)}, {"gap", r.gap}, {"tolerance", r.tolerance},
          {"pass", r.pass}};
}

Json to_json(const WeakInequalityReport& r) {
  Json e = Json::array();
  for (const auto& x : r.entries) e.push_back({{"lhs", number_json(x.lhs)}, {"pass", x.pass}});
  return {{"entries", e}, {"failures", r.failures}};
}

Json to_json(const HarmonicityReport& r) {
  return {{"h", r.h}, {"nodes", r.nodes}, {"interior_nodes", r.interior_nodes},
          {"max_residual", r.max_residual}, {"max_bracket_width", r.max_bracket_width}};
}

Json green_summary(const GreenProblem& g) {
  return {{"h", g.surface.h}, {"R", g.surface.R}, {"pole", complex_json(g.pole)},
          {"nodes", g.u.size()}, {"boundary_points", g.boundary_points.size()},
          {"mass", g.mass}, {"residual", g.residual}, {"raw_flux", g.raw_flux},
          {"min_u", g.min_u}};
}

Json scan_manifest(const ScanField& f, const SampledCompactum& K) {
  Json classes = Json::array();
  for (const auto& c : f.cells) classes.push_back(to_string(c.classification));
  return {{"chart", to_json(f.spec.chart)}, {"grid", to_json(f.spec.grid)},
          {"degrees", f.spec.degrees}, {"thresholds", to_json(f.spec.thresholds)},
          {"solver", to_json(f.spec.solver)}, {"K_fingerprint", fingerprint(K)},
          {"cells", f.cells.size()}, {"classifications", classes},
          {"failed_cells", f.failed_cells}};
}

}  // namespace phull
