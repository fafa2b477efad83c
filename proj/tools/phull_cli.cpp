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

// Batch front-end over the phull C API.
//
//   phull <command> [--config path] [--out dir] [--threads k] [--seed n]
//
// Commands: extremal, scan, jensen, norms, spectrum, example <name>, selftest.
// Artifacts are computed in memory and written only once the whole task has
// run, so an invalid configuration leaves no files behind.

#include <chrono>
#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "phull/phull.h"
#include "phull/rng.hpp"
#include "suite.hpp"

namespace {

using Json = nlohmann::ordered_json;
using cd = std::complex<double>;
namespace fs = std::filesystem;

// Raised for anything attributable to the configuration (exit 1).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  phull_status status;
  ApiError(phull_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(phull_status s, const char* what) {
  if (s == PHULL_OK) return;
  const std::string msg = std::string(what) + ": " + phull_status_name(s) + ": " + phull_last_error();
  switch (s) {
    case PHULL_INVALID_ARGUMENT:
    case PHULL_DIMENSION_MISMATCH:
    case PHULL_ZERO_REPRESENTATIVE:
    case PHULL_CHART_VIOLATION:
    case PHULL_ALIASING:
    case PHULL_NOT_ENCLOSING:
    case PHULL_ON_COMPACTUM:
      throw ConfigError(msg);
    default:
      throw ApiError(s, msg);
  }
}

std::string take(char* s) {
  std::string out = s ? s : "";
  phull_string_free(s);
  return out;
}

struct KDel {
  void operator()(phull_compactum* k) const { phull_compactum_free(k); }
};
struct PolyDel {
  void operator()(phull_poly* p) const { phull_poly_free(p); }
};
struct GreenDel {
  void operator()(phull_green* g) const { phull_green_free(g); }
};
using Compactum = std::unique_ptr<phull_compactum, KDel>;
using Poly = std::unique_ptr<phull_poly, PolyDel>;
using Green = std::unique_ptr<phull_green, GreenDel>;

void allow_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [k, v] : j.items()) {
    bool ok = false;
    for (const char* a : keys) ok = ok || k == a;
    if (!ok) throw ConfigError(where + ": unknown key '" + k + "'");
  }
}

phull_complex complex_of(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw ConfigError("complex numbers are written as [re, im] or a real number");
}

std::vector<phull_complex> vector_of(const Json& j) {
  if (!j.is_array()) throw ConfigError("expected an array of complex numbers");
  std::vector<phull_complex> v;
  for (const auto& e : j) v.push_back(complex_of(e));
  return v;
}

std::vector<std::vector<phull_complex>> points_of(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw ConfigError(std::string(what) + ": expected a nonempty list");
  std::vector<std::vector<phull_complex>> out;
  for (const auto& p : j) out.push_back(vector_of(p));
  return out;
}

std::vector<int> degrees_of(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw ConfigError(std::string(what) + ": expected a nonempty list");
  std::vector<int> d;
  for (const auto& e : j) {
    if (!e.is_number_integer() || e.get<int>() < 1) throw ConfigError(std::string(what) + ": degrees are integers >= 1");
    d.push_back(e.get<int>());
  }
  return d;
}

Json complex_json(phull_complex z) { return Json::array({z.re, z.im}); }

Json vector_json(const std::vector<phull_complex>& v) {
  Json a = Json::array();
  for (auto z : v) a.push_back(complex_json(z));
  return a;
}

Json number_json(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

const char* extremal_status(int s) {
  switch (s) {
    case PHULL_BRACKETED: return "bracketed";
    case PHULL_INTERPOLATION_REGIME: return "interpolation_regime";
    default: return "failed";
  }
}

const char* class_name(int c) {
  switch (c) {
    case PHULL_CONVERGED: return "converged";
    case PHULL_DIVERGING: return "diverging";
    case PHULL_INCONCLUSIVE: return "inconclusive";
    case PHULL_CLASS_INTERPOLATION_REGIME: return "interpolation_regime";
    default: return "failed";
  }
}

const char* verdict_name(int v) {
  switch (v) {
    case PHULL_VERDICT_DIVERGING: return "diverging";
    case PHULL_VERDICT_BOUNDED: return "bounded";
    default: return "inapplicable";
  }
}

std::string number(double v) {
  if (!std::isfinite(v)) return v > 0 ? "inf" : "nan";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

struct Run {
  Json config = Json::object();
  std::string command;
  std::uint64_t seed = 0;
  int threads = 1;
  phull_solver solver = phull_solver_default();
  Json solver_json = Json::object();
  Compactum K;
  Json geometry = Json::object();
  std::map<std::string, std::string> artifacts;
  Json statuses = Json::object();
  bool partial = false;
};

void load_solver(Run& run) {
  if (!run.config.contains("solver")) return;
  const auto& s = run.config["solver"];
  allow_keys(s, {"m_con", "m_obj", "lp_tolerance"}, "solver");
  run.solver.m_con = s.value("m_con", run.solver.m_con);
  run.solver.m_obj = s.value("m_obj", run.solver.m_obj);
  run.solver.lp_tolerance = s.value("lp_tolerance", run.solver.lp_tolerance);
  if (run.solver.m_con < 3 || run.solver.m_obj < 1) throw ConfigError("solver: m_con >= 3, m_obj >= 1");
  run.solver_json = {{"m_con", run.solver.m_con}, {"m_obj", run.solver.m_obj}};
  if (s.contains("lp_tolerance")) run.solver_json["optimality_tolerance"] = run.solver.lp_tolerance;
}

void load_geometry(Run& run, const Json& fallback = nullptr) {
  Json g = run.config.contains("geometry") ? run.config["geometry"] : fallback;
  if (g.is_null()) throw ConfigError("this command needs a 'geometry' block");
  allow_keys(g, {"generator", "samples", "orbit_size"}, "geometry");
  if (!g.contains("generator")) throw ConfigError("geometry: missing 'generator'");
  const int samples = g.value("samples", 256);
  if (samples < 1) throw ConfigError("geometry: samples must be >= 1");
  phull_compactum* k = nullptr;
  check(phull_compactum_sample(Json(g["generator"]).dump().c_str(), samples, &k), "geometry");
  run.K.reset(k);
  if (g.contains("orbit_size")) check(phull_compactum_set_orbit(k, g["orbit_size"].get<int>()), "geometry");
  run.geometry = g;
}

int dimension(const Run& run) {
  int n = 0;
  check(phull_compactum_info(run.K.get(), &n, nullptr, nullptr), "compactum_info");
  return n;
}

void require_length(const std::vector<phull_complex>& z, int n, const char* what) {
  if (z.size() != static_cast<std::size_t>(n) + 1)
    throw ConfigError(std::string(what) + ": points need n + 1 = " + std::to_string(n + 1) +
                      " homogeneous coordinates");
}

// ---- tasks

void task_extremal(Run& run) {
  const auto& t = run.config.at("extremal");
  allow_keys(t, {"points", "degrees", "thresholds"}, "extremal");
  load_geometry(run);
  const int n = dimension(run);
  const auto pts = points_of(t.at("points"), "extremal.points");
  const auto degrees = degrees_of(t.at("degrees"), "extremal.degrees");
  phull_thresholds th = phull_thresholds_default();
  if (t.contains("thresholds")) {
    allow_keys(t["thresholds"], {"tau_conv", "tau_grow", "on_k_distance"}, "extremal.thresholds");
    th.tau_conv = t["thresholds"].value("tau_conv", th.tau_conv);
    th.tau_grow = t["thresholds"].value("tau_grow", th.tau_grow);
    th.on_k_distance = t["thresholds"].value("on_k_distance", th.on_k_distance);
  }
  for (const auto& p : pts) require_length(p, n, "extremal.points");

  std::ostringstream csv;
  csv << "point,d,lam_lo,lam_hi,c_lo,c_hi,status\n";
  Json report = Json::array();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<phull_extremal> prof(degrees.size());
    check(phull_extremal_profile(run.K.get(), pts[i].data(), pts[i].size(), degrees.data(),
                                 degrees.size(), &run.solver, prof.data()),
          "extremal_profile");
    double nearest = 0;
    check(phull_compactum_nearest(run.K.get(), pts[i].data(), pts[i].size(), &nearest), "nearest");
    int cls = 0;
    check(phull_classify(prof.data(), prof.size(), &th, nearest, &cls), "classify");
    Json ladder = Json::array();
    for (const auto& e : prof) {
      csv << i << ',' << e.d << ',' << number(e.lam_lo) << ',' << number(e.lam_hi) << ','
          << number(std::exp(e.lam_lo)) << ',' << number(std::exp(e.lam_hi)) << ','
          << extremal_status(e.status) << '\n';
      ladder.push_back({{"d", e.d}, {"lam_lo", number_json(e.lam_lo)},
                        {"lam_hi", number_json(e.lam_hi)}, {"status", extremal_status(e.status)}});
      if (e.status == PHULL_FAILED) run.partial = true;
    }
    report.push_back({{"point", vector_json(pts[i])}, {"nearest_sample", nearest},
                      {"ladder", ladder}, {"classification", class_name(cls)}});
    run.statuses["point_" + std::to_string(i)] = class_name(cls);
  }
  run.artifacts["extremal.csv"] = csv.str();
  run.artifacts["extremal.json"] = report.dump(2) + "\n";
}

void task_scan(Run& run) {
  const auto& t = run.config.at("scan");
  allow_keys(t, {"chart", "grid", "degrees", "thresholds"}, "scan");
  load_geometry(run);
  Json spec = t;
  spec["solver"] = run.solver_json;
  char* csv = nullptr;
  char* manifest = nullptr;
  std::size_t failed = 0;
  check(phull_scan(run.K.get(), spec.dump().c_str(), run.threads, &csv, &manifest, &failed), "scan");
  run.artifacts["scan.csv"] = take(csv);
  run.artifacts["scan.json"] = take(manifest) + "\n";
  run.statuses["failed_cells"] = failed;
  run.partial = failed > 0;
}

void task_jensen(Run& run) {
  const auto& t = run.config.at("jensen");
  allow_keys(t, {"pole", "h", "d_max"}, "jensen");
  load_geometry(run);
  const auto& gen = run.geometry["generator"];
  if (gen.value("kind", "") != "circle_in_line") throw ConfigError("jensen: geometry must be circle_in_line");
  const double R = gen.value("radius", 1.0);
  const phull_complex pole = t.contains("pole") ? complex_of(t["pole"]) : phull_complex{0, 0};
  const double h = t.value("h", 0.02);
  const int d_max = t.value("d_max", 8);
  int pass = 0;
  char* json = nullptr;
  check(phull_duality_check(run.K.get(), pole, d_max, h, &run.solver, &pass, &json), "duality_check");
  auto report = Json::parse(take(json));
  run.statuses["duality"] = report["enclosing"].get<bool>() ? (pass ? "pass" : "fail") : "not_enclosing";
  if (report["enclosing"].get<bool>()) {
    phull_green* g = nullptr;
    check(phull_green_solve(h, R, pole, &g), "green_solve");
    Green G(g);
    char* csv = nullptr;
    check(phull_green_csv(g, &csv), "green_csv");
    run.artifacts["green.csv"] = take(csv);
    char* info = nullptr;
    check(phull_green_info(g, nullptr, nullptr, nullptr, &info), "green_info");
    report["green"] = Json::parse(take(info));
  }
  run.artifacts["jensen.json"] = report.dump(2) + "\n";
  if (report["enclosing"].get<bool>() && !pass) run.partial = true;
}

Poly random_poly(phull::CounterRng& rng, int n, int d) {
  std::size_t count = 0;
  check(phull_monomial_count(n, d, &count), "monomial_count");
  std::vector<phull_complex> c(count);
  for (auto& z : c) {
    const auto v = rng.complex_normal();
    z = {v.real(), v.imag()};
  }
  phull_poly* p = nullptr;
  check(phull_poly_create(n, d, c.data(), c.size(), &p), "poly_create");
  return Poly(p);
}

void task_norms(Run& run) {
  const auto& t = run.config.at("norms");
  allow_keys(t, {"polynomials", "random", "points", "samples_per_angle"}, "norms");
  if (run.config.contains("geometry")) load_geometry(run);
  std::vector<Poly> polys;
  if (t.contains("polynomials"))
    for (const auto& p : t["polynomials"]) {
      phull_poly* q = nullptr;
      check(phull_poly_from_json(Json(p).dump().c_str(), &q), "norms.polynomials");
      polys.emplace_back(q);
    }
  if (t.contains("random")) {
    const auto& r = t["random"];
    allow_keys(r, {"count", "n", "d"}, "norms.random");
    phull::CounterRng rng(run.seed, "norms.random");
    for (int i = 0; i < r.value("count", 10); ++i)
      polys.push_back(random_poly(rng, r.value("n", 1), r.value("d", 3)));
  }
  if (polys.empty()) throw ConfigError("norms: give 'polynomials' or 'random'");
  const auto pts = t.contains("points") ? points_of(t["points"], "norms.points")
                                        : std::vector<std::vector<phull_complex>>{};
  Json out = Json::array();
  for (const auto& p : polys) {
    int n = 0, d = 0;
    check(phull_poly_info(p.get(), &n, &d, nullptr), "poly_info");
    const int spa = t.value("samples_per_angle", 8 * std::max(d, 1));
    double l1 = 0, sup = 0;
    check(phull_poly_coeff_l1(p.get(), &l1), "coeff_l1");
    check(phull_poly_polydisk_sup(p.get(), spa, &sup), "polydisk_sup");
    char* pj = nullptr;
    check(phull_poly_to_json(p.get(), &pj), "poly_to_json");
    Json e{{"polynomial", Json::parse(take(pj))}, {"coeff_l1", l1}, {"polydisk_sup_lower", sup},
           {"samples_per_angle", spa}};
    Json fs_norms = Json::array();
    for (const auto& z : pts) {
      double v = 0;
      check(phull_poly_fs_norm(p.get(), z.data(), z.size(), &v), "fs_norm");
      fs_norms.push_back(v);
    }
    if (!pts.empty()) e["fs_norm"] = fs_norms;
    if (run.K && n == dimension(run)) {
      double a = 0;
      check(phull_algebra_norm(run.K.get(), p.get(), &a), "algebra_norm");
      e["algebra_norm"] = a;
    }
    out.push_back(e);
  }
  run.statuses["polynomials"] = polys.size();
  run.artifacts["norms.json"] = out.dump(2) + "\n";
}

void task_spectrum(Run& run) {
  const auto& t = run.config.at("spectrum");
  allow_keys(t, {"points", "ladder", "hull", "sections", "section_degree", "stability_degrees"},
             "spectrum");
  load_geometry(run);
  const int n = dimension(run);
  const auto pts = points_of(t.at("points"), "spectrum.points");
  const auto ladder = degrees_of(t.at("ladder"), "spectrum.ladder");
  for (const auto& p : pts) require_length(p, n, "spectrum.points");
  Json report{{"points", Json::array()}};
  for (const auto& z : pts) {
    char* json = nullptr;
    check(phull_triple_norm(run.K.get(), z.data(), z.size(), ladder.data(), ladder.size(),
                            &run.solver, &json),
          "triple_norm");
    auto tn = Json::parse(take(json));
    std::vector<int> d;
    std::vector<double> lo, hi;
    for (const auto& h : tn["ladder"]) {
      if (h["lo"].is_null() || h["hi"].is_null()) continue;
      d.push_back(h["d"].get<int>());
      lo.push_back(h["lo"].get<double>());
      hi.push_back(h["hi"].get<double>());
    }
    std::size_t violations = 0, checks = 0;
    check(phull_supermultiplicativity(d.data(), lo.data(), hi.data(), d.size(), 1e-9, &violations,
                                      &checks),
          "supermultiplicativity");
    tn["supermultiplicativity"] = {{"checks", checks}, {"violations", violations}};
    report["points"].push_back(tn);
  }
  if (t.contains("hull")) {
    const auto hull = points_of(t["hull"], "spectrum.hull");
    std::vector<phull_complex> flat;
    for (const auto& p : hull) {
      require_length(p, n, "spectrum.hull");
      flat.insert(flat.end(), p.begin(), p.end());
    }
    const auto sdeg = t.contains("stability_degrees") ? degrees_of(t["stability_degrees"], "spectrum.stability_degrees")
                                                      : ladder;
    int passed = 0;
    double sup = 0;
    char* json = nullptr;
    check(phull_stability_probe(run.K.get(), flat.data(), hull.size(), sdeg.data(), sdeg.size(),
                                &run.solver, &passed, &sup, &json),
          "stability_probe");
    auto st = Json::parse(take(json));
    run.statuses["stability_probe"] = passed ? "passed" : "not_passed";
    std::vector<double> c_hi;
    for (const auto& row : st["c_hi"]) c_hi.push_back(row.back().is_null() ? INFINITY : row.back().get<double>());
    report["stability"] = st;
    const int count = t.value("sections", 0);
    if (count > 0) {
      phull::CounterRng rng(run.seed, "spectrum.sections");
      std::vector<Poly> owned;
      std::vector<const phull_poly*> secs;
      const int top = t.value("section_degree", sdeg.back());
      for (int i = 0; i < count; ++i) {
        owned.push_back(random_poly(rng, n, rng.uniform_int(1, top)));
        secs.push_back(owned.back().get());
      }
      std::size_t checks = 0, violations = 0;
      char* gj = nullptr;
      check(phull_gelfand_check(run.K.get(), secs.data(), secs.size(), flat.data(), c_hi.data(),
                                c_hi.size(), &checks, &violations, &gj),
            "gelfand_check");
      report["gelfand"] = Json::parse(take(gj));
      run.statuses["gelfand_violations"] = violations;
    }
  }
  run.artifacts["spectrum.json"] = report.dump(2) + "\n";
}

struct ExampleDefaults {
  Json geometry;
  Json probes;
  std::vector<int> ladder;
};

ExampleDefaults example_defaults(const std::string& name) {
  if (name == "exp_graph")
    return {{{"generator", {{"kind", "entire_graph"}, {"function", "exp"}, {"radius", 0.5}}},
             {"samples", 200}},
            {{0, 2}, {1, 0}, {0.3, 2 * std::exp(0.3)}, {0.3, std::exp(0.3)}},
            {5, 10, 20}};
  if (name == "gap_series") {
    Json coeffs = Json::array();
    for (int k = 1; k <= 5; ++k) coeffs.push_back(1.0 / (k * k));
    double f = 0;
    const long long e[] = {1, 2, 6, 24, 120};
    for (int k = 0; k < 5; ++k) f += std::pow(0.5, static_cast<double>(e[k])) / ((k + 1) * (k + 1));
    return {{{"generator",
              {{"kind", "gap_series_graph"}, {"exponents", {1, 2, 6, 24, 120}}, {"coeffs", coeffs},
               {"lambda", 1.5}, {"radius", 0.5}}},
             {"samples", 200}},
            {{0.5, f + 1}, {0.5, f}},
            {2, 3, 4}};
  }
  if (name == "torus_exp")
    return {{{"generator", {{"kind", "torus_exp_curve"}}}, {"samples", 120}},
            {{1, std::exp(2.0)}, {1, 1}, {0.5, 1}},
            {1, 2, 4}};
  throw ConfigError("example: unknown name '" + name + "' (exp_graph, gap_series, torus_exp)");
}

void task_example(Run& run, const std::string& name) {
  auto defaults = example_defaults(name);
  Json t = run.config.contains("example") ? run.config["example"] : Json::object();
  allow_keys(t, {"probes", "ladder", "growth_factor"}, "example");
  load_geometry(run, defaults.geometry);
  const auto probes_json = t.contains("probes") ? t["probes"] : defaults.probes;
  const auto ladder = t.contains("ladder") ? degrees_of(t["ladder"], "example.ladder") : defaults.ladder;
  const double growth = t.value("growth_factor", 1.2);
  std::vector<std::pair<phull_complex, phull_complex>> probes;
  for (const auto& p : probes_json) {
    if (!p.is_array() || p.size() != 2) throw ConfigError("example.probes: entries are [z, w]");
    probes.emplace_back(complex_of(p[0]), complex_of(p[1]));
  }
  Json out = Json::array();
  if (name == "torus_exp") {
    std::vector<phull_complex> flat;
    for (const auto& [z, w] : probes) {
      flat.push_back(z);
      flat.push_back(w);
    }
    std::vector<int> classes(probes.size());
    char* json = nullptr;
    check(phull_torus_probe(run.K.get(), flat.data(), probes.size(), ladder.data(), ladder.size(),
                            &run.solver, classes.data(), &json),
          "torus_probe");
    out = Json::parse(take(json));
    for (std::size_t i = 0; i < classes.size(); ++i) {
      run.statuses["probe_" + std::to_string(i)] = class_name(classes[i]);
      if (classes[i] == PHULL_CLASS_FAILED) run.partial = true;
    }
  } else {
    for (std::size_t i = 0; i < probes.size(); ++i) {
      int verdict = 0;
      char* json = nullptr;
      check(phull_certify_exclusion(run.K.get(), probes[i].first, probes[i].second, ladder.data(),
                                    ladder.size(), growth, &verdict, &json),
            "certify_exclusion");
      out.push_back(Json::parse(take(json)));
      run.statuses["probe_" + std::to_string(i)] = verdict_name(verdict);
    }
  }
  run.artifacts["example_" + name + ".json"] = out.dump(2) + "\n";
}

std::string hex64(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << v;
  return os.str();
}

int execute(Run& run, const std::string& out_dir, const std::string& example_name) {
  const auto t0 = std::chrono::steady_clock::now();
  allow_keys(run.config,
             {"geometry", "solver", "seed", "output", "extremal", "scan", "jensen", "norms",
              "spectrum", "example"},
             "config");
  for (const char* task : {"extremal", "scan", "jensen", "norms", "spectrum", "example"})
    if (run.config.contains(task) && run.command != task)
      throw ConfigError(std::string("config has a '") + task + "' block but the command is '" +
                        run.command + "'");
  if (run.command != "example" && !run.config.contains(run.command))
    throw ConfigError("config has no '" + run.command + "' block");
  std::string dir = out_dir;
  if (run.config.contains("output")) {
    allow_keys(run.config["output"], {"dir"}, "output");
    if (dir.empty()) dir = run.config["output"].value("dir", "");
  }
  if (dir.empty()) dir = "phull_out";
  load_solver(run);

  if (run.command == "extremal") task_extremal(run);
  else if (run.command == "scan") task_scan(run);
  else if (run.command == "jensen") task_jensen(run);
  else if (run.command == "norms") task_norms(run);
  else if (run.command == "spectrum") task_spectrum(run);
  else if (run.command == "example") task_example(run, example_name);

  Json manifest;
  Json canonical{{"command", run.command}, {"example", example_name}, {"config", run.config},
                 {"seed", run.seed}};
  manifest["config_hash"] = hex64(phull::CounterRng::fnv1a(canonical.dump()));
  manifest["command"] = run.command;
  if (!example_name.empty()) manifest["example"] = example_name;
  manifest["seed"] = run.seed;
  manifest["version"] = phull_version();
  if (run.K) {
    char* fp = nullptr;
    check(phull_compactum_fingerprint(run.K.get(), &fp), "fingerprint");
    manifest["inputs"] = {{"compactum_fingerprint", take(fp)}, {"geometry", run.geometry}};
  }
  Json list = Json::array();
  for (const auto& [name, body] : run.artifacts) list.push_back(name);
  manifest["artifact_list"] = list;
  manifest["statuses"] = run.statuses;
  manifest["partial_failure"] = run.partial;
  manifest["wall_time_s"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ApiError(PHULL_IO, "cannot create " + dir + ": " + ec.message());
  auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream f(fs::path(dir) / name, std::ios::binary);
    f << body;
    if (!f) throw ApiError(PHULL_IO, "cannot write " + name);
  };
  for (const auto& [name, body] : run.artifacts) write(name, body);
  write("manifest.json", manifest.dump(2) + "\n");
  std::cout << "wrote " << run.artifacts.size() << " artifacts and manifest.json to " << dir << "\n";
  return run.partial ? 2 : 0;
}

std::vector<int> parse_only(const std::string& s) {
  std::vector<int> ids;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item[0] == 'C' || item[0] == 'c') item.erase(0, 1);
    ids.push_back(std::stoi(item));
  }
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phull: projective hull computations"};
  app.require_subcommand(1);
  std::string config_path, out_dir;
  int threads = 1;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "JSON scene configuration");
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for randomized sweeps");
  app.set_version_flag("--version", std::string(phull_version()));

  std::vector<CLI::App*> tasks;
  for (const char* name : {"extremal", "scan", "jensen", "norms", "spectrum"})
    tasks.push_back(app.add_subcommand(name, std::string("run the ") + name + " task"));
  std::string example_name;
  auto* example = app.add_subcommand("example", "example families: exp_graph, gap_series, torus_exp");
  example->add_option("name", example_name, "example name")->required();
  tasks.push_back(example);
  bool list = false;
  std::string only;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  selftest->add_flag("--list", list, "list the criteria without running them");
  selftest->add_option("--only", only, "comma-separated criterion ids");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (selftest->parsed()) {
    if (list) {
      phull_acceptance::list_suite(std::cout);
      return 0;
    }
    phull_acceptance::Options o;
    o.threads = threads;
    if (seed) o.seed = *seed;
    std::vector<int> ids;
    try {
      ids = parse_only(only);
    } catch (const std::exception&) {
      std::cerr << "error: --only expects ids like 1,3,C5\n";
      return 1;
    }
    const int failures = phull_acceptance::run_suite(ids, o, std::cout);
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed")
              << "\n";
    return failures ? 1 : 0;
  }

  Run run;
  for (auto* sub : tasks)
    if (sub->parsed()) run.command = sub->get_name();
  run.threads = threads;
  try {
    if (!config_path.empty()) {
      std::ifstream f(config_path);
      if (!f) throw ConfigError("cannot read config " + config_path);
      try {
        run.config = Json::parse(f);
      } catch (const Json::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
      }
      if (!run.config.is_object()) throw ConfigError("config must be a JSON object");
    } else if (run.command != "example") {
      throw ConfigError("--config is required for '" + run.command + "'");
    }
    if (run.config.contains("seed")) {
      if (!run.config["seed"].is_number_unsigned()) throw ConfigError("seed must be a nonnegative integer");
      run.seed = run.config["seed"].get<std::uint64_t>();
    }
    if (seed) run.seed = *seed;
    return execute(run, out_dir, example_name);
  } catch (const ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 1;
  } catch (const Json::exception& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 1;
  } catch (const ApiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
