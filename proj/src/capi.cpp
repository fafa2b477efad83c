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

#include "phull/phull.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "phull/compacta.hpp"
#include "phull/error.hpp"
#include "phull/extremal.hpp"
#include "phull/families.hpp"
#include "phull/jensen.hpp"
#include "phull/json_io.hpp"
#include "phull/lp.hpp"
#include "phull/modulus.hpp"
#include "phull/multi_index.hpp"
#include "phull/polynomial.hpp"
#include "phull/rng.hpp"
#include "phull/scanner.hpp"
#include "phull/spectrum.hpp"

struct phull_poly {
  phull::HomogeneousPolynomial p;
};

struct phull_compactum {
  phull::SampledCompactum K;
};

struct phull_green {
  phull::GreenProblem g;
};

namespace {

using phull::Complex;
using phull::CVector;
using phull::ErrorCode;

thread_local std::string last_error;

phull_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_argument: return PHULL_INVALID_ARGUMENT;
    case ErrorCode::dimension_mismatch: return PHULL_DIMENSION_MISMATCH;
    case ErrorCode::zero_representative: return PHULL_ZERO_REPRESENTATIVE;
    case ErrorCode::chart_violation: return PHULL_CHART_VIOLATION;
    case ErrorCode::aliasing: return PHULL_ALIASING;
    case ErrorCode::budget_exceeded: return PHULL_BUDGET_EXCEEDED;
    case ErrorCode::numerical_failure: return PHULL_NUMERICAL_FAILURE;
    case ErrorCode::not_enclosing: return PHULL_NOT_ENCLOSING;
    case ErrorCode::on_compactum: return PHULL_ON_COMPACTUM;
    case ErrorCode::inapplicable: return PHULL_INAPPLICABLE;
    case ErrorCode::io: return PHULL_IO;
  }
  return PHULL_INTERNAL;
}

template <class F>
phull_status guard(F&& body) {
  last_error.clear();
  try {
    body();
    return PHULL_OK;
  } catch (const phull::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("json: ") + e.what();
    return PHULL_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PHULL_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PHULL_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return PHULL_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  phull::require(p != nullptr, std::string(what) + " must not be NULL");
}

CVector vec(const phull_complex* z, std::size_t len) {
  need(z, "vector argument");
  CVector v(len);
  for (std::size_t i = 0; i < len; ++i) v[i] = {z[i].re, z[i].im};
  return v;
}

phull_complex cplx(Complex z) { return {z.real(), z.imag()}; }
Complex cplx(phull_complex z) { return {z.re, z.im}; }

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const phull::Json& j) {
  if (out) *out = dup(j.dump(2));
}

phull::SolverOptions solver_of(const phull_solver* s) {
  phull::SolverOptions o;
  if (s) {
    o.m_con = s->m_con;
    o.m_obj = s->m_obj;
    if (s->lp_tolerance > 0) o.modulus.optimality_tolerance = s->lp_tolerance;
  }
  phull::require(o.m_con >= 3 && o.m_obj >= 1, "solver: m_con >= 3 and m_obj >= 1 required");
  return o;
}

phull::Thresholds thresholds_of(const phull_thresholds* t) {
  phull::Thresholds o;
  if (t) {
    o.tau_conv = t->tau_conv;
    o.tau_grow = t->tau_grow;
    o.on_k_distance = t->on_k_distance;
  }
  return o;
}

phull_extremal extremal_of(const phull::ExtremalResult& r) {
  return {r.d, r.lam_lo, r.lam_hi, static_cast<int>(r.status), r.lp_iterations};
}

std::vector<int> ints(const int* v, std::size_t n) {
  need(v, "integer array");
  return {v, v + n};
}

std::vector<phull::HomogeneousPolynomial> sections_of(const phull_poly* const* s, std::size_t n) {
  std::vector<phull::HomogeneousPolynomial> out;
  if (n) need(s, "sections");
  for (std::size_t i = 0; i < n; ++i) {
    need(s[i], "section");
    out.push_back(s[i]->p);
  }
  return out;
}

std::vector<phull::ProjectivePoint> points_of(const phull_complex* z, std::size_t count, int n) {
  std::vector<phull::ProjectivePoint> out;
  if (count) need(z, "points");
  const std::size_t w = static_cast<std::size_t>(n) + 1;
  for (std::size_t i = 0; i < count; ++i) out.push_back(phull::ProjectivePoint::from(vec(z + i * w, w)));
  return out;
}

void check_point(const phull::SampledCompactum& K, std::size_t len) {
  phull::require(len == static_cast<std::size_t>(K.n) + 1,
                 "point has " + std::to_string(len) + " coordinates, expected " +
                     std::to_string(K.n + 1),
                 ErrorCode::dimension_mismatch);
}

}  // namespace

extern "C" {

const char* phull_version(void) { return PHULL_VERSION; }

const char* phull_status_name(phull_status s) {
  switch (s) {
    case PHULL_OK: return "ok";
    case PHULL_INTERNAL: return "internal";
    default:
      if (s > PHULL_OK && s < PHULL_INTERNAL) return phull::to_string(static_cast<ErrorCode>(s - 1));
  }
  return "unknown";
}

const char* phull_last_error(void) { return last_error.c_str(); }

void phull_string_free(char* s) { std::free(s); }

phull_solver phull_solver_default(void) {
  phull::SolverOptions o;
  return {o.m_con, o.m_obj, o.modulus.optimality_tolerance};
}

phull_thresholds phull_thresholds_default(void) {
  phull::Thresholds t;
  return {t.tau_conv, t.tau_grow, t.on_k_distance};
}

// ---- polynomials

phull_status phull_poly_create(int n, int d, const phull_complex* coeffs, size_t count,
                               phull_poly** out) {
  return guard([&] {
    need(out, "out");
    phull::HomogeneousPolynomial p(n, d);
    if (coeffs) {
      phull::require(count == p.size(),
                     "poly_create: expected " + std::to_string(p.size()) + " coefficients, got " +
                         std::to_string(count),
                     ErrorCode::dimension_mismatch);
      p.coeffs() = vec(coeffs, count);
    }
    *out = new phull_poly{std::move(p)};
  });
}

phull_status phull_poly_from_json(const char* json, phull_poly** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    *out = new phull_poly{phull::polynomial_from_json(phull::Json::parse(json))};
  });
}

phull_status phull_poly_to_json(const phull_poly* p, char** out) {
  return guard([&] {
    need(p, "poly");
    need(out, "out");
    emit(out, phull::to_json(p->p));
  });
}

void phull_poly_free(phull_poly* p) { delete p; }

phull_status phull_poly_info(const phull_poly* p, int* n, int* d, size_t* size) {
  return guard([&] {
    need(p, "poly");
    if (n) *n = p->p.n();
    if (d) *d = p->p.degree();
    if (size) *size = p->p.size();
  });
}

phull_status phull_poly_coeffs(const phull_poly* p, phull_complex* out, size_t cap) {
  return guard([&] {
    need(p, "poly");
    need(out, "out");
    phull::require(cap >= p->p.size(), "poly_coeffs: buffer too small", ErrorCode::dimension_mismatch);
    for (std::size_t i = 0; i < p->p.size(); ++i) out[i] = cplx(p->p.coeffs()[i]);
  });
}

phull_status phull_poly_eval(const phull_poly* p, const phull_complex* z, size_t len,
                             phull_complex* out) {
  return guard([&] {
    need(p, "poly");
    need(out, "out");
    *out = cplx(phull::eval(p->p, vec(z, len)));
  });
}

phull_status phull_poly_fs_norm(const phull_poly* p, const phull_complex* z, size_t len,
                                double* out) {
  return guard([&] {
    need(p, "poly");
    need(out, "out");
    *out = phull::fs_section_norm(p->p, vec(z, len));
  });
}

phull_status phull_poly_coeff_l1(const phull_poly* p, double* out) {
  return guard([&] {
    need(p, "poly");
    need(out, "out");
    *out = phull::coeff_l1_norm(p->p);
  });
}

phull_status phull_poly_polydisk_sup(const phull_poly* p, int samples_per_angle, double* out) {
  return guard([&] {
    need(p, "poly");
    need(out, "out");
    *out = phull::polydisk_sup_lower(p->p, samples_per_angle);
  });
}

phull_status phull_poly_multiply(const phull_poly* a, const phull_poly* b, phull_poly** out) {
  return guard([&] {
    need(a, "poly");
    need(b, "poly");
    need(out, "out");
    *out = new phull_poly{phull::multiply(a->p, b->p)};
  });
}

phull_status phull_poly_veronese(const phull_poly* p, int k, phull_poly** out) {
  return guard([&] {
    need(p, "poly");
    need(out, "out");
    *out = new phull_poly{phull::veronese_power(p->p, k)};
  });
}

phull_status phull_monomial_count(int n, int d, size_t* out) {
  return guard([&] {
    need(out, "out");
    phull::require(n >= 0 && d >= 0, "monomial_count: n and d must be >= 0");
    *out = phull::homogeneous_dimension(n, d);
  });
}

phull_status phull_enumerate_monomials(int n, int d, int* out, size_t cap) {
  return guard([&] {
    need(out, "out");
    const auto& table = phull::exponent_table(n, d);
    phull::require(cap >= table.size(), "enumerate_monomials: buffer too small",
                   ErrorCode::dimension_mismatch);
    std::copy(table.begin(), table.end(), out);
  });
}

phull_status phull_monomial_values(int n, int d, const phull_complex* z, size_t len,
                                   phull_complex* out, size_t cap) {
  return guard([&] {
    need(out, "out");
    phull::require(len == static_cast<std::size_t>(n) + 1, "monomial_values: need n+1 coordinates",
                   ErrorCode::dimension_mismatch);
    const auto v = phull::monomial_values(n, d, vec(z, len));
    phull::require(cap >= v.size(), "monomial_values: buffer too small", ErrorCode::dimension_mismatch);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = cplx(v[i]);
  });
}

phull_status phull_affine_section_norm(int n, int d, const phull_complex* coeffs, size_t count,
                                       const phull_complex* z, int deg, double* out) {
  return guard([&] {
    need(out, "out");
    phull::AffinePolynomial p(n, d, vec(coeffs, count));
    *out = phull::affine_section_norm(p, vec(z, static_cast<std::size_t>(n)), deg);
  });
}

phull_status phull_extract_component(phull_value_fn value, void* user, const phull_complex* z,
                                     size_t len, int m, int N, int declared_degree,
                                     phull_complex* out) {
  return guard([&] {
    need(reinterpret_cast<const void*>(value), "value callback");
    need(out, "out");
    phull::ValueOracle oracle = [&](std::span<const Complex> w) {
      std::vector<phull_complex> buf(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) buf[i] = cplx(w[i]);
      return cplx(value(buf.data(), buf.size(), user));
    };
    *out = cplx(phull::extract_degree_component(oracle, vec(z, len), m, N, declared_degree));
  });
}

// ---- compacta

phull_status phull_compactum_sample(const char* generator_json, int count, phull_compactum** out) {
  return guard([&] {
    need(generator_json, "generator_json");
    need(out, "out");
    const auto g = phull::generator_from_json(phull::Json::parse(generator_json));
    *out = new phull_compactum{phull::sample(g, count)};
  });
}

phull_status phull_compactum_from_points(int n, const phull_complex* points, size_t count,
                                         phull_compactum** out) {
  return guard([&] {
    need(out, "out");
    phull::require(n >= 1, "compactum_from_points: n must be >= 1");
    const std::size_t w = static_cast<std::size_t>(n) + 1;
    std::vector<CVector> reps;
    for (std::size_t i = 0; i < count; ++i) reps.push_back(vec(points + i * w, w));
    *out = new phull_compactum{phull::make_compactum(n, reps)};
  });
}

phull_status phull_compactum_from_json(const char* json, phull_compactum** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    *out = new phull_compactum{phull::compactum_from_json(phull::Json::parse(json))};
  });
}

phull_status phull_compactum_to_json(const phull_compactum* K, char** out) {
  return guard([&] {
    need(K, "compactum");
    need(out, "out");
    emit(out, phull::to_json(K->K));
  });
}

void phull_compactum_free(phull_compactum* K) { delete K; }

phull_status phull_compactum_info(const phull_compactum* K, int* n, size_t* size, int* orbit_size) {
  return guard([&] {
    need(K, "compactum");
    if (n) *n = K->K.n;
    if (size) *size = K->K.size();
    if (orbit_size) *orbit_size = K->K.orbit_size;
  });
}

phull_status phull_compactum_point(const phull_compactum* K, size_t i, phull_complex* out) {
  return guard([&] {
    need(K, "compactum");
    need(out, "out");
    phull::require(i < K->K.size(), "compactum_point: index out of range");
    const auto& rep = K->K.points[i].rep;
    for (std::size_t k = 0; k < rep.size(); ++k) out[k] = cplx(rep[k]);
  });
}

phull_status phull_compactum_set_orbit(phull_compactum* K, int N) {
  return guard([&] {
    need(K, "compactum");
    K->K = phull::with_orbit(std::move(K->K), N);
  });
}

phull_status phull_compactum_lift(const phull_compactum* K, int N, phull_complex* out, size_t cap) {
  return guard([&] {
    need(K, "compactum");
    need(out, "out");
    const auto lift = phull::homogeneous_lift(K->K, N);
    const std::size_t w = static_cast<std::size_t>(K->K.n) + 1;
    phull::require(cap >= lift.size() * w, "compactum_lift: buffer too small",
                   ErrorCode::dimension_mismatch);
    for (std::size_t i = 0; i < lift.size(); ++i)
      for (std::size_t k = 0; k < w; ++k) out[i * w + k] = cplx(lift[i][k]);
  });
}

phull_status phull_compactum_fingerprint(const phull_compactum* K, char** out) {
  return guard([&] {
    need(K, "compactum");
    need(out, "out");
    *out = dup(phull::fingerprint(K->K));
  });
}

phull_status phull_compactum_nearest(const phull_compactum* K, const phull_complex* z, size_t len,
                                     double* out) {
  return guard([&] {
    need(K, "compactum");
    need(out, "out");
    check_point(K->K, len);
    *out = phull::nearest_sample_distance(K->K, phull::ProjectivePoint::from(vec(z, len)));
  });
}

phull_status phull_compactum_spacing(const phull_compactum* K, double* out) {
  return guard([&] {
    need(K, "compactum");
    need(out, "out");
    *out = phull::sample_spacing(K->K);
  });
}

phull_status phull_compactum_apply_unitary(const phull_compactum* K, const phull_complex* U, int dim,
                                           phull_compactum** out) {
  return guard([&] {
    need(K, "compactum");
    need(out, "out");
    phull::require(dim == K->K.n + 1, "apply_unitary: dim must be n + 1", ErrorCode::dimension_mismatch);
    phull::Unitary u{dim, vec(U, static_cast<std::size_t>(dim) * dim)};
    phull::require(phull::unitarity_defect(u) <= 1e-10, "apply_unitary: matrix is not unitary");
    *out = new phull_compactum{phull::apply_unitary(K->K, u)};
  });
}

phull_status phull_random_unitary(int dim, uint64_t seed, const char* stream, phull_complex* out) {
  return guard([&] {
    need(out, "out");
    phull::require(dim >= 1, "random_unitary: dim must be >= 1");
    phull::CounterRng rng(seed, stream ? stream : "unitary");
    const auto u = phull::random_unitary(dim, rng);
    for (std::size_t i = 0; i < u.entries.size(); ++i) out[i] = cplx(u.entries[i]);
  });
}

phull_status phull_unitarity_defect(const phull_complex* U, int dim, double* out) {
  return guard([&] {
    need(out, "out");
    phull::require(dim >= 1, "unitarity_defect: dim must be >= 1");
    *out = phull::unitarity_defect({dim, vec(U, static_cast<std::size_t>(dim) * dim)});
  });
}

// ---- optimizer

phull_status phull_solve_lp(size_t rows, size_t cols, const double* A, const double* b,
                            const double* c, double* x, double* value, int* lp_status) {
  return guard([&] {
    need(A, "A");
    need(b, "b");
    need(c, "c");
    phull::DenseMatrix M(rows, cols);
    std::copy(A, A + rows * cols, M.data.begin());
    const auto r = phull::solve_lp(M, std::span<const double>(b, rows), std::span<const double>(c, cols));
    if (x) std::copy(r.x.begin(), r.x.end(), x);
    if (value) *value = r.value;
    if (lp_status) *lp_status = static_cast<int>(r.status);
    if (r.status == phull::LpStatus::numerical_failure) last_error = r.diagnostics;
  });
}

phull_status phull_solve_modulus(const phull_complex* objective, size_t dim,
                                 const phull_complex* constraints, size_t rows, int m_con,
                                 int m_obj, phull_bracket* out, phull_complex* witness) {
  return guard([&] {
    need(out, "out");
    phull::ModulusProgram prog;
    prog.objective = vec(objective, dim);
    for (std::size_t j = 0; j < rows; ++j) prog.constraints.push_back(vec(constraints + j * dim, dim));
    prog.m_con = m_con;
    prog.m_obj = m_obj;
    const auto r = phull::solve_modulus_program(prog);
    *out = {static_cast<int>(r.status), r.lo, r.hi, r.lp_iterations};
    if (witness && r.witness.size() == dim)
      for (std::size_t k = 0; k < dim; ++k) witness[k] = cplx(r.witness[k]);
    if (r.status == phull::BracketStatus::failed) last_error = r.diagnostics;
  });
}

// ---- extremal

phull_status phull_truncated_extremal(const phull_compactum* K, const phull_complex* z, size_t len,
                                      int d, const phull_solver* solver, phull_extremal* out,
                                      phull_poly** witness) {
  return guard([&] {
    need(K, "compactum");
    need(out, "out");
    check_point(K->K, len);
    const auto r = phull::truncated_extremal(K->K, phull::ProjectivePoint::from(vec(z, len)), d,
                                             solver_of(solver));
    *out = extremal_of(r);
    if (witness) *witness = new phull_poly{r.witness};
    if (r.status == phull::ExtremalStatus::failed) last_error = r.diagnostics;
  });
}

phull_status phull_affine_extremal(const phull_compactum* K, const phull_complex* z, size_t len,
                                   int d, const phull_solver* solver, phull_extremal* out,
                                   phull_poly** witness) {
  return guard([&] {
    need(K, "compactum");
    need(out, "out");
    phull::require(len == static_cast<std::size_t>(K->K.n), "affine_extremal: need n coordinates",
                   ErrorCode::dimension_mismatch);
    const auto r = phull::affine_extremal(K->K, vec(z, len), d, solver_of(solver));
    *out = extremal_of(r);
    if (witness) *witness = new phull_poly{r.witness};
  });
}

phull_status phull_extremal_profile(const phull_compactum* K, const phull_complex* z, size_t len,
                                    const int* degrees, size_t count, const phull_solver* solver,
                                    phull_extremal* out) {
  return guard([&] {
    need(K, "compactum");
    need(out, "out");
    check_point(K->K, len);
    const auto rs = phull::extremal_profile(K->K, phull::ProjectivePoint::from(vec(z, len)),
                                            ints(degrees, count), solver_of(solver));
    for (std::size_t i = 0; i < rs.size(); ++i) out[i] = extremal_of(rs[i]);
  });
}

phull_status phull_veronese_consistency(const phull_compactum* K, const phull_complex* z,
                                        size_t len, int d, int k, const phull_solver* solver,
                                        int* consistent, char** json) {
  return guard([&] {
    need(K, "compactum");
    check_point(K->K, len);
    const auto r = phull::veronese_consistency(K->K, phull::ProjectivePoint::from(vec(z, len)), d, k,
                                               solver_of(solver));
    if (consistent) *consistent = r.consistent ? 1 : 0;
    emit(json, phull::to_json(r));
  });
}

phull_status phull_certification_slack(int d, const phull_solver* solver, double* out) {
  return guard([&] {
    need(out, "out");
    phull::require(d >= 1, "certification_slack: d must be >= 1");
    *out = phull::certification_slack(d, solver_of(solver));
  });
}

// ---- scanner

phull_status phull_classify(const phull_extremal* stream, size_t count,
                            const phull_thresholds* thresholds, double nearest_sample, int* out) {
  return guard([&] {
    need(out, "out");
    if (count) need(stream, "stream");
    std::vector<phull::DegreeBracket> s;
    for (std::size_t i = 0; i < count; ++i) {
      phull::require(stream[i].status >= 0 && stream[i].status <= 2, "classify: bad status code");
      s.push_back({stream[i].d, stream[i].lam_lo, stream[i].lam_hi,
                   static_cast<phull::ExtremalStatus>(stream[i].status)});
    }
    *out = static_cast<int>(phull::classify(std::move(s), thresholds_of(thresholds), nearest_sample));
  });
}

phull_status phull_scan(const phull_compactum* K, const char* spec_json, int threads, char** csv,
                        char** manifest, size_t* failed_cells) {
  return guard([&] {
    need(K, "compactum");
    need(spec_json, "spec_json");
    const auto j = phull::Json::parse(spec_json);
    phull::check_keys(j, {"chart", "grid", "degrees", "thresholds", "solver"}, "scan");
    phull::ScanSpec spec;
    if (j.contains("chart")) spec.chart = phull::chart_from_json(j["chart"]);
    spec.grid = phull::grid_from_json(j.at("grid"));
    spec.degrees = j.at("degrees").get<std::vector<int>>();
    if (j.contains("thresholds")) spec.thresholds = phull::thresholds_from_json(j["thresholds"]);
    if (j.contains("solver")) spec.solver = phull::solver_from_json(j["solver"]);
    spec.threads = threads < 1 ? 1 : threads;
    const auto field = phull::scan(K->K, spec);
    if (csv) *csv = dup(phull::scan_csv(field));
    emit(manifest, phull::scan_manifest(field, K->K));
    if (failed_cells) *failed_cells = field.failed_cells;
  });
}

phull_status phull_harmonicity(const phull_compactum* K, const char* spec_json, int threads,
                               double* max_residual, char** json) {
  return guard([&] {
    need(K, "compactum");
    need(spec_json, "spec_json");
    const auto j = phull::Json::parse(spec_json);
    phull::check_keys(j, {"chart", "region", "center", "r_inner", "r_outer", "h", "d", "solver"},
                      "harmonicity");
    phull::HarmonicitySpec spec;
    if (j.contains("chart")) spec.chart = phull::chart_from_json(j["chart"]);
    const auto region = j.value("region", std::string("annulus"));
    phull::require(region == "annulus" || region == "disk", "harmonicity: region is annulus or disk");
    spec.region = region == "disk" ? phull::HarmonicitySpec::Region::disk
                                   : phull::HarmonicitySpec::Region::annulus;
    if (j.contains("center")) spec.center = phull::complex_from_json(j["center"]);
    spec.r_inner = j.value("r_inner", spec.r_inner);
    spec.r_outer = j.value("r_outer", spec.r_outer);
    spec.h = j.value("h", spec.h);
    spec.d = j.value("d", spec.d);
    if (j.contains("solver")) {
      auto s = j["solver"];
      if (!s.contains("m_con")) s["m_con"] = spec.solver.m_con;
      spec.solver = phull::solver_from_json(s);
    }
    spec.threads = threads < 1 ? 1 : threads;
    const auto r = phull::harmonicity_residual(K->K, spec);
    if (max_residual) *max_residual = r.max_residual;
    emit(json, phull::to_json(r));
  });
}

// ---- jensen

phull_status phull_green_solve(double h, double R, phull_complex pole, phull_green** out) {
  return guard([&] {
    need(out, "out");
    *out = new phull_green{phull::solve_green(h, R, cplx(pole))};
  });
}

void phull_green_free(phull_green* g) { delete g; }

phull_status phull_green_info(const phull_green* g, double* mass, double* residual, double* min_u,
                              char** json) {
  return guard([&] {
    need(g, "green");
    if (mass) *mass = g->g.mass;
    if (residual) *residual = g->g.residual;
    if (min_u) *min_u = g->g.min_u;
    emit(json, phull::green_summary(g->g));
  });
}

phull_status phull_green_sup_error(const phull_green* g, double exclusion, double* out) {
  return guard([&] {
    need(g, "green");
    need(out, "out");
    *out = phull::green_sup_error(g->g, exclusion);
  });
}

phull_status phull_green_csv(const phull_green* g, char** out) {
  return guard([&] {
    need(g, "green");
    need(out, "out");
    *out = dup(phull::green_csv(g->g));
  });
}

phull_status phull_disk_green(phull_complex z, phull_complex pole, double R, double* out) {
  return guard([&] {
    need(out, "out");
    *out = phull::disk_green(cplx(z), cplx(pole), R);
  });
}

phull_status phull_duality_check(const phull_compactum* K, phull_complex x, int d_max, double h,
                                 const phull_solver* solver, int* pass, char** json) {
  return guard([&] {
    need(K, "compactum");
    phull::SolverOptions o = solver ? solver_of(solver) : phull::SolverOptions{};
    const auto r = phull::duality_check(K->K, cplx(x), d_max, h, o);
    if (pass) *pass = r.pass ? 1 : 0;
    emit(json, phull::to_json(r));
  });
}

phull_status phull_weak_inequality(const phull_green* g, const phull_poly* const* sections,
                                   size_t count, double tol, size_t* failures, char** json) {
  return guard([&] {
    need(g, "green");
    const auto r = phull::weak_inequality_check(g->g, sections_of(sections, count), tol);
    if (failures) *failures = r.failures;
    emit(json, phull::to_json(r));
  });
}

// ---- spectrum

phull_status phull_algebra_norm(const phull_compactum* K, const phull_poly* p, double* out) {
  return guard([&] {
    need(K, "compactum");
    need(p, "poly");
    need(out, "out");
    *out = phull::algebra_norm(K->K, p->p);
  });
}

phull_status phull_hom_norm(const phull_compactum* K, const phull_complex* z, size_t len, int d,
                            const phull_solver* solver, double* lo, double* hi, int* status) {
  return guard([&] {
    need(K, "compactum");
    check_point(K->K, len);
    const auto h = phull::hom_norm(K->K, vec(z, len), d, solver_of(solver));
    if (lo) *lo = h.lo;
    if (hi) *hi = h.hi;
    if (status) *status = static_cast<int>(h.status);
  });
}

phull_status phull_triple_norm(const phull_compactum* K, const phull_complex* z, size_t len,
                               const int* ladder, size_t count, const phull_solver* solver,
                               char** json) {
  return guard([&] {
    need(K, "compactum");
    need(json, "json");
    check_point(K->K, len);
    const auto r = phull::triple_norm(K->K, vec(z, len), ints(ladder, count), solver_of(solver));
    auto j = phull::to_json(r);
    j["z"] = phull::cvector_json(vec(z, len));
    emit(json, j);
  });
}

phull_status phull_supermultiplicativity(const int* d, const double* lo, const double* hi,
                                         size_t count, double tol, size_t* violations,
                                         size_t* checks) {
  return guard([&] {
    need(d, "d");
    need(lo, "lo");
    need(hi, "hi");
    std::vector<phull::HomNorm> ladder;
    for (std::size_t i = 0; i < count; ++i)
      ladder.push_back({d[i], lo[i], hi[i], phull::ExtremalStatus::bracketed});
    const auto r = phull::supermultiplicativity(ladder, tol);
    if (violations) *violations = r.violations;
    if (checks) *checks = r.sum_checks + r.product_checks;
  });
}

phull_status phull_stability_probe(const phull_compactum* K, const phull_complex* hull, size_t count,
                                   const int* degrees, size_t ndegrees, const phull_solver* solver,
                                   int* passed, double* sup_c_hi, char** json) {
  return guard([&] {
    need(K, "compactum");
    const auto r = phull::stability_probe(K->K, points_of(hull, count, K->K.n),
                                          ints(degrees, ndegrees), {}, solver_of(solver));
    if (passed) *passed = r.passed ? 1 : 0;
    if (sup_c_hi) *sup_c_hi = r.sup_c_hi;
    emit(json, phull::to_json(r));
  });
}

phull_status phull_gelfand_check(const phull_compactum* K, const phull_poly* const* sections,
                                 size_t nsections, const phull_complex* hull, const double* c_hi,
                                 size_t count, size_t* checks, size_t* violations, char** json) {
  return guard([&] {
    need(K, "compactum");
    if (count) need(c_hi, "c_hi");
    const auto r = phull::gelfand_norm_check(K->K, sections_of(sections, nsections),
                                             points_of(hull, count, K->K.n),
                                             std::vector<double>(c_hi, c_hi + count));
    if (checks) *checks = r.checks;
    if (violations) *violations = r.violations.size();
    emit(json, phull::to_json(r));
  });
}

// ---- example families

phull_status phull_entire_truncation_family(const phull_complex* taylor, size_t count, int d,
                                            phull_poly** out) {
  return guard([&] {
    need(out, "out");
    *out = new phull_poly{phull::entire_truncation_family(vec(taylor, count), d).homogenize()};
  });
}

phull_status phull_gap_truncation_family(const char* generator_json, int k, phull_poly** out) {
  return guard([&] {
    need(generator_json, "generator_json");
    need(out, "out");
    const auto g = phull::generator_from_json(phull::Json::parse(generator_json));
    const auto* gap = std::get_if<phull::GapSeriesGraph>(&g);
    phull::require(gap != nullptr, "gap_truncation_family: generator must be gap_series_graph");
    *out = new phull_poly{phull::gap_truncation_family(*gap, k).homogenize()};
  });
}

phull_status phull_certify_exclusion(const phull_compactum* K, phull_complex z, phull_complex w,
                                     const int* ladder, size_t count, double growth_factor,
                                     int* verdict, char** json) {
  return guard([&] {
    need(K, "compactum");
    const auto probe = phull::FamilyProbe::from_point(K->K.generator, cplx(z), cplx(w));
    const auto c = phull::certify_exclusion(K->K, probe, ints(ladder, count), growth_factor);
    if (verdict) *verdict = static_cast<int>(c.verdict);
    emit(json, phull::to_json(c));
  });
}

phull_status phull_torus_probe(const phull_compactum* K, const phull_complex* probes, size_t count,
                               const int* degrees, size_t ndegrees, const phull_solver* solver,
                               int* classes, char** json) {
  return guard([&] {
    need(K, "compactum");
    if (count) need(probes, "probes");
    std::vector<std::pair<Complex, Complex>> ps;
    for (std::size_t i = 0; i < count; ++i) ps.emplace_back(cplx(probes[2 * i]), cplx(probes[2 * i + 1]));
    const auto rs = phull::torus_exp_curve_probe(K->K, ps, ints(degrees, ndegrees), {},
                                                 solver_of(solver));
    phull::Json a = phull::Json::array();
    for (std::size_t i = 0; i < rs.size(); ++i) {
      if (classes) classes[i] = static_cast<int>(rs[i].classification);
      a.push_back(phull::to_json(rs[i]));
    }
    emit(json, a);
  });
}

}  // extern "C"
