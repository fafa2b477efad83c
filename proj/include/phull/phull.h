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

/* C interface to the phull core. Every call returns a phull_status; on
 * failure phull_last_error() describes the cause for the calling thread.
 * Strings returned through char** are owned by the caller and released with
 * phull_string_free. Complex arrays are interleaved (re, im) pairs. */

#ifndef PHULL_PHULL_H
#define PHULL_PHULL_H

#include <stddef.h>
#include <stdint.h>

#if defined(PHULL_BUILDING_LIBRARY)
#define PHULL_API __attribute__((visibility("default")))
#else
#define PHULL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum phull_status {
  PHULL_OK = 0,
  PHULL_INVALID_ARGUMENT = 1,
  PHULL_DIMENSION_MISMATCH = 2,
  PHULL_ZERO_REPRESENTATIVE = 3,
  PHULL_CHART_VIOLATION = 4,
  PHULL_ALIASING = 5,
  PHULL_BUDGET_EXCEEDED = 6,
  PHULL_NUMERICAL_FAILURE = 7,
  PHULL_NOT_ENCLOSING = 8,
  PHULL_ON_COMPACTUM = 9,
  PHULL_INAPPLICABLE = 10,
  PHULL_IO = 11,
  PHULL_INTERNAL = 12
} phull_status;

typedef struct phull_complex {
  double re;
  double im;
} phull_complex;

typedef struct phull_poly phull_poly;
typedef struct phull_compactum phull_compactum;
typedef struct phull_green phull_green;

/* Extremal status codes. */
enum { PHULL_BRACKETED = 0, PHULL_INTERPOLATION_REGIME = 1, PHULL_FAILED = 2 };

/* Classification codes. */
enum {
  PHULL_CONVERGED = 0,
  PHULL_DIVERGING = 1,
  PHULL_INCONCLUSIVE = 2,
  PHULL_CLASS_INTERPOLATION_REGIME = 3,
  PHULL_CLASS_FAILED = 4
};

/* LP status codes. */
enum { PHULL_LP_OPTIMAL = 0, PHULL_LP_UNBOUNDED = 1, PHULL_LP_NUMERICAL_FAILURE = 2 };

/* Exclusion verdicts. */
enum { PHULL_VERDICT_DIVERGING = 0, PHULL_VERDICT_BOUNDED = 1, PHULL_VERDICT_INAPPLICABLE = 2 };

typedef struct phull_solver {
  int m_con;
  int m_obj;
  double lp_tolerance; /* reduced-cost tolerance; 0 keeps the default */
} phull_solver;

typedef struct phull_thresholds {
  double tau_conv;
  double tau_grow;
  double on_k_distance;
} phull_thresholds;

typedef struct phull_extremal {
  int d;
  double lam_lo;
  double lam_hi;
  int status;
  size_t lp_iterations;
} phull_extremal;

typedef struct phull_bracket {
  int status; /* 0 bracketed, 1 unbounded, 2 failed */
  double lo;
  double hi;
  size_t lp_iterations;
} phull_bracket;

PHULL_API const char* phull_version(void);
PHULL_API const char* phull_status_name(phull_status s);
PHULL_API const char* phull_last_error(void);
PHULL_API void phull_string_free(char* s);
PHULL_API phull_solver phull_solver_default(void);
PHULL_API phull_thresholds phull_thresholds_default(void);

/* ---- polynomials ---- */

/* coeffs may be NULL for the zero polynomial; otherwise count must equal
 * binomial(n + d, d). */
PHULL_API phull_status phull_poly_create(int n, int d, const phull_complex* coeffs, size_t count,
                                         phull_poly** out);
PHULL_API phull_status phull_poly_from_json(const char* json, phull_poly** out);
PHULL_API phull_status phull_poly_to_json(const phull_poly* p, char** out);
PHULL_API void phull_poly_free(phull_poly* p);
PHULL_API phull_status phull_poly_info(const phull_poly* p, int* n, int* d, size_t* size);
PHULL_API phull_status phull_poly_coeffs(const phull_poly* p, phull_complex* out, size_t cap);
PHULL_API phull_status phull_poly_eval(const phull_poly* p, const phull_complex* z, size_t len,
                                       phull_complex* out);
PHULL_API phull_status phull_poly_fs_norm(const phull_poly* p, const phull_complex* z, size_t len,
                                          double* out);
PHULL_API phull_status phull_poly_coeff_l1(const phull_poly* p, double* out);
PHULL_API phull_status phull_poly_polydisk_sup(const phull_poly* p, int samples_per_angle,
                                               double* out);
PHULL_API phull_status phull_poly_multiply(const phull_poly* a, const phull_poly* b,
                                           phull_poly** out);
PHULL_API phull_status phull_poly_veronese(const phull_poly* p, int k, phull_poly** out);

PHULL_API phull_status phull_monomial_count(int n, int d, size_t* out);
/* Writes count * (n + 1) exponents in graded-lex order. */
PHULL_API phull_status phull_enumerate_monomials(int n, int d, int* out, size_t cap);
PHULL_API phull_status phull_monomial_values(int n, int d, const phull_complex* z, size_t len,
                                             phull_complex* out, size_t cap);
/* |p(z)| / (1 + |z|^2)^(deg/2) for p in C[z_1..z_n] of degree <= d. */
PHULL_API phull_status phull_affine_section_norm(int n, int d, const phull_complex* coeffs,
                                                 size_t count, const phull_complex* z, int deg,
                                                 double* out);

typedef phull_complex (*phull_value_fn)(const phull_complex* z, size_t len, void* user);

/* Degree-m component of a polynomial of total degree declared_degree known
 * only through its values; N <= declared_degree gives PHULL_ALIASING. */
PHULL_API phull_status phull_extract_component(phull_value_fn value, void* user,
                                               const phull_complex* z, size_t len, int m, int N,
                                               int declared_degree, phull_complex* out);

/* ---- compacta ---- */

PHULL_API phull_status phull_compactum_sample(const char* generator_json, int count,
                                              phull_compactum** out);
/* points holds count representatives of length n + 1 back to back. */
PHULL_API phull_status phull_compactum_from_points(int n, const phull_complex* points,
                                                   size_t count, phull_compactum** out);
PHULL_API phull_status phull_compactum_from_json(const char* json, phull_compactum** out);
PHULL_API phull_status phull_compactum_to_json(const phull_compactum* K, char** out);
PHULL_API void phull_compactum_free(phull_compactum* K);
PHULL_API phull_status phull_compactum_info(const phull_compactum* K, int* n, size_t* size,
                                            int* orbit_size);
PHULL_API phull_status phull_compactum_point(const phull_compactum* K, size_t i,
                                             phull_complex* out);
PHULL_API phull_status phull_compactum_set_orbit(phull_compactum* K, int N);
/* Writes size * N * (n + 1) values: each point's orbit, contiguous. */
PHULL_API phull_status phull_compactum_lift(const phull_compactum* K, int N, phull_complex* out,
                                            size_t cap);
PHULL_API phull_status phull_compactum_fingerprint(const phull_compactum* K, char** out);
PHULL_API phull_status phull_compactum_nearest(const phull_compactum* K, const phull_complex* z,
                                               size_t len, double* out);
PHULL_API phull_status phull_compactum_spacing(const phull_compactum* K, double* out);
/* U is dim x dim row-major with dim = n + 1. */
PHULL_API phull_status phull_compactum_apply_unitary(const phull_compactum* K,
                                                     const phull_complex* U, int dim,
                                                     phull_compactum** out);
PHULL_API phull_status phull_random_unitary(int dim, uint64_t seed, const char* stream,
                                            phull_complex* out);
PHULL_API phull_status phull_unitarity_defect(const phull_complex* U, int dim, double* out);

/* ---- optimizer ---- */

/* maximize c.x s.t. A x <= b (A row-major rows x cols, b >= 0), x free. */
PHULL_API phull_status phull_solve_lp(size_t rows, size_t cols, const double* A, const double* b,
                                      const double* c, double* x, double* value, int* lp_status);
/* sup |<c, objective>| s.t. |<c, constraints[j]>| <= 1; constraints holds
 * rows vectors of length dim. witness (dim values) may be NULL. */
PHULL_API phull_status phull_solve_modulus(const phull_complex* objective, size_t dim,
                                           const phull_complex* constraints, size_t rows,
                                           int m_con, int m_obj, phull_bracket* out,
                                           phull_complex* witness);

/* ---- extremal ---- */

/* solver may be NULL for the defaults; witness may be NULL. */
PHULL_API phull_status phull_truncated_extremal(const phull_compactum* K, const phull_complex* z,
                                                size_t len, int d, const phull_solver* solver,
                                                phull_extremal* out, phull_poly** witness);
/* z holds the n affine coordinates. */
PHULL_API phull_status phull_affine_extremal(const phull_compactum* K, const phull_complex* z,
                                             size_t len, int d, const phull_solver* solver,
                                             phull_extremal* out, phull_poly** witness);
PHULL_API phull_status phull_extremal_profile(const phull_compactum* K, const phull_complex* z,
                                              size_t len, const int* degrees, size_t count,
                                              const phull_solver* solver, phull_extremal* out);
PHULL_API phull_status phull_veronese_consistency(const phull_compactum* K,
                                                  const phull_complex* z, size_t len, int d, int k,
                                                  const phull_solver* solver, int* consistent,
                                                  char** json);
PHULL_API phull_status phull_certification_slack(int d, const phull_solver* solver, double* out);

/* ---- scanner ---- */

PHULL_API phull_status phull_classify(const phull_extremal* stream, size_t count,
                                      const phull_thresholds* thresholds, double nearest_sample,
                                      int* out);
/* spec: {chart, grid, degrees, thresholds, solver}. csv and manifest may be NULL. */
PHULL_API phull_status phull_scan(const phull_compactum* K, const char* spec_json, int threads,
                                  char** csv, char** manifest, size_t* failed_cells);
/* spec: {chart, region, center, r_inner, r_outer, h, d, solver}. */
PHULL_API phull_status phull_harmonicity(const phull_compactum* K, const char* spec_json,
                                         int threads, double* max_residual, char** json);

/* ---- jensen ---- */

PHULL_API phull_status phull_green_solve(double h, double R, phull_complex pole, phull_green** out);
PHULL_API void phull_green_free(phull_green* g);
PHULL_API phull_status phull_green_info(const phull_green* g, double* mass, double* residual,
                                        double* min_u, char** json);
PHULL_API phull_status phull_green_sup_error(const phull_green* g, double exclusion, double* out);
PHULL_API phull_status phull_green_csv(const phull_green* g, char** out);
PHULL_API phull_status phull_disk_green(phull_complex z, phull_complex pole, double R, double* out);
PHULL_API phull_status phull_duality_check(const phull_compactum* K, phull_complex x, int d_max,
                                           double h, const phull_solver* solver, int* pass,
                                           char** json);
PHULL_API phull_status phull_weak_inequality(const phull_green* g, const phull_poly* const* sections,
                                             size_t count, double tol, size_t* failures,
                                             char** json);

/* ---- spectrum ---- */

PHULL_API phull_status phull_algebra_norm(const phull_compactum* K, const phull_poly* p,
                                          double* out);
PHULL_API phull_status phull_hom_norm(const phull_compactum* K, const phull_complex* z, size_t len,
                                      int d, const phull_solver* solver, double* lo, double* hi,
                                      int* status);
PHULL_API phull_status phull_triple_norm(const phull_compactum* K, const phull_complex* z,
                                         size_t len, const int* ladder, size_t count,
                                         const phull_solver* solver, char** json);
/* Ladder entries (d[i], lo[i], hi[i]); counts violations beyond tol. */
PHULL_API phull_status phull_supermultiplicativity(const int* d, const double* lo,
                                                   const double* hi, size_t count, double tol,
                                                   size_t* violations, size_t* checks);
/* hull holds count representatives of length n + 1. */
PHULL_API phull_status phull_stability_probe(const phull_compactum* K, const phull_complex* hull,
                                             size_t count, const int* degrees, size_t ndegrees,
                                             const phull_solver* solver, int* passed,
                                             double* sup_c_hi, char** json);
PHULL_API phull_status phull_gelfand_check(const phull_compactum* K,
                                           const phull_poly* const* sections, size_t nsections,
                                           const phull_complex* hull, const double* c_hi,
                                           size_t count, size_t* checks, size_t* violations,
                                           char** json);

/* ---- example families ---- */

/* Homogenized in (Z_0, Z_1, Z_2) = (1, z, w). */
PHULL_API phull_status phull_entire_truncation_family(const phull_complex* taylor, size_t count,
                                                      int d, phull_poly** out);
PHULL_API phull_status phull_gap_truncation_family(const char* generator_json, int k,
                                                   phull_poly** out);
PHULL_API phull_status phull_certify_exclusion(const phull_compactum* K, phull_complex z,
                                               phull_complex w, const int* ladder, size_t count,
                                               double growth_factor, int* verdict, char** json);
/* probes holds count (z, w) pairs. */
PHULL_API phull_status phull_torus_probe(const phull_compactum* K, const phull_complex* probes,
                                         size_t count, const int* degrees, size_t ndegrees,
                                         const phull_solver* solver, int* classes, char** json);

#ifdef __cplusplus
}
#endif

#endif /* PHULL_PHULL_H */
