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

#pragma once

#include <string>
#include <vector>

#include "phull/compacta.hpp"
#include "phull/modulus.hpp"
#include "phull/polynomial.hpp"

namespace phull {

struct SolverOptions {
  int m_con = 64;
  int m_obj = 64;
  ModulusOptions modulus;
};

enum class ExtremalStatus { bracketed, interpolation_regime, failed };

const char* to_string(ExtremalStatus s);

struct ExtremalResult {
  ProjectivePoint x;
  int d = 0;
  double lam_lo = 0;
  double lam_hi = 0;
  /// sup over the K samples of its section norm is 1 (up to rounding).
  HomogeneousPolynomial witness{0, 0};
  ExtremalStatus status = ExtremalStatus::failed;
  std::size_t lp_iterations = 0;
  std::string diagnostics;

  double lam_mid() const { return 0.5 * (lam_lo + lam_hi); }
  double width() const { return lam_hi - lam_lo; }
};

struct Interval {
  double lo = 0;
  double hi = 0;
};

/// One evaluation row per sample of K at its unit representative. Orbit
/// copies w^j Z of a sample give the same modulus constraint, so the lift
/// contributes one row per orbit.
std::vector<CVector> section_constraints(const SampledCompactum& K, int d);

/// Bracket on (1/d) log sup{ |P(x)| : |P| <= 1 on the unit lift of K },
/// P ranging over C[Z_0..Z_n]_d and x taken at its unit representative.
ExtremalResult truncated_extremal(const SampledCompactum& K, const ProjectivePoint& x, int d,
                                  const SolverOptions& options = {});

/// [exp(lam_lo), exp(lam_hi)]
Interval best_constant(const ExtremalResult& r);
/// [exp(-lam_hi), exp(-lam_lo)]
Interval radius(const ExtremalResult& r);

std::vector<ExtremalResult> extremal_profile(const SampledCompactum& K, const ProjectivePoint& x,
                                             const std::vector<int>& degrees,
                                             const SolverOptions& options = {});

/// Largest bracket over a set of degrees: the sup over sections of all the
/// listed degrees.
struct DegreeSetBracket {
  std::vector<int> degrees;
  double lam_lo = 0;
  double lam_hi = 0;
  bool unbounded = false;
};

struct VeroneseReport {
  DegreeSetBracket multiples;  // degrees k, 2k, ..., dk
  DegreeSetBracket full;       // degrees 1, ..., dk
  double slack = 0;            // certification slack at degree 1
  bool consistent = false;
};

VeroneseReport veronese_consistency(const SampledCompactum& K, const ProjectivePoint& x, int d,
                                    int k, const SolverOptions& options = {});

/// Same program in the affine basis z^beta, |beta| <= d, with the rows
/// scaled by (1 + |z|^2)^(-d/2). Every sample of K must lie in the chart
/// Z_0 != 0 (chart_violation otherwise). The witness is returned homogenized.
ExtremalResult affine_extremal(const SampledCompactum& K, std::span<const Complex> z, int d,
                               const SolverOptions& options = {});

/// (1/d) log(sec(pi/m_con) sec(pi/m_obj)): the largest possible bracket width.
double certification_slack(int d, const SolverOptions& options);

}  // namespace phull
