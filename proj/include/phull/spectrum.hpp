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

#include <vector>

#include "phull/compacta.hpp"
#include "phull/extremal.hpp"
#include "phull/scanner.hpp"

namespace phull {

/// max over the unit representatives of K of |P|: the degree-d norm of the
/// graded algebra of sections restricted to K.
double algebra_norm(const SampledCompactum& K, const HomogeneousPolynomial& p);

struct HomNorm {
  int d = 0;
  double lo = 0;  // bracket on |m_z|_d = sup{|P(z)| : |P| <= 1 on K}
  double hi = 0;
  ExtremalStatus status = ExtremalStatus::failed;

  double root_lo() const;  // lo^(1/d)
  double root_hi() const;
};

/// Point evaluation m_z(P) = P(z) with z used as given (no normalization):
/// |z|^d times the program value at the canonical unit representative.
HomNorm hom_norm(const SampledCompactum& K, std::span<const Complex> z, int d,
                 const SolverOptions& options = {});

struct TripleNormReport {
  std::vector<HomNorm> ladder;
  double evidence_lo = 0;  // max over the ladder of |m|_d^(1/d), lower side
  double evidence_hi = 0;
  bool strictly_increasing = false;
  bool unit = false;
  /// For unit z: best-constant bracket at [z] from the top degree and the
  /// agreement test against the ladder.
  Interval best_constant;
  bool agrees = true;
};

TripleNormReport triple_norm(const SampledCompactum& K, std::span<const Complex> z,
                             const std::vector<int>& ladder, const SolverOptions& options = {});

/// Checks |m|_{d+d'} >= |m|_d |m|_{d'} for every d, d' with d + d' on the
/// ladder, and |m|_{d d'} >= |m|_d |m|_{d'} for every d, d' >= 2 with d d' on
/// the ladder. Returns the number of violations beyond `tol`.
struct SupermultiplicativityReport {
  std::size_t sum_checks = 0;
  std::size_t product_checks = 0;
  std::size_t violations = 0;
  double worst_gap = 0;
};

SupermultiplicativityReport supermultiplicativity(const std::vector<HomNorm>& ladder,
                                                  double tol = 1e-9);

struct StabilityReport {
  double sup_c_hi = 0;
  std::size_t argmax = 0;
  /// Per sample: C_hi at each degree of the ladder.
  std::vector<std::vector<double>> c_hi;
  std::vector<Classification> classes;
  bool growth = false;
  bool finite = false;
  bool passed = false;
};

/// Evidence for boundedness of the best-constant function on a set of hull
/// samples: sup of the C-bracket highs at the top degree, with a growth flag
/// raised when a sample's ladder classifies as diverging.
StabilityReport stability_probe(const SampledCompactum& K,
                                const std::vector<ProjectivePoint>& hull_samples,
                                const std::vector<int>& degrees, const Thresholds& thresholds = {},
                                const SolverOptions& options = {});

struct GelfandViolation {
  std::size_t section = 0;
  std::size_t sample = 0;
  double lhs = 0;
  double rhs = 0;
};

struct GelfandReport {
  std::size_t checks = 0;
  std::vector<GelfandViolation> violations;
  double min_slack_ratio = 0;  // min over checks of rhs / lhs (inf when lhs = 0)
};

/// |P(x)|_FS <= C_hi(x)^d max_K |P|_FS + 1e-9 for every section and sample.
GelfandReport gelfand_norm_check(const SampledCompactum& K,
                                 const std::vector<HomogeneousPolynomial>& sections,
                                 const std::vector<ProjectivePoint>& hull_samples,
                                 const std::vector<double>& c_hi);

}  // namespace phull
