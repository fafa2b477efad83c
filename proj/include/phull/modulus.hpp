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

#include "phull/polynomial.hpp"

namespace phull {

/// sup |<c, objective>| over c in C^D subject to |<c, constraints[j]>| <= 1.
/// <c, v> = sum_k c_k v_k (no conjugation): rows are evaluation functionals.
struct ModulusProgram {
  CVector objective;
  std::vector<CVector> constraints;
  /// Phases of the circumscribed polygon replacing each disk constraint.
  int m_con = 64;
  /// Directions e^{i theta} used to lower-bound the objective modulus.
  int m_obj = 64;
};

struct ModulusOptions {
  /// Pivots below this fraction of the largest entry of the entering
  /// column are rejected.
  double pivot_tolerance = 1e-9;
  /// Reduced-cost threshold; constraint rows are scaled to modulus <= 1.
  double optimality_tolerance = 1e-12;
  /// Relative size of the right-hand-side perturbation used while pivoting.
  double perturbation = 1e-9;
  /// Rebuild the basis inverse from scratch after this many updates.
  int refactor_interval = 100;
  /// Consecutive degenerate pivots before switching to Bland's rule for good.
  int degenerate_limit = 50;
  /// 0 selects 200 * (2 * dim + 10).
  std::size_t max_iterations = 0;
  /// Column-pivoted QR pivots below this fraction of the largest one count as
  /// exact relations among the (column-scaled) constraints.
  double rank_tolerance = 1e-12;
  /// Relative distance from the objective to the constraint row space above
  /// which the program is reported unbounded; raised to 100 eps times the
  /// pivot ratio of the kept basis when that is larger.
  double span_tolerance = 1e-9;
};

enum class BracketStatus { bracketed, unbounded, failed };

const char* to_string(BracketStatus s);

struct BracketedValue {
  BracketStatus status = BracketStatus::failed;
  double lo = 0;
  double hi = 0;
  /// Coefficients scaled so that max_j |<witness, constraints[j]>| = 1 and
  /// |<witness, objective>| = lo.
  CVector witness;
  /// Best directional polygon-LP value.
  double directional_value = 0;
  std::size_t lp_iterations = 0;
  /// Numerical rank of the constraint vectors.
  std::size_t rank = 0;
  /// Polygon rows in the final basis (active constraints at the vertex).
  std::size_t active_rows = 0;
  /// Dual equality residual |sum y a - c|_inf at the end of the solve. Its
  /// effect on weak duality is bounded and already included in hi.
  double dual_residual = 0;
  std::string diagnostics;
};

/// sec(pi / m_con) * sec(pi / m_obj): the largest possible hi / lo.
double certification_ratio(int m_con, int m_obj);

/// Polygonal LP relaxation with certified two-sided bracket:
///   lo = modulus ratio of the LP optimum rescaled into the true disks,
///   hi = best directional LP value * sec(pi / m_obj).
/// The polygon LP  max c.x  s.t.  Re(e^{i phi_k} <x, v_j>) <= 1  is solved
/// through its dual  min sum y  s.t.  sum y_jk a_jk = c, y >= 0  by a revised
/// simplex whose pricing scans all m_con phases of every constraint in
/// closed form (the best phase is the one nearest -arg <x, v_j>). The LP value
/// used for hi is the dual objective, an upper bound by weak duality once the
/// final equality residual and any negative or artificial multipliers are
/// charged against the radius sqrt(m) sec(pi / m_con) / sigma_min of the
/// feasible set.
/// Direction angles are reduced modulo 2 pi / m_con, under which the polygon
/// program is invariant, so equivalent directions are solved once.
/// Constraints spanning less than the whole coefficient space are handled by
/// restricting to their numerical row space. When the objective leaves that
/// space the status is unbounded, hi is infinite and lo is the ratio attained
/// by the off-space direction with a rounding-error guard.
BracketedValue solve_modulus_program(const ModulusProgram& program,
                                     const ModulusOptions& options = {});

}  // namespace phull
