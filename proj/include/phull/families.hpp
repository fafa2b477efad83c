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
#include "phull/extremal.hpp"
#include "phull/polynomial.hpp"
#include "phull/scanner.hpp"

namespace phull {

/// w - sum_{n <= d} a_n z^n in C[z, w]. Requires d <= T = taylor.size() - 1.
AffinePolynomial entire_truncation_family(const CVector& taylor, int d);

/// w - sum_{j <= k} c_j z^{n_j} (the first k terms of the gap series).
AffinePolynomial gap_truncation_family(const GapSeriesGraph& g, int k);

/// Probe (z, w) stored as z and the offset w - f(z), so that P_d at the probe
/// equals offset + tail_d(z) without cancellation.
struct FamilyProbe {
  Complex z;
  Complex offset;

  /// Offsets within rounding of zero (|w - f(z)| <= 8 eps (|w| + |f(z)|)) snap to 0.
  static FamilyProbe from_point(const CurveGenerator& g, Complex z, Complex w);
};

struct ExclusionRecord {
  int rung = 0;  // d for the entire family, k for the gap family
  int d = 0;     // degree of P_d
  double value_at_x = 0;
  double sup_sampled = 0;  // max over the K samples
  double sup_bound = 0;    // analytic bound on the sup over the whole curve
  double proof_bound = 0;  // L r^(n_{k+1}/2) for the gap family when it applies, else 0
  double c_sampled = 0;    // (value_at_x / sup_sampled)^(1/d)
  double c_bound = 0;      // (value_at_x / sup_bound)^(1/d)
};

enum class ExclusionVerdict { diverging, bounded, inapplicable };

const char* to_string(ExclusionVerdict v);

struct ExclusionCertificate {
  FamilyProbe x;
  std::string family;  // "entire_graph" or "gap_series_graph"
  std::vector<ExclusionRecord> records;
  double growth_factor = 1.2;
  bool sampled_growth = false;
  bool bound_growth = false;
  ExclusionVerdict verdict = ExclusionVerdict::inapplicable;
};

/// Tail f(z) - (sum of the first `rung` terms), i.e. P at (z, f(z)).
Complex family_tail(const CurveGenerator& g, int rung, Complex z);

/// Certificate for the truncation family of K's generator (entire_graph or
/// gap_series_graph, inapplicable otherwise). K must carry its curve
/// parameters. Verdict: diverging iff both c_sampled and c_bound grow by at
/// least `growth_factor` over the top two rungs; inapplicable iff P vanishes
/// at x on every rung.
ExclusionCertificate certify_exclusion(const SampledCompactum& K, const FamilyProbe& x,
                                       const std::vector<int>& ladder,
                                       double growth_factor = 1.2);

struct CurveProbeResult {
  Complex z;
  Complex w;
  std::vector<ExtremalResult> profile;
  Classification classification = Classification::inconclusive;
  double nearest_sample = 0;
};

/// Extremal ladders at points [1 : z : w : z w] of P^3 for the torus curve
/// geometry; purely evidential.
std::vector<CurveProbeResult> torus_exp_curve_probe(const SampledCompactum& K,
                                                    const std::vector<std::pair<Complex, Complex>>& probes,
                                                    const std::vector<int>& degrees,
                                                    const Thresholds& thresholds = {},
                                                    const SolverOptions& options = {});

}  // namespace phull
