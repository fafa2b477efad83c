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

#include <limits>
#include <string>
#include <vector>

#include "phull/compacta.hpp"
#include "phull/extremal.hpp"

namespace phull {

enum class Classification { converged, diverging, inconclusive, interpolation_regime, failed };

const char* to_string(Classification c);

struct Thresholds {
  double tau_conv = 0.02;
  double tau_grow = 0.1;
  /// Cells closer than this (chordal) to a sample count as points of K.
  double on_k_distance = 1e-6;
};

struct DegreeBracket {
  int d = 0;
  double lam_lo = 0;
  double lam_hi = 0;
  ExtremalStatus status = ExtremalStatus::bracketed;
};

/// Uses the top half of the degree ladder (at least two degrees).
/// converged: lam_lo varies by at most tau_conv and lam_hi stays finite;
/// diverging: lam_lo rises by at least tau_grow per doubling of d;
/// interpolation_regime: the top degree is unbounded.
Classification classify(std::vector<DegreeBracket> stream, const Thresholds& t,
                        double nearest_sample = std::numeric_limits<double>::infinity());
Classification classify(const std::vector<ExtremalResult>& stream, const Thresholds& t,
                        double nearest_sample = std::numeric_limits<double>::infinity());

/// Complex line t -> base + t * direction in C^{n+1}.
struct ChartSpec {
  CVector base{1.0, 0.0};
  CVector direction{0.0, 1.0};

  int n() const { return static_cast<int>(base.size()) - 1; }
  CVector lift(Complex t) const;
};

struct GridSpec {
  enum class Kind { box, polar, list };
  Kind kind = Kind::box;
  // box: nx by ny nodes on [re_min, re_max] x [im_min, im_max]
  double re_min = -1, re_max = 1, im_min = -1, im_max = 1;
  int nx = 5, ny = 5;
  // polar: radii x `phases` equispaced angles starting at phase_offset
  std::vector<double> radii;
  int phases = 1;
  double phase_offset = 0;
  // list
  std::vector<Complex> points;
};

/// Chart parameters of the grid in canonical order (row-major for boxes,
/// radius-major for polar grids).
std::vector<Complex> grid_points(const GridSpec& g);

struct ScanSpec {
  ChartSpec chart;
  GridSpec grid;
  std::vector<int> degrees;
  Thresholds thresholds;
  SolverOptions solver;
  int threads = 1;
};

struct ScanCell {
  std::size_t index = 0;
  Complex t;
  ProjectivePoint point;
  /// Affine coordinates Z_k / Z_0; NaN when Z_0 = 0.
  CVector affine;
  double nearest_sample = 0;
  std::vector<ExtremalResult> results;
  Classification classification = Classification::inconclusive;
};

struct ScanField {
  ScanSpec spec;
  std::vector<ScanCell> cells;
  std::size_t failed_cells = 0;
};

/// Evaluates every cell; output order is the grid order regardless of the
/// number of worker threads.
ScanField scan(const SampledCompactum& K, const ScanSpec& spec);

/// One row per (cell, degree): re_z1.., im_z1.., d, lam_lo, lam_hi, status.
std::string scan_csv(const ScanField& field);

struct HarmonicitySpec {
  ChartSpec chart;
  enum class Region { annulus, disk };
  Region region = Region::annulus;
  Complex center{0.0, 0.0};
  double r_inner = 1.2;  // ignored for disks
  double r_outer = 2.0;
  double h = 0.1;
  int d = 8;
  SolverOptions solver = [] {
    SolverOptions s;
    s.m_con = 8192;
    return s;
  }();
  int threads = 1;
};

struct HarmonicityNode {
  Complex t;
  double v0 = 0;  // lam_mid + (1/2) log |lift(t)|^2
  bool interior = false;
  double laplacian = 0;  // 5-point Laplacian, interior nodes only
};

struct HarmonicityReport {
  double h = 0;
  std::size_t nodes = 0;
  std::size_t interior_nodes = 0;
  double max_residual = 0;
  double max_bracket_width = 0;
  std::vector<HarmonicityNode> field;
};

/// Discrete Laplacian of V0 = lam_mid + log |lift(t)| over the region.
/// Throws on_compactum if a node comes within half a grid step of K.
HarmonicityReport harmonicity_residual(const SampledCompactum& K, const HarmonicitySpec& spec);

/// Same stencil applied to given node values on the grid of `spec`
/// (values in grid order); used for field inputs that are not extremal values.
HarmonicityReport harmonicity_residual(const HarmonicitySpec& spec,
                                       const std::vector<double>& values);

/// Grid nodes of a harmonicity spec in canonical order.
std::vector<Complex> harmonicity_nodes(const HarmonicitySpec& spec);

}  // namespace phull
