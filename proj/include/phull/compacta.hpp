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

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "phull/polynomial.hpp"

namespace phull {

class CounterRng;

/// Point of P^n held as a unit representative whose first nonzero
/// coordinate is real and positive.
struct ProjectivePoint {
  CVector rep;

  int n() const { return static_cast<int>(rep.size()) - 1; }

  /// Throws zero_representative when z == 0.
  static ProjectivePoint from(std::span<const Complex> z);
  /// [1 : z_1 : ... : z_n]
  static ProjectivePoint from_affine(std::span<const Complex> z);

  /// Affine coordinates in the chart Z_0 != 0; empty when Z_0 vanishes.
  std::optional<CVector> affine() const;
};

/// Fubini-Study chordal distance sqrt(1 - |<x,y>|^2) of unit representatives.
double chordal_distance(const ProjectivePoint& x, const ProjectivePoint& y);

// Curve generators. Each samples a one-real-parameter family at equispaced
// parameter values.

/// base + (center + radius e^{i t}) direction, a round circle on a
/// projective line.
struct CircleInLine {
  int n = 1;
  CVector base{1.0, 0.0};
  CVector direction{0.0, 1.0};
  Complex center{0.0, 0.0};
  double radius = 1.0;
};

/// Graph {(z, f(z)) : |z| = radius} of f = sum_k taylor[k] z^k in the chart
/// Z_0 = 1 of P^2.
struct EntireGraph {
  CVector taylor;
  double radius = 0.5;
  std::string function;  // "exp" or empty for an explicit coefficient list
};

/// Graph of the gap series f = sum_k coeffs[k] z^exponents[k] over |z| = radius.
/// Requires exponents[k+1] > lambda * exponents[k] with lambda > 1.
struct GapSeriesGraph {
  std::vector<long long> exponents;
  CVector coeffs;
  double lambda = 1.5;
  double radius = 0.5;
};

/// {(z, exp(z + conj z)) : |z| = 1} in P^1 x P^1, Segre-embedded in P^3 as
/// [1 : z : w : zw].
struct TorusExpCurve {};

struct ExplicitCloud {
  int n = 1;
  std::vector<CVector> points;
};

using CurveGenerator =
    std::variant<CircleInLine, EntireGraph, GapSeriesGraph, TorusExpCurve, ExplicitCloud>;

std::string generator_kind(const CurveGenerator& g);

/// Validates a generator; throws invalid_argument with the reason.
void validate(const CurveGenerator& g);

/// exp as an EntireGraph with `terms` Taylor coefficients 1/k!.
EntireGraph exp_graph(double radius, int terms = 60);

/// Value of the generating function of a graph generator at z.
Complex graph_function(const EntireGraph& g, Complex z);
Complex graph_function(const GapSeriesGraph& g, Complex z);

/// Finite sample of a compact set K in P^n.
struct SampledCompactum {
  int n = 1;
  std::vector<ProjectivePoint> points;
  CurveGenerator generator = ExplicitCloud{};
  /// Orbit size N of the homogeneous lift (N-th roots of unity).
  int orbit_size = 1;
  /// Curve parameter of every point for parametrized generators, else empty.
  CVector parameters;

  std::size_t size() const { return points.size(); }
};

/// Builds a compactum from representatives; canonicalizes and rejects empty
/// input and duplicates (chordal distance <= 1e-12).
SampledCompactum make_compactum(int n, const std::vector<CVector>& reps,
                                CurveGenerator generator = ExplicitCloud{});

SampledCompactum sample(const CurveGenerator& generator, int count);

/// For each point, the orbit {w^j rep : j < N}, w = e^{2 pi i/N}; the point
/// order is preserved and orbits are contiguous.
std::vector<CVector> homogeneous_lift(const SampledCompactum& K, int N);

/// Copy of K with orbit_size = N.
SampledCompactum with_orbit(SampledCompactum K, int N);

/// Default orbit size 2 * max_degree + 1.
int default_orbit_size(int max_degree);

/// Row-major (n+1)x(n+1) matrix.
struct Unitary {
  int dim = 0;
  CVector entries;

  Complex operator()(int i, int j) const {
    return entries[static_cast<std::size_t>(i * dim + j)];
  }
  CVector apply(std::span<const Complex> z) const;
  static Unitary identity(int dim);
};

/// max |U^H U - I|; callers compare against 1e-12.
double unitarity_defect(const Unitary& U);

/// Haar-distributed unitary from QR of a complex Gaussian matrix.
Unitary random_unitary(int dim, CounterRng& rng);

ProjectivePoint apply_unitary(const Unitary& U, const ProjectivePoint& x);
SampledCompactum apply_unitary(const SampledCompactum& K, const Unitary& U);

/// Smallest chordal distance from x to a sample of K.
double nearest_sample_distance(const SampledCompactum& K, const ProjectivePoint& x);

/// Largest nearest-neighbour spacing among the samples (chordal).
double sample_spacing(const SampledCompactum& K);

/// Hex FNV-1a digest of the sample coordinates.
std::string fingerprint(const SampledCompactum& K);

}  // namespace phull
