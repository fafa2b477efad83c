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

namespace phull {

/// Uniform grid of step h on the chart C of P^1, restricted to |z| < R.
/// Node weights are Fubini-Study areas h^2 / (pi (1 + |z|^2)^2), so the
/// weights of the whole plane sum to 1.
struct DiscreteSurface {
  double h = 0.02;
  double R = 1.0;
  std::vector<Complex> nodes;
  std::vector<double> weights;
};

DiscreteSurface make_surface(double h, double R);

/// Fubini-Study area R^2 / (1 + R^2) of the disk |z| <= R.
double fs_disk_area(double R);

/// Dirichlet problem for dd^c u = mu - delta_x on the disk |z| < R with
/// u = 0 on |z| = R (the compactum K is that circle). The stencil is the
/// 5-point Laplacian with Shortley-Weller arms at the circle, so boundary
/// points sit exactly on K; mu is the normalized discrete boundary flux at
/// those points (the harmonic measure of the pole).
struct GreenProblem {
  DiscreteSurface surface;
  Complex pole;
  std::size_t pole_node = 0;
  std::vector<double> u;  // per surface node
  std::vector<Complex> boundary_points;
  std::vector<double> mu;  // per boundary point, sums to 1
  double raw_flux = 0;     // boundary flux before normalization (close to 1)
  double mass = 0;
  double residual = 0;     // |(1/2 pi) h^2 Delta_h u + delta_x|_1 over the nodes
  double min_u = 0;
};

/// Throws not_enclosing when the pole is not inside the circle and
/// invalid_argument when it is not a grid node.
GreenProblem solve_green(double h, double R, Complex pole);

/// Green function of the disk |z| < R with pole p: log |R^2 - conj(p) z| / (R |z - p|).
double disk_green(Complex z, Complex pole, double R);

/// max |u - G| over nodes at distance >= exclusion from the pole.
double green_sup_error(const GreenProblem& g, double exclusion = 0.25);

/// CSV: x, y, u, weight.
std::string green_csv(const GreenProblem& g);

struct DualityReport {
  bool enclosing = false;
  double mass = 0;
  double lam_lo = 0;
  double lam_hi = 0;
  double gap = 0;  // |mass - lam_mid|
  double tolerance = 0;
  bool pass = false;
};

/// Compares the Green mass at x with the degree-d_max extremal bracket for
/// K. K must be the circle geometry |z| = R in P^1. Points outside the disk
/// give enclosing = false and no claim.
DualityReport duality_check(const SampledCompactum& K, Complex x, int d_max, double h,
                            const SolverOptions& options = {});

struct WeakInequalityEntry {
  double lhs = 0;  // int phi dmu - phi(x)
  bool pass = false;
};

struct WeakInequalityReport {
  std::vector<WeakInequalityEntry> entries;
  std::size_t failures = 0;
};

/// For each section P of C[Z_0, Z_1]_d, phi = (1/d) log |P|_FS normalized by
/// its max over the boundary points, and the test int phi dmu - phi(x) >=
/// -mass - tol.
WeakInequalityReport weak_inequality_check(const GreenProblem& g,
                                           const std::vector<HomogeneousPolynomial>& sections,
                                           double tol = 1e-6);

}  // namespace phull
