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

#include "phull/jensen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include <Eigen/Sparse>

#include "phull/error.hpp"

namespace phull {

namespace {

constexpr double kPi = std::numbers::pi;

double fs_density(Complex z) {
  const double s = 1.0 + std::norm(z);
  return 1.0 / (kPi * s * s);
}

}  // namespace

double fs_disk_area(double R) { return R * R / (1.0 + R * R); }

DiscreteSurface make_surface(double h, double R) {
  require(h > 0 && R > 0 && h < R, "surface: need 0 < h < R");
  DiscreteSurface s;
  s.h = h;
  s.R = R;
  const int m = static_cast<int>(std::ceil(R / h));
  for (int j = -m; j <= m; ++j)
    for (int i = -m; i <= m; ++i) {
      const Complex z(i * h, j * h);
      if (std::abs(z) >= R - 1e-12 * h) continue;
      s.nodes.push_back(z);
      s.weights.push_back(h * h * fs_density(z));
    }
  return s;
}

double disk_green(Complex z, Complex pole, double R) {
  return std::log(std::abs(R * R - std::conj(pole) * z) / (R * std::abs(z - pole)));
}

GreenProblem solve_green(double h, double R, Complex pole) {
  require(std::abs(pole) < R, "solve_green: pole outside the region enclosed by K",
          ErrorCode::not_enclosing);
  GreenProblem g;
  g.surface = make_surface(h, R);
  g.pole = pole;
  const auto& nodes = g.surface.nodes;
  const std::size_t N = nodes.size();

  std::map<std::pair<long, long>, std::size_t> index;
  auto key = [&](Complex z) { return std::make_pair(std::lround(z.real() / h), std::lround(z.imag() / h)); };
  for (std::size_t i = 0; i < N; ++i) index[key(nodes[i])] = i;
  const auto pk = key(pole);
  const auto it = index.find(pk);
  require(it != index.end() && std::abs(pole - Complex(pk.first * h, pk.second * h)) <= 1e-9 * h,
          "solve_green: the pole must be a grid node");
  g.pole_node = it->second;

  // Shortley-Weller: along each axis the arms have lengths s_minus, s_plus
  // (h, or the distance to the circle) and
  //   u'' ~ 2 / (s_m s_p (s_m + s_p)) * (s_m u_plus + s_p u_minus - (s_m + s_p) u).
  struct Arm {
    std::size_t neighbour;  // N when the arm ends on the circle
    double length;
  };
  auto arm = [&](std::size_t i, int dx, int dy) -> Arm {
    const auto k = key(nodes[i]);
    auto q = index.find({k.first + dx, k.second + dy});
    if (q != index.end()) return {q->second, h};
    const Complex z = nodes[i];
    const Complex e(dx, dy);
    const double b = z.real() * e.real() + z.imag() * e.imag();
    const double s = -b + std::sqrt(b * b - (std::norm(z) - R * R));
    return {N, std::clamp(s, 1e-12 * h, h)};
  };

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(5 * N);
  struct BoundaryArm {
    std::size_t node;
    double length;
    Complex point;
  };
  std::vector<BoundaryArm> boundary;
  for (std::size_t i = 0; i < N; ++i) {
    double diag = 0;
    for (int axis = 0; axis < 2; ++axis) {
      const int dx = axis == 0 ? 1 : 0, dy = axis == 0 ? 0 : 1;
      const Arm p = arm(i, dx, dy), m = arm(i, -dx, -dy);
      const double f = 2.0 / (p.length * m.length * (p.length + m.length));
      if (p.neighbour < N) trip.emplace_back(i, p.neighbour, f * m.length);
      else boundary.push_back({i, p.length, nodes[i] + p.length * Complex(dx, dy)});
      if (m.neighbour < N) trip.emplace_back(i, m.neighbour, f * p.length);
      else boundary.push_back({i, m.length, nodes[i] - m.length * Complex(dx, dy)});
      diag -= f * (p.length + m.length);
    }
    trip.emplace_back(i, i, diag);
  }
  Eigen::SparseMatrix<double> L(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  L.setFromTriplets(trip.begin(), trip.end());
  L.makeCompressed();

  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(N));
  rhs(static_cast<Eigen::Index>(g.pole_node)) = -2.0 * kPi / (h * h);
  Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
  lu.analyzePattern(L);
  lu.factorize(L);
  require(lu.info() == Eigen::Success, "solve_green: factorization failed",
          ErrorCode::numerical_failure);
  Eigen::VectorXd u = lu.solve(rhs);
  u += lu.solve(rhs - L * u);

  const Eigen::VectorXd r = L * u - rhs;
  g.residual = r.cwiseAbs().sum() * h * h / (2.0 * kPi);
  g.u.assign(u.data(), u.data() + N);
  g.min_u = *std::min_element(g.u.begin(), g.u.end());
  for (std::size_t i = 0; i < N; ++i) g.mass += g.u[i] * g.surface.weights[i];

  // Flux through each boundary arm: (1/2 pi) (u_i / s) h.
  for (const auto& b : boundary) {
    g.boundary_points.push_back(b.point);
    g.mu.push_back(g.u[b.node] / b.length * h / (2.0 * kPi));
  }
  for (double m : g.mu) g.raw_flux += m;
  require(g.raw_flux > 0, "solve_green: no boundary flux", ErrorCode::numerical_failure);
  for (double& m : g.mu) m /= g.raw_flux;
  return g;
}

double green_sup_error(const GreenProblem& g, double exclusion) {
  double err = 0;
  for (std::size_t i = 0; i < g.u.size(); ++i) {
    const Complex z = g.surface.nodes[i];
    if (std::abs(z - g.pole) < exclusion) continue;
    err = std::max(err, std::abs(g.u[i] - disk_green(z, g.pole, g.surface.R)));
  }
  return err;
}

std::string green_csv(const GreenProblem& g) {
  std::ostringstream os;
  os.precision(17);
  os << "x,y,u,weight\n";
  for (std::size_t i = 0; i < g.u.size(); ++i)
    os << g.surface.nodes[i].real() << ',' << g.surface.nodes[i].imag() << ',' << g.u[i] << ','
       << g.surface.weights[i] << '\n';
  return os.str();
}

DualityReport duality_check(const SampledCompactum& K, Complex x, int d_max, double h,
                            const SolverOptions& options) {
  const auto* c = std::get_if<CircleInLine>(&K.generator);
  require(c && K.n == 1 && std::abs(c->center) == 0.0 && c->base.size() == 2 &&
              c->base[0] == Complex(1.0) && c->base[1] == Complex(0.0) &&
              c->direction[0] == Complex(0.0) && c->direction[1] == Complex(1.0),
          "duality_check: K must be a centered circle in the standard chart of P^1",
          ErrorCode::inapplicable);
  DualityReport rep;
  const double R = c->radius;
  rep.enclosing = std::abs(x) < R;
  if (!rep.enclosing) return rep;
  const auto g = solve_green(h, R, x);
  const CVector z{x};
  const auto r = truncated_extremal(K, ProjectivePoint::from_affine(z), d_max, options);
  require(r.status == ExtremalStatus::bracketed,
          std::string("duality_check: extremal solve ") + to_string(r.status),
          ErrorCode::numerical_failure);
  rep.mass = g.mass;
  rep.lam_lo = r.lam_lo;
  rep.lam_hi = r.lam_hi;
  rep.gap = std::abs(g.mass - r.lam_mid());
  rep.tolerance = 1e-2 + r.width() + 4 * h * h;
  rep.pass = rep.gap <= rep.tolerance;
  return rep;
}

WeakInequalityReport weak_inequality_check(const GreenProblem& g,
                                           const std::vector<HomogeneousPolynomial>& sections,
                                           double tol) {
  WeakInequalityReport rep;
  const CVector x{1.0, g.pole};
  for (const auto& p : sections) {
    require(p.n() == 1 && p.degree() >= 1, "weak_inequality_check: sections of O(d) on P^1, d >= 1");
    const double d = p.degree();
    std::vector<double> phi(g.boundary_points.size());
    double top = -std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < phi.size(); ++b) {
      const CVector z{1.0, g.boundary_points[b]};
      phi[b] = std::log(fs_section_norm(p, z)) / d;
      top = std::max(top, phi[b]);
    }
    double integral = 0;
    for (std::size_t b = 0; b < phi.size(); ++b) integral += g.mu[b] * (phi[b] - top);
    const double at_x = std::log(fs_section_norm(p, x)) / d - top;
    WeakInequalityEntry e;
    e.lhs = integral - at_x;
    e.pass = e.lhs >= -g.mass - tol;
    if (!e.pass) ++rep.failures;
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace phull
