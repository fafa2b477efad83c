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

#include "phull/compacta.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <limits>
#include <numbers>

#include "phull/error.hpp"
#include "phull/rng.hpp"

namespace phull {

namespace {

constexpr double kLeadingThreshold = 1e-12;
constexpr double kDuplicateDistance = 1e-12;

CVector canonical(std::span<const Complex> z) {
  double norm2 = 0;
  for (auto v : z) norm2 += std::norm(v);
  require(norm2 > 0 && std::isfinite(norm2), "projective point: zero or non-finite representative",
          ErrorCode::zero_representative);
  // Representatives that are already canonical are kept bit for bit, so that
  // serialized samples reload with the same fingerprint.
  {
    std::size_t lead = 0;
    while (lead < z.size() && std::abs(z[lead]) <= kLeadingThreshold) ++lead;
    if (lead < z.size() && z[lead].imag() == 0 && z[lead].real() > 0 &&
        std::abs(norm2 - 1) <= 8 * std::numeric_limits<double>::epsilon())
      return CVector(z.begin(), z.end());
  }
  const double scale = 1.0 / std::sqrt(norm2);
  CVector rep(z.begin(), z.end());
  for (auto& v : rep) v *= scale;
  std::size_t lead = 0;
  while (lead < rep.size() && std::abs(rep[lead]) <= kLeadingThreshold) ++lead;
  if (lead == rep.size()) lead = 0;
  const double mod = std::abs(rep[lead]);
  const Complex phase = std::conj(rep[lead]) / mod;
  for (auto& v : rep) v *= phase;
  rep[lead] = Complex{mod, 0.0};
  return rep;
}

}  // namespace

ProjectivePoint ProjectivePoint::from(std::span<const Complex> z) {
  require(!z.empty(), "projective point: empty representative", ErrorCode::dimension_mismatch);
  return ProjectivePoint{canonical(z)};
}

ProjectivePoint ProjectivePoint::from_affine(std::span<const Complex> z) {
  CVector hom(z.size() + 1);
  hom[0] = 1.0;
  std::copy(z.begin(), z.end(), hom.begin() + 1);
  return from(hom);
}

std::optional<CVector> ProjectivePoint::affine() const {
  if (std::abs(rep[0]) <= kLeadingThreshold) return std::nullopt;
  CVector z(rep.size() - 1);
  for (std::size_t k = 1; k < rep.size(); ++k) z[k - 1] = rep[k] / rep[0];
  return z;
}

double chordal_distance(const ProjectivePoint& x, const ProjectivePoint& y) {
  require(x.rep.size() == y.rep.size(), "chordal_distance: dimension mismatch",
          ErrorCode::dimension_mismatch);
  // 1 - |<x,y>|^2 loses everything for nearby points; use the sum of squared
  // 2x2 minors instead (Lagrange identity).
  double minors = 0;
  for (std::size_t i = 0; i < x.rep.size(); ++i)
    for (std::size_t j = i + 1; j < x.rep.size(); ++j)
      minors += std::norm(x.rep[i] * y.rep[j] - x.rep[j] * y.rep[i]);
  return std::sqrt(minors);
}

std::string generator_kind(const CurveGenerator& g) {
  struct Visitor {
    std::string operator()(const CircleInLine&) const { return "circle_in_line"; }
    std::string operator()(const EntireGraph&) const { return "entire_graph"; }
    std::string operator()(const GapSeriesGraph&) const { return "gap_series_graph"; }
    std::string operator()(const TorusExpCurve&) const { return "torus_exp_curve"; }
    std::string operator()(const ExplicitCloud&) const { return "explicit_cloud"; }
  };
  return std::visit(Visitor{}, g);
}

void validate(const CurveGenerator& g) {
  if (auto* c = std::get_if<CircleInLine>(&g)) {
    require(c->n >= 1, "circle_in_line: n must be >= 1");
    require(c->base.size() == static_cast<std::size_t>(c->n) + 1 &&
                c->direction.size() == static_cast<std::size_t>(c->n) + 1,
            "circle_in_line: base and direction need n+1 coordinates");
    require(c->radius > 0 && std::isfinite(c->radius), "circle_in_line: radius must be positive");
  } else if (auto* e = std::get_if<EntireGraph>(&g)) {
    require(!e->taylor.empty(), "entire_graph: no Taylor coefficients");
    require(e->radius > 0 && std::isfinite(e->radius), "entire_graph: radius must be positive");
  } else if (auto* s = std::get_if<GapSeriesGraph>(&g)) {
    require(!s->exponents.empty() && s->exponents.size() == s->coeffs.size(),
            "gap_series_graph: exponents and coefficients must be nonempty and equal length");
    require(s->lambda > 1, "gap_series_graph: recorded lambda must exceed 1");
    require(s->radius > 0 && s->radius < 1, "gap_series_graph: radius must lie in (0, 1)");
    require(s->exponents.front() >= 1, "gap_series_graph: exponents must be positive");
    for (std::size_t k = 0; k + 1 < s->exponents.size(); ++k)
      require(static_cast<double>(s->exponents[k + 1]) >
                  s->lambda * static_cast<double>(s->exponents[k]),
              "gap_series_graph: gap condition n_{k+1} > lambda n_k fails at k=" +
                  std::to_string(k));
  } else if (auto* x = std::get_if<ExplicitCloud>(&g)) {
    require(x->n >= 1, "explicit_cloud: n must be >= 1");
  }
}

EntireGraph exp_graph(double radius, int terms) {
  EntireGraph g;
  g.radius = radius;
  g.function = "exp";
  double f = 1.0;
  for (int k = 0; k < terms; ++k) {
    if (k > 0) f /= k;
    g.taylor.emplace_back(f, 0.0);
  }
  return g;
}

Complex graph_function(const EntireGraph& g, Complex z) {
  if (g.function == "exp") return std::exp(z);
  Complex acc{};
  for (auto it = g.taylor.rbegin(); it != g.taylor.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex graph_function(const GapSeriesGraph& g, Complex z) {
  CompensatedSum acc;
  for (std::size_t k = 0; k < g.exponents.size(); ++k)
    acc.add(g.coeffs[k] * std::pow(z, static_cast<double>(g.exponents[k])));
  return acc.value();
}

SampledCompactum make_compactum(int n, const std::vector<CVector>& reps,
                                CurveGenerator generator) {
  require(n >= 1, "compactum: n must be >= 1");
  require(!reps.empty(), "compactum: empty sample");
  SampledCompactum K;
  K.n = n;
  K.generator = std::move(generator);
  K.points.reserve(reps.size());
  for (const auto& r : reps) {
    require(r.size() == static_cast<std::size_t>(n) + 1, "compactum: representative of wrong size",
            ErrorCode::dimension_mismatch);
    K.points.push_back(ProjectivePoint::from(r));
  }
  for (std::size_t i = 0; i < K.points.size(); ++i)
    for (std::size_t j = i + 1; j < K.points.size(); ++j)
      require(chordal_distance(K.points[i], K.points[j]) > kDuplicateDistance,
              "compactum: duplicate points " + std::to_string(i) + " and " + std::to_string(j));
  return K;
}

SampledCompactum sample(const CurveGenerator& generator, int count) {
  validate(generator);
  if (auto* x = std::get_if<ExplicitCloud>(&generator)) return make_compactum(x->n, x->points, *x);

  require(count >= 8, "sample: count must be >= 8");
  std::vector<CVector> reps;
  CVector params;
  reps.reserve(static_cast<std::size_t>(count));
  int n = 1;
  for (int j = 0; j < count; ++j) {
    const double t = 2.0 * std::numbers::pi * j / count;
    const Complex e{std::cos(t), std::sin(t)};
    if (auto* c = std::get_if<CircleInLine>(&generator)) {
      n = c->n;
      const Complex s = c->center + c->radius * e;
      CVector z(static_cast<std::size_t>(n) + 1);
      for (std::size_t k = 0; k < z.size(); ++k) z[k] = c->base[k] + s * c->direction[k];
      reps.push_back(std::move(z));
      params.push_back(s);
    } else if (auto* g = std::get_if<EntireGraph>(&generator)) {
      n = 2;
      const Complex z = g->radius * e;
      reps.push_back({1.0, z, graph_function(*g, z)});
      params.push_back(z);
    } else if (auto* s = std::get_if<GapSeriesGraph>(&generator)) {
      n = 2;
      const Complex z = s->radius * e;
      reps.push_back({1.0, z, graph_function(*s, z)});
      params.push_back(z);
    } else {
      n = 3;
      const Complex w{std::exp(2.0 * e.real()), 0.0};
      reps.push_back({1.0, e, w, e * w});
      params.push_back(e);
    }
  }
  SampledCompactum K = make_compactum(n, reps, generator);
  K.parameters = std::move(params);
  return K;
}

std::vector<CVector> homogeneous_lift(const SampledCompactum& K, int N) {
  require(N >= 1, "homogeneous_lift: N must be >= 1");
  std::vector<CVector> out;
  out.reserve(K.size() * static_cast<std::size_t>(N));
  for (const auto& p : K.points) {
    for (int j = 0; j < N; ++j) {
      const double t = 2.0 * std::numbers::pi * j / N;
      const Complex w{std::cos(t), std::sin(t)};
      CVector v(p.rep);
      for (auto& c : v) c *= w;
      out.push_back(std::move(v));
    }
  }
  return out;
}

SampledCompactum with_orbit(SampledCompactum K, int N) {
  require(N >= 1, "with_orbit: N must be >= 1");
  K.orbit_size = N;
  return K;
}

int default_orbit_size(int max_degree) { return 2 * max_degree + 1; }

CVector Unitary::apply(std::span<const Complex> z) const {
  require(z.size() == static_cast<std::size_t>(dim), "unitary: dimension mismatch",
          ErrorCode::dimension_mismatch);
  CVector out(z.size());
  for (int i = 0; i < dim; ++i) {
    Complex acc{};
    for (int j = 0; j < dim; ++j) acc += (*this)(i, j) * z[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

Unitary Unitary::identity(int dim) {
  Unitary U{dim, CVector(static_cast<std::size_t>(dim * dim))};
  for (int i = 0; i < dim; ++i) U.entries[static_cast<std::size_t>(i * dim + i)] = 1.0;
  return U;
}

double unitarity_defect(const Unitary& U) {
  require(U.dim >= 1 && U.entries.size() == static_cast<std::size_t>(U.dim * U.dim),
          "unitary: malformed matrix", ErrorCode::dimension_mismatch);
  double worst = 0;
  for (int i = 0; i < U.dim; ++i)
    for (int j = 0; j < U.dim; ++j) {
      Complex acc{};
      for (int k = 0; k < U.dim; ++k) acc += std::conj(U(k, i)) * U(k, j);
      worst = std::max(worst, std::abs(acc - Complex(i == j ? 1.0 : 0.0)));
    }
  return worst;
}

Unitary random_unitary(int dim, CounterRng& rng) {
  require(dim >= 1, "random_unitary: dim must be >= 1");
  Eigen::MatrixXcd G(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) G(i, j) = rng.complex_normal();
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(G);
  Eigen::MatrixXcd Q = qr.householderQ();
  Eigen::MatrixXcd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex r = R(j, j);
    const Complex phase = std::abs(r) > 0 ? r / std::abs(r) : Complex(1.0);
    Q.col(j) *= phase;
  }
  Unitary U{dim, CVector(static_cast<std::size_t>(dim * dim))};
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) U.entries[static_cast<std::size_t>(i * dim + j)] = Q(i, j);
  return U;
}

ProjectivePoint apply_unitary(const Unitary& U, const ProjectivePoint& x) {
  return ProjectivePoint::from(U.apply(x.rep));
}

SampledCompactum apply_unitary(const SampledCompactum& K, const Unitary& U) {
  require(U.dim == K.n + 1, "apply_unitary: matrix size does not match the compactum",
          ErrorCode::dimension_mismatch);
  require(unitarity_defect(U) <= 1e-12, "apply_unitary: matrix is not unitary");
  SampledCompactum out = K;
  ExplicitCloud cloud{K.n, {}};
  for (auto& p : out.points) {
    p = apply_unitary(U, p);
    cloud.points.push_back(p.rep);
  }
  out.generator = std::move(cloud);
  out.parameters.clear();
  return out;
}

double nearest_sample_distance(const SampledCompactum& K, const ProjectivePoint& x) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : K.points) best = std::min(best, chordal_distance(p, x));
  return best;
}

double sample_spacing(const SampledCompactum& K) {
  if (K.size() < 2) return 0.0;
  double worst = 0;
  for (std::size_t i = 0; i < K.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < K.size(); ++j)
      if (i != j) best = std::min(best, chordal_distance(K.points[i], K.points[j]));
    worst = std::max(worst, best);
  }
  return worst;
}

std::string fingerprint(const SampledCompactum& K) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const void* data, std::size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= bytes[i];
      h *= 0x100000001b3ULL;
    }
  };
  feed(&K.n, sizeof K.n);
  for (const auto& p : K.points)
    for (auto c : p.rep) {
      double parts[2] = {c.real(), c.imag()};
      feed(parts, sizeof parts);
    }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace phull
