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

#include "phull/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include "phull/error.hpp"

namespace phull {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::converged: return "converged";
    case Classification::diverging: return "diverging";
    case Classification::inconclusive: return "inconclusive";
    case Classification::interpolation_regime: return "interpolation_regime";
    case Classification::failed: return "failed";
  }
  return "unknown";
}

Classification classify(std::vector<DegreeBracket> stream, const Thresholds& t,
                        double nearest_sample) {
  if (nearest_sample < t.on_k_distance) return Classification::converged;
  if (stream.size() < 2) return Classification::inconclusive;
  std::sort(stream.begin(), stream.end(),
            [](const DegreeBracket& a, const DegreeBracket& b) { return a.d < b.d; });
  if (stream.back().status == ExtremalStatus::interpolation_regime)
    return Classification::interpolation_regime;
  const std::size_t keep = std::max<std::size_t>(2, (stream.size() + 1) / 2);
  std::vector<DegreeBracket> top(stream.end() - static_cast<std::ptrdiff_t>(keep), stream.end());
  for (const auto& b : top) {
    if (b.status == ExtremalStatus::interpolation_regime)
      return Classification::interpolation_regime;
    if (b.status != ExtremalStatus::bracketed) return Classification::failed;
  }
  double lo_min = top.front().lam_lo, lo_max = lo_min;
  bool hi_finite = true;
  for (const auto& b : top) {
    lo_min = std::min(lo_min, b.lam_lo);
    lo_max = std::max(lo_max, b.lam_lo);
    hi_finite = hi_finite && std::isfinite(b.lam_hi);
  }
  if (hi_finite && lo_max - lo_min <= t.tau_conv) return Classification::converged;
  const double doublings = std::log2(static_cast<double>(top.back().d) / top.front().d);
  if (doublings > 0 && (top.back().lam_lo - top.front().lam_lo) / doublings >= t.tau_grow)
    return Classification::diverging;
  return Classification::inconclusive;
}

Classification classify(const std::vector<ExtremalResult>& stream, const Thresholds& t,
                        double nearest_sample) {
  std::vector<DegreeBracket> b;
  b.reserve(stream.size());
  for (const auto& r : stream) b.push_back({r.d, r.lam_lo, r.lam_hi, r.status});
  return classify(std::move(b), t, nearest_sample);
}

CVector ChartSpec::lift(Complex t) const {
  require(base.size() == direction.size() && base.size() >= 2,
          "chart: base and direction must have the same length n+1 >= 2",
          ErrorCode::dimension_mismatch);
  CVector z(base.size());
  for (std::size_t k = 0; k < z.size(); ++k) z[k] = base[k] + t * direction[k];
  return z;
}

std::vector<Complex> grid_points(const GridSpec& g) {
  std::vector<Complex> pts;
  switch (g.kind) {
    case GridSpec::Kind::box:
      require(g.nx >= 1 && g.ny >= 1, "grid: nx and ny must be >= 1");
      for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
          const double x = g.nx == 1 ? g.re_min : g.re_min + (g.re_max - g.re_min) * i / (g.nx - 1);
          const double y = g.ny == 1 ? g.im_min : g.im_min + (g.im_max - g.im_min) * j / (g.ny - 1);
          pts.emplace_back(x, y);
        }
      break;
    case GridSpec::Kind::polar:
      require(!g.radii.empty() && g.phases >= 1, "grid: polar grid needs radii and phases >= 1");
      for (double r : g.radii)
        for (int k = 0; k < g.phases; ++k)
          pts.push_back(std::polar(r, g.phase_offset + 2.0 * std::numbers::pi * k / g.phases));
      break;
    case GridSpec::Kind::list:
      pts = g.points;
      break;
  }
  require(!pts.empty(), "grid: no points");
  return pts;
}

namespace {

// Runs body(i) for i < count on `threads` workers; each index is handled once.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

ScanField scan(const SampledCompactum& K, const ScanSpec& spec) {
  require(!spec.degrees.empty(), "scan: empty degree list");
  require(std::is_sorted(spec.degrees.begin(), spec.degrees.end()) && spec.degrees.front() >= 1,
          "scan: degrees must be ascending and >= 1");
  require(spec.chart.n() == K.n, "scan: chart and compactum live in different P^n",
          ErrorCode::dimension_mismatch);
  const auto pts = grid_points(spec.grid);

  ScanField field;
  field.spec = spec;
  field.cells.resize(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto& c = field.cells[i];
    c.index = i;
    c.t = pts[i];
    c.point = ProjectivePoint::from(spec.chart.lift(pts[i]));
    if (auto a = c.point.affine())
      c.affine = *a;
    else
      c.affine.assign(static_cast<std::size_t>(K.n), Complex(std::nan(""), std::nan("")));
  }

  parallel_for(pts.size(), spec.threads, [&](std::size_t i) {
    auto& c = field.cells[i];
    c.nearest_sample = nearest_sample_distance(K, c.point);
    try {
      c.results = extremal_profile(K, c.point, spec.degrees, spec.solver);
      c.classification = classify(c.results, spec.thresholds, c.nearest_sample);
    } catch (const Error& e) {
      c.results.clear();
      c.classification = Classification::failed;
    }
  });
  for (const auto& c : field.cells)
    if (c.classification == Classification::failed) ++field.failed_cells;
  return field;
}

std::string scan_csv(const ScanField& field) {
  std::ostringstream os;
  os.precision(17);
  const std::size_t n = field.cells.empty() ? 0 : field.cells.front().affine.size();
  for (std::size_t k = 1; k <= n; ++k) os << "re_z" << k << ',';
  for (std::size_t k = 1; k <= n; ++k) os << "im_z" << k << ',';
  os << "d,lam_lo,lam_hi,status\n";
  for (const auto& c : field.cells) {
    auto coords = [&] {
      for (const auto& a : c.affine) os << a.real() << ',';
      for (const auto& a : c.affine) os << a.imag() << ',';
    };
    if (c.results.empty()) {
      for (int d : field.spec.degrees) {
        coords();
        os << d << ",nan,nan," << to_string(Classification::failed) << '\n';
      }
      continue;
    }
    for (const auto& r : c.results) {
      coords();
      os << r.d << ',' << r.lam_lo << ',' << r.lam_hi << ',' << to_string(r.status) << '\n';
    }
  }
  return os.str();
}

std::vector<Complex> harmonicity_nodes(const HarmonicitySpec& spec) {
  require(spec.h > 0, "harmonicity: h must be positive");
  require(spec.r_outer > 0, "harmonicity: outer radius must be positive");
  const bool annulus = spec.region == HarmonicitySpec::Region::annulus;
  if (annulus) require(spec.r_inner >= 0 && spec.r_inner < spec.r_outer,
                       "harmonicity: need 0 <= r_inner < r_outer");
  const int m = static_cast<int>(std::floor(spec.r_outer / spec.h + 1e-9));
  std::vector<Complex> nodes;
  for (int j = -m; j <= m; ++j)
    for (int i = -m; i <= m; ++i) {
      const double r = spec.h * std::hypot(i, j);
      if (r > spec.r_outer + 1e-12 || (annulus && r < spec.r_inner - 1e-12)) continue;
      nodes.push_back(spec.center + Complex(i * spec.h, j * spec.h));
    }
  require(!nodes.empty(), "harmonicity: region holds no grid nodes");
  return nodes;
}

namespace {

HarmonicityReport apply_stencil(const HarmonicitySpec& spec, const std::vector<Complex>& nodes,
                                const std::vector<double>& values) {
  require(values.size() == nodes.size(), "harmonicity: one value per node required",
          ErrorCode::dimension_mismatch);
  std::map<std::pair<long, long>, std::size_t> index;
  auto key = [&](Complex t) {
    const Complex u = (t - spec.center) / spec.h;
    return std::make_pair(std::lround(u.real()), std::lround(u.imag()));
  };
  for (std::size_t i = 0; i < nodes.size(); ++i) index[key(nodes[i])] = i;

  HarmonicityReport rep;
  rep.h = spec.h;
  rep.nodes = nodes.size();
  rep.field.resize(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto& f = rep.field[i];
    f.t = nodes[i];
    f.v0 = values[i];
    const auto [a, b] = key(nodes[i]);
    const std::pair<long, long> nb[] = {{a + 1, b}, {a - 1, b}, {a, b + 1}, {a, b - 1}};
    double sum = 0;
    f.interior = true;
    for (const auto& q : nb) {
      auto it = index.find(q);
      if (it == index.end()) {
        f.interior = false;
        break;
      }
      sum += values[it->second];
    }
    if (!f.interior) continue;
    f.laplacian = (sum - 4.0 * values[i]) / (spec.h * spec.h);
    ++rep.interior_nodes;
    rep.max_residual = std::max(rep.max_residual, std::abs(f.laplacian));
  }
  return rep;
}

}  // namespace

HarmonicityReport harmonicity_residual(const HarmonicitySpec& spec,
                                       const std::vector<double>& values) {
  return apply_stencil(spec, harmonicity_nodes(spec), values);
}

HarmonicityReport harmonicity_residual(const SampledCompactum& K, const HarmonicitySpec& spec) {
  require(spec.chart.n() == K.n, "harmonicity: chart and compactum live in different P^n",
          ErrorCode::dimension_mismatch);
  require(spec.d >= 1, "harmonicity: degree must be >= 1");
  const auto nodes = harmonicity_nodes(spec);
  std::vector<ProjectivePoint> points;
  points.reserve(nodes.size());
  for (const auto& t : nodes) {
    points.push_back(ProjectivePoint::from(spec.chart.lift(t)));
    const double half_step = std::min(
        chordal_distance(points.back(), ProjectivePoint::from(spec.chart.lift(t + 0.5 * spec.h))),
        chordal_distance(points.back(),
                         ProjectivePoint::from(spec.chart.lift(t + Complex(0, 0.5 * spec.h)))));
    require(nearest_sample_distance(K, points.back()) > half_step,
            "harmonicity: grid node near t = (" + std::to_string(t.real()) + ", " +
                std::to_string(t.imag()) + ") touches K",
            ErrorCode::on_compactum);
  }

  std::vector<double> values(nodes.size());
  std::vector<double> widths(nodes.size());
  std::vector<std::string> errors(nodes.size());
  parallel_for(nodes.size(), spec.threads, [&](std::size_t i) {
    const auto r = truncated_extremal(K, points[i], spec.d, spec.solver);
    if (r.status != ExtremalStatus::bracketed) {
      errors[i] = std::string(to_string(r.status)) + " " + r.diagnostics;
      return;
    }
    double n2 = 0;
    for (const auto& c : spec.chart.lift(nodes[i])) n2 += std::norm(c);
    values[i] = r.lam_mid() + 0.5 * std::log(n2);
    widths[i] = r.width();
  });
  for (std::size_t i = 0; i < nodes.size(); ++i)
    require(errors[i].empty(), "harmonicity: node " + std::to_string(i) + ": " + errors[i],
            ErrorCode::numerical_failure);
  auto rep = apply_stencil(spec, nodes, values);
  for (double w : widths) rep.max_bracket_width = std::max(rep.max_bracket_width, w);
  return rep;
}

}  // namespace phull
