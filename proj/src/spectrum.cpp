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

#include "phull/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "phull/error.hpp"

namespace phull {

double algebra_norm(const SampledCompactum& K, const HomogeneousPolynomial& p) {
  require(p.n() == K.n, "algebra_norm: polynomial and compactum dimensions differ",
          ErrorCode::dimension_mismatch);
  double m = 0;
  for (const auto& x : K.points) m = std::max(m, std::abs(eval(p, x.rep)));
  return m;
}

double HomNorm::root_lo() const { return std::pow(lo, 1.0 / d); }
double HomNorm::root_hi() const { return std::pow(hi, 1.0 / d); }

HomNorm hom_norm(const SampledCompactum& K, std::span<const Complex> z, int d,
                 const SolverOptions& options) {
  require(d >= 1, "hom_norm: degree must be >= 1");
  require(static_cast<int>(z.size()) == K.n + 1, "hom_norm: z has the wrong length",
          ErrorCode::dimension_mismatch);
  double norm2 = 0;
  for (const auto& c : z) norm2 += std::norm(c);
  require(norm2 > 0, "hom_norm: z = 0", ErrorCode::zero_representative);
  // |P(z)| = |z|^d |P(u)| with u the canonical unit representative of [z],
  // so the scalar factor leaves the program exactly.
  const auto x = ProjectivePoint::from(z);
  ModulusProgram prog;
  prog.objective = monomial_values(K.n, d, x.rep);
  prog.constraints = section_constraints(K, d);
  prog.m_con = options.m_con;
  prog.m_obj = options.m_obj;
  const auto v = solve_modulus_program(prog, options.modulus);
  const double scale = std::pow(norm2, 0.5 * d);
  HomNorm h;
  h.d = d;
  switch (v.status) {
    case BracketStatus::bracketed:
      h.status = ExtremalStatus::bracketed;
      h.lo = scale * v.lo;
      h.hi = scale * v.hi;
      break;
    case BracketStatus::unbounded:
      h.status = ExtremalStatus::interpolation_regime;
      h.lo = scale * v.lo;
      h.hi = std::numeric_limits<double>::infinity();
      break;
    case BracketStatus::failed:
      h.status = ExtremalStatus::failed;
      h.lo = 0;
      h.hi = std::numeric_limits<double>::infinity();
      break;
  }
  return h;
}

TripleNormReport triple_norm(const SampledCompactum& K, std::span<const Complex> z,
                             const std::vector<int>& ladder, const SolverOptions& options) {
  require(!ladder.empty(), "triple_norm: empty ladder");
  TripleNormReport rep;
  rep.strictly_increasing = ladder.size() >= 2;
  for (int d : ladder) {
    rep.ladder.push_back(hom_norm(K, z, d, options));
    const auto& h = rep.ladder.back();
    if (h.status != ExtremalStatus::bracketed) {
      rep.strictly_increasing = false;
      continue;
    }
    if (rep.ladder.size() >= 2) {
      const auto& prev = rep.ladder[rep.ladder.size() - 2];
      rep.strictly_increasing = rep.strictly_increasing && h.root_lo() > prev.root_hi();
    }
    rep.evidence_lo = std::max(rep.evidence_lo, h.root_lo());
    rep.evidence_hi = std::max(rep.evidence_hi, h.root_hi());
  }
  double norm2 = 0;
  for (const auto& c : z) norm2 += std::norm(c);
  rep.unit = std::abs(norm2 - 1.0) <= 1e-12;
  if (rep.unit && rep.ladder.back().status == ExtremalStatus::bracketed) {
    const auto r = truncated_extremal(K, ProjectivePoint::from(z), ladder.back(), options);
    rep.best_constant = best_constant(r);
    const auto& top = rep.ladder.back();
    rep.agrees = top.root_hi() >= rep.best_constant.lo - 2e-2 &&
                 top.root_lo() <= rep.best_constant.hi + 2e-2;
  }
  return rep;
}

SupermultiplicativityReport supermultiplicativity(const std::vector<HomNorm>& ladder,
                                                  double tol) {
  SupermultiplicativityReport rep;
  auto find = [&](int d) -> const HomNorm* {
    for (const auto& h : ladder)
      if (h.d == d && h.status == ExtremalStatus::bracketed) return &h;
    return nullptr;
  };
  for (const auto& a : ladder)
    for (const auto& b : ladder) {
      if (a.d > b.d || a.status != ExtremalStatus::bracketed ||
          b.status != ExtremalStatus::bracketed)
        continue;
      auto check = [&](const HomNorm* c, std::size_t& counter) {
        if (!c) return;
        ++counter;
        const double gap = a.lo * b.lo - c->hi;
        if (gap > tol * std::max(1.0, a.lo * b.lo)) ++rep.violations;
        rep.worst_gap = std::max(rep.worst_gap, gap);
      };
      check(find(a.d + b.d), rep.sum_checks);
      if (a.d >= 2 && b.d >= 2) check(find(a.d * b.d), rep.product_checks);
    }
  return rep;
}

StabilityReport stability_probe(const SampledCompactum& K,
                                const std::vector<ProjectivePoint>& hull_samples,
                                const std::vector<int>& degrees, const Thresholds& thresholds,
                                const SolverOptions& options) {
  require(!hull_samples.empty(), "stability_probe: no hull samples");
  StabilityReport rep;
  rep.finite = true;
  for (std::size_t i = 0; i < hull_samples.size(); ++i) {
    const auto profile = extremal_profile(K, hull_samples[i], degrees, options);
    std::vector<double> c;
    for (const auto& r : profile) c.push_back(std::exp(r.lam_hi));
    const double top = c.back();
    rep.finite = rep.finite && std::isfinite(top);
    if (top > rep.sup_c_hi || i == 0) {
      rep.sup_c_hi = top;
      rep.argmax = i;
    }
    rep.c_hi.push_back(std::move(c));
    rep.classes.push_back(classify(profile, thresholds, nearest_sample_distance(K, hull_samples[i])));
    rep.growth = rep.growth || rep.classes.back() == Classification::diverging;
  }
  rep.passed = rep.finite && !rep.growth;
  return rep;
}

GelfandReport gelfand_norm_check(const SampledCompactum& K,
                                 const std::vector<HomogeneousPolynomial>& sections,
                                 const std::vector<ProjectivePoint>& hull_samples,
                                 const std::vector<double>& c_hi) {
  require(c_hi.size() == hull_samples.size(), "gelfand_norm_check: one C bound per sample",
          ErrorCode::dimension_mismatch);
  GelfandReport rep;
  rep.min_slack_ratio = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < sections.size(); ++s) {
    const auto& p = sections[s];
    const double sup_k = algebra_norm(K, p);
    for (std::size_t i = 0; i < hull_samples.size(); ++i) {
      const double lhs = fs_section_norm(p, hull_samples[i].rep);
      const double rhs = std::pow(c_hi[i], p.degree()) * sup_k;
      ++rep.checks;
      if (lhs > 0) rep.min_slack_ratio = std::min(rep.min_slack_ratio, rhs / lhs);
      if (lhs > rhs + 1e-9) rep.violations.push_back({s, i, lhs, rhs});
    }
  }
  return rep;
}

}  // namespace phull
