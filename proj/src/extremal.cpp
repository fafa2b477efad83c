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

#include "phull/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "phull/error.hpp"
#include "phull/multi_index.hpp"

namespace phull {

const char* to_string(ExtremalStatus s) {
  switch (s) {
    case ExtremalStatus::bracketed: return "bracketed";
    case ExtremalStatus::interpolation_regime: return "interpolation_regime";
    case ExtremalStatus::failed: return "failed";
  }
  return "unknown";
}

double certification_slack(int d, const SolverOptions& options) {
  return std::log(certification_ratio(options.m_con, options.m_obj)) / d;
}

std::vector<CVector> section_constraints(const SampledCompactum& K, int d) {
  std::vector<CVector> rows;
  rows.reserve(K.size());
  for (const auto& p : K.points) rows.push_back(monomial_values(K.n, d, p.rep));
  return rows;
}

namespace {

ExtremalResult finish(ExtremalResult res, const BracketedValue& v) {
  res.lp_iterations = v.lp_iterations;
  res.diagnostics = v.diagnostics;
  const double inf = std::numeric_limits<double>::infinity();
  switch (v.status) {
    case BracketStatus::unbounded:
      res.status = ExtremalStatus::interpolation_regime;
      res.lam_lo = std::log(v.lo) / res.d;
      res.lam_hi = inf;
      if (!v.witness.empty()) res.witness = HomogeneousPolynomial(res.x.n(), res.d, v.witness);
      if (res.diagnostics.empty())
        res.diagnostics = "degree exceeds resolving power of sample";
      return res;
    case BracketStatus::failed:
      res.status = ExtremalStatus::failed;
      res.lam_lo = -inf;
      res.lam_hi = inf;
      return res;
    case BracketStatus::bracketed:
      break;
  }
  res.status = ExtremalStatus::bracketed;
  res.lam_lo = std::log(v.lo) / res.d;
  res.lam_hi = std::log(v.hi) / res.d;
  res.witness = HomogeneousPolynomial(res.x.n(), res.d, v.witness);
  return res;
}

ModulusProgram make_program(CVector objective, std::vector<CVector> constraints,
                            const SolverOptions& o) {
  ModulusProgram prog;
  prog.objective = std::move(objective);
  prog.constraints = std::move(constraints);
  prog.m_con = o.m_con;
  prog.m_obj = o.m_obj;
  return prog;
}

}  // namespace

ExtremalResult truncated_extremal(const SampledCompactum& K, const ProjectivePoint& x, int d,
                                  const SolverOptions& options) {
  require(d >= 1, "truncated_extremal: degree must be >= 1");
  require(!K.points.empty(), "truncated_extremal: empty compactum");
  require(x.n() == K.n, "truncated_extremal: point and compactum live in different P^n",
          ErrorCode::dimension_mismatch);
  ExtremalResult res;
  res.x = x;
  res.d = d;
  const auto prog = make_program(monomial_values(K.n, d, x.rep), section_constraints(K, d), options);
  return finish(std::move(res), solve_modulus_program(prog, options.modulus));
}

Interval best_constant(const ExtremalResult& r) {
  return {std::exp(r.lam_lo), std::exp(r.lam_hi)};
}

Interval radius(const ExtremalResult& r) {
  return {std::exp(-r.lam_hi), std::exp(-r.lam_lo)};
}

std::vector<ExtremalResult> extremal_profile(const SampledCompactum& K, const ProjectivePoint& x,
                                             const std::vector<int>& degrees,
                                             const SolverOptions& options) {
  require(!degrees.empty(), "extremal_profile: empty degree list");
  require(std::is_sorted(degrees.begin(), degrees.end()),
          "extremal_profile: degrees must be ascending");
  std::vector<ExtremalResult> out;
  out.reserve(degrees.size());
  for (int d : degrees) out.push_back(truncated_extremal(K, x, d, options));
  return out;
}

namespace {

DegreeSetBracket degree_set(const SampledCompactum& K, const ProjectivePoint& x,
                            std::vector<int> degrees, const SolverOptions& options) {
  DegreeSetBracket b;
  b.degrees = degrees;
  b.lam_lo = b.lam_hi = -std::numeric_limits<double>::infinity();
  for (int d : degrees) {
    const auto r = truncated_extremal(K, x, d, options);
    if (r.status == ExtremalStatus::interpolation_regime) {
      b.unbounded = true;
      continue;
    }
    require(r.status == ExtremalStatus::bracketed, "veronese_consistency: " + r.diagnostics,
            ErrorCode::numerical_failure);
    b.lam_lo = std::max(b.lam_lo, r.lam_lo);
    b.lam_hi = std::max(b.lam_hi, r.lam_hi);
  }
  return b;
}

}  // namespace

VeroneseReport veronese_consistency(const SampledCompactum& K, const ProjectivePoint& x, int d,
                                    int k, const SolverOptions& options) {
  require(d >= 1 && k >= 1, "veronese_consistency: d and k must be >= 1");
  std::vector<int> multiples, full;
  for (int j = 1; j <= d; ++j) multiples.push_back(j * k);
  for (int j = 1; j <= d * k; ++j) full.push_back(j);
  VeroneseReport rep;
  rep.multiples = degree_set(K, x, multiples, options);
  rep.full = (k == 1) ? rep.multiples : degree_set(K, x, full, options);
  rep.slack = certification_slack(1, options);
  if (rep.multiples.unbounded || rep.full.unbounded) {
    rep.consistent = rep.multiples.unbounded == rep.full.unbounded;
    return rep;
  }
  rep.consistent = rep.multiples.lam_hi + rep.slack >= rep.full.lam_lo - 1e-9 &&
                   rep.full.lam_hi >= rep.multiples.lam_lo - 1e-9;
  return rep;
}

ExtremalResult affine_extremal(const SampledCompactum& K, std::span<const Complex> z, int d,
                               const SolverOptions& options) {
  require(d >= 1, "affine_extremal: degree must be >= 1");
  require(!K.points.empty(), "affine_extremal: empty compactum");
  require(static_cast<int>(z.size()) == K.n, "affine_extremal: point has wrong dimension",
          ErrorCode::dimension_mismatch);
  auto weighted_row = [&](std::span<const Complex> w) {
    double norm2 = 1.0;
    for (const auto& c : w) norm2 += std::norm(c);
    CVector row = affine_monomial_values(K.n, d, w);
    const double s = std::pow(norm2, -0.5 * d);
    for (auto& v : row) v *= s;
    return row;
  };
  std::vector<CVector> rows;
  rows.reserve(K.size());
  for (const auto& p : K.points) {
    const auto a = p.affine();
    require(a.has_value(), "affine_extremal: a sample of K lies on the hyperplane Z_0 = 0",
            ErrorCode::chart_violation);
    rows.push_back(weighted_row(*a));
  }
  ExtremalResult res;
  res.x = ProjectivePoint::from_affine(z);
  res.d = d;
  const auto prog = make_program(weighted_row(z), std::move(rows), options);
  return finish(std::move(res), solve_modulus_program(prog, options.modulus));
}

}  // namespace phull
