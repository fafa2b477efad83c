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

#include "phull/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "phull/error.hpp"

namespace phull {

const char* to_string(ExclusionVerdict v) {
  switch (v) {
    case ExclusionVerdict::diverging: return "diverging";
    case ExclusionVerdict::bounded: return "bounded";
    case ExclusionVerdict::inapplicable: return "inapplicable";
  }
  return "unknown";
}

AffinePolynomial entire_truncation_family(const CVector& taylor, int d) {
  require(d >= 0, "entire_truncation_family: d must be >= 0");
  require(static_cast<std::size_t>(d) < taylor.size(),
          "entire_truncation_family: d exceeds the Taylor data");
  AffinePolynomial p(2, std::max(d, 1));
  const int w[] = {0, 1};
  p.set_coeff(w, 1.0);
  for (int n = 0; n <= d; ++n) {
    const int zn[] = {n, 0};
    p.set_coeff(zn, p.coeff(zn) - taylor[static_cast<std::size_t>(n)]);
  }
  return p;
}

AffinePolynomial gap_truncation_family(const GapSeriesGraph& g, int k) {
  validate(g);
  require(k >= 0 && static_cast<std::size_t>(k) <= g.exponents.size(),
          "gap_truncation_family: k out of range");
  const long long top = k > 0 ? g.exponents[static_cast<std::size_t>(k) - 1] : 1;
  require(top <= PolyLimits{}.max_degree, "gap_truncation_family: degree above cap",
          ErrorCode::budget_exceeded);
  AffinePolynomial p(2, static_cast<int>(std::max(top, 1LL)));
  const int w[] = {0, 1};
  p.set_coeff(w, 1.0);
  for (int j = 0; j < k; ++j) {
    const int zn[] = {static_cast<int>(g.exponents[static_cast<std::size_t>(j)]), 0};
    p.set_coeff(zn, p.coeff(zn) - g.coeffs[static_cast<std::size_t>(j)]);
  }
  return p;
}

FamilyProbe FamilyProbe::from_point(const CurveGenerator& g, Complex z, Complex w) {
  Complex f;
  if (auto* e = std::get_if<EntireGraph>(&g))
    f = graph_function(*e, z);
  else if (auto* s = std::get_if<GapSeriesGraph>(&g))
    f = graph_function(*s, z);
  else
    fail(ErrorCode::inapplicable, "probe: generator has no truncation family");
  Complex off = w - f;
  const double eps = std::numeric_limits<double>::epsilon();
  if (std::abs(off) <= 8 * eps * (std::abs(w) + std::abs(f))) off = 0;
  return {z, off};
}

namespace {

struct Family {
  std::string name;
  int degree(int rung) const { return gap ? static_cast<int>(gap->exponents[rung - 1]) : rung; }
  const EntireGraph* entire = nullptr;
  const GapSeriesGraph* gap = nullptr;
};

Family family_of(const CurveGenerator& g) {
  Family f;
  if (auto* e = std::get_if<EntireGraph>(&g)) {
    f.name = "entire_graph";
    f.entire = e;
  } else if (auto* s = std::get_if<GapSeriesGraph>(&g)) {
    f.name = "gap_series_graph";
    f.gap = s;
  } else {
    fail(ErrorCode::inapplicable, "certify_exclusion: generator " + generator_kind(g) +
                                      " has no truncation family");
  }
  return f;
}

// Remainder of exp beyond the stored Taylor terms on |z| <= r.
double exp_remainder(std::size_t T, double r) {
  const double lead = std::exp(static_cast<double>(T) * std::log(r) - std::lgamma(T + 1.0));
  return lead / (1.0 - r / (T + 1.0));
}

}  // namespace

Complex family_tail(const CurveGenerator& g, int rung, Complex z) {
  const Family f = family_of(g);
  CompensatedSum acc;
  if (f.entire) {
    const auto& a = f.entire->taylor;
    require(rung >= 0 && static_cast<std::size_t>(rung) + 1 < a.size(),
            "family_tail: degree beyond the Taylor data");
    Complex zn = std::pow(z, rung + 1);
    for (std::size_t n = static_cast<std::size_t>(rung) + 1; n < a.size(); ++n) {
      acc.add(a[n] * zn);
      zn *= z;
    }
  } else {
    require(rung >= 0 && static_cast<std::size_t>(rung) <= f.gap->exponents.size(),
            "family_tail: rung out of range");
    for (std::size_t j = static_cast<std::size_t>(rung); j < f.gap->exponents.size(); ++j)
      acc.add(f.gap->coeffs[j] * std::pow(z, static_cast<double>(f.gap->exponents[j])));
  }
  return acc.value();
}

ExclusionCertificate certify_exclusion(const SampledCompactum& K, const FamilyProbe& x,
                                       const std::vector<int>& ladder, double growth_factor) {
  const Family fam = family_of(K.generator);
  require(ladder.size() >= 2, "certify_exclusion: ladder needs at least two rungs");
  require(std::is_sorted(ladder.begin(), ladder.end()) && ladder.front() >= 1,
          "certify_exclusion: ladder must be ascending and start at 1 or more");
  require(K.parameters.size() == K.size(),
          "certify_exclusion: compactum carries no curve parameters");
  if (fam.gap)
    require(static_cast<std::size_t>(ladder.back()) < fam.gap->exponents.size(),
            "certify_exclusion: the gap ladder needs n_{k+1}, i.e. more listed exponents");

  ExclusionCertificate cert;
  cert.x = x;
  cert.family = fam.name;
  cert.growth_factor = growth_factor;
  const double r = fam.entire ? fam.entire->radius : fam.gap->radius;
  bool any_nonzero = false;

  for (int rung : ladder) {
    ExclusionRecord rec;
    rec.rung = rung;
    rec.d = fam.degree(rung);
    rec.value_at_x = std::abs(x.offset + family_tail(K.generator, rung, x.z));
    for (const auto& zeta : K.parameters)
      rec.sup_sampled = std::max(rec.sup_sampled, std::abs(family_tail(K.generator, rung, zeta)));

    double bound = 0;
    if (fam.entire) {
      const auto& a = fam.entire->taylor;
      for (std::size_t n = static_cast<std::size_t>(rung) + 1; n < a.size(); ++n)
        bound += std::abs(a[n]) * std::pow(r, static_cast<double>(n));
      if (fam.entire->function == "exp") bound += exp_remainder(a.size(), r);
    } else {
      const auto& g = *fam.gap;
      bool applies = true;
      for (std::size_t j = static_cast<std::size_t>(rung); j < g.exponents.size(); ++j) {
        const double nj = static_cast<double>(g.exponents[j]);
        bound += std::abs(g.coeffs[j]) * std::pow(r, nj);
        applies = applies && std::pow(std::abs(g.coeffs[j]), 1.0 / nj) * r <= std::sqrt(r);
      }
      if (applies) {
        const double L = 1.0 / (1.0 - std::sqrt(r));
        rec.proof_bound =
            L * std::pow(r, 0.5 * static_cast<double>(g.exponents[static_cast<std::size_t>(rung)]));
        bound = std::max(bound, rec.proof_bound);
      }
    }
    rec.sup_bound = bound;

    auto implied = [&](double sup) {
      if (rec.value_at_x == 0) return 0.0;
      if (sup == 0) return std::numeric_limits<double>::infinity();
      return std::pow(rec.value_at_x / sup, 1.0 / rec.d);
    };
    rec.c_sampled = implied(rec.sup_sampled);
    rec.c_bound = implied(rec.sup_bound);
    any_nonzero = any_nonzero || rec.value_at_x > 0;
    cert.records.push_back(rec);
  }

  if (!any_nonzero) {
    cert.verdict = ExclusionVerdict::inapplicable;
    return cert;
  }
  const auto& top = cert.records[cert.records.size() - 1];
  const auto& second = cert.records[cert.records.size() - 2];
  auto grows = [&](double hi, double lo) { return lo > 0 && hi >= growth_factor * lo; };
  cert.sampled_growth = grows(top.c_sampled, second.c_sampled);
  cert.bound_growth = grows(top.c_bound, second.c_bound);
  cert.verdict = (cert.sampled_growth && cert.bound_growth) ? ExclusionVerdict::diverging
                                                            : ExclusionVerdict::bounded;
  return cert;
}

std::vector<CurveProbeResult> torus_exp_curve_probe(
    const SampledCompactum& K, const std::vector<std::pair<Complex, Complex>>& probes,
    const std::vector<int>& degrees, const Thresholds& thresholds, const SolverOptions& options) {
  require(std::holds_alternative<TorusExpCurve>(K.generator),
          "torus_exp_curve_probe: compactum is not the torus curve geometry");
  std::vector<CurveProbeResult> out;
  for (const auto& [z, w] : probes) {
    CurveProbeResult r;
    r.z = z;
    r.w = w;
    const CVector rep{1.0, z, w, z * w};
    const auto x = ProjectivePoint::from(rep);
    r.nearest_sample = nearest_sample_distance(K, x);
    r.profile = extremal_profile(K, x, degrees, options);
    r.classification = classify(r.profile, thresholds, r.nearest_sample);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace phull
