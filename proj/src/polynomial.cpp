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

#include "phull/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "phull/error.hpp"
#include "phull/multi_index.hpp"

namespace phull {

namespace {

void check_shape(int n, int d, const PolyLimits& limits) {
  require(n >= 0, "polynomial: n must be nonnegative");
  require(d >= 0, "polynomial: degree must be nonnegative");
  require(d <= limits.max_degree,
          "polynomial: degree " + std::to_string(d) + " exceeds cap " +
              std::to_string(limits.max_degree),
          ErrorCode::budget_exceeded);
  require(binomial(n + d, d) <= limits.max_coefficients,
          "polynomial: coefficient count exceeds cap", ErrorCode::budget_exceeded);
}

inline void two_sum(double a, double b, double& s, double& err) {
  s = a + b;
  double bp = s - a;
  err = (a - (s - bp)) + (b - bp);
}

}  // namespace

void CompensatedSum::add(Complex v) {
  double s, e;
  two_sum(re_, v.real(), s, e);
  re_ = s;
  cre_ += e;
  two_sum(im_, v.imag(), s, e);
  im_ = s;
  cim_ += e;
}

HomogeneousPolynomial::HomogeneousPolynomial(int n, int d, const PolyLimits& limits)
    : n_(n), d_(d) {
  check_shape(n, d, limits);
  coeffs_.assign(homogeneous_dimension(n, d), Complex{});
}

HomogeneousPolynomial::HomogeneousPolynomial(int n, int d, CVector coeffs,
                                             const PolyLimits& limits)
    : n_(n), d_(d), coeffs_(std::move(coeffs)) {
  check_shape(n, d, limits);
  require(coeffs_.size() == homogeneous_dimension(n, d),
          "polynomial: expected " + std::to_string(homogeneous_dimension(n, d)) +
              " coefficients, got " + std::to_string(coeffs_.size()),
          ErrorCode::dimension_mismatch);
}

HomogeneousPolynomial HomogeneousPolynomial::monomial(std::span<const int> alpha,
                                                      Complex c) {
  require(!alpha.empty(), "monomial: empty multi-index");
  int d = 0;
  for (int a : alpha) d += a;
  HomogeneousPolynomial p(static_cast<int>(alpha.size()) - 1, d);
  p.coeffs_[monomial_rank(alpha)] = c;
  return p;
}

Complex HomogeneousPolynomial::coeff(std::span<const int> alpha) const {
  require(alpha.size() == static_cast<std::size_t>(n_) + 1, "coeff: wrong arity",
          ErrorCode::dimension_mismatch);
  int d = 0;
  for (int a : alpha) d += a;
  if (d != d_) return {};
  return coeffs_[monomial_rank(alpha)];
}

void HomogeneousPolynomial::set_coeff(std::span<const int> alpha, Complex c) {
  require(alpha.size() == static_cast<std::size_t>(n_) + 1, "set_coeff: wrong arity",
          ErrorCode::dimension_mismatch);
  int d = 0;
  for (int a : alpha) d += a;
  require(d == d_, "set_coeff: multi-index degree differs from polynomial degree");
  coeffs_[monomial_rank(alpha)] = c;
}

Complex HomogeneousPolynomial::operator()(std::span<const Complex> z) const {
  return eval(*this, z);
}

HomogeneousPolynomial& HomogeneousPolynomial::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

void monomial_values(int n, int d, std::span<const Complex> z, std::span<Complex> out) {
  const auto vars = static_cast<std::size_t>(n) + 1;
  require(z.size() == vars, "monomial_values: point has wrong dimension",
          ErrorCode::dimension_mismatch);
  const auto& table = exponent_table(n, d);
  const std::size_t count = table.size() / vars;
  require(out.size() == count, "monomial_values: output has wrong size",
          ErrorCode::dimension_mismatch);

  // powers[k*(d+1)+e] = z_k^e
  std::vector<Complex> powers(vars * static_cast<std::size_t>(d + 1));
  for (std::size_t k = 0; k < vars; ++k) {
    Complex* row = &powers[k * static_cast<std::size_t>(d + 1)];
    row[0] = 1.0;
    for (int e = 1; e <= d; ++e) row[e] = row[e - 1] * z[k];
  }
  for (std::size_t i = 0; i < count; ++i) {
    const int* alpha = &table[i * vars];
    Complex v = powers[static_cast<std::size_t>(alpha[0])];
    for (std::size_t k = 1; k < vars; ++k)
      v *= powers[k * static_cast<std::size_t>(d + 1) + static_cast<std::size_t>(alpha[k])];
    out[i] = v;
  }
}

CVector monomial_values(int n, int d, std::span<const Complex> z) {
  CVector out(homogeneous_dimension(n, d));
  monomial_values(n, d, z, out);
  return out;
}

Complex eval(const HomogeneousPolynomial& p, std::span<const Complex> z) {
  require(z.size() == static_cast<std::size_t>(p.n()) + 1,
          "eval: point has " + std::to_string(z.size()) + " coordinates, expected " +
              std::to_string(p.n() + 1),
          ErrorCode::dimension_mismatch);
  CVector mono = monomial_values(p.n(), p.degree(), z);
  CompensatedSum acc;
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != Complex{}) acc.add(c[i] * mono[i]);
  return acc.value();
}

double fs_section_norm(const HomogeneousPolynomial& p, std::span<const Complex> z) {
  double norm2 = 0;
  for (auto v : z) norm2 += std::norm(v);
  require(norm2 > 0, "fs_section_norm: zero representative", ErrorCode::zero_representative);
  // Evaluate at the unit representative so that large or tiny |Z| cannot
  // overflow |Z|^d.
  const double scale = 1.0 / std::sqrt(norm2);
  CVector unit(z.begin(), z.end());
  for (auto& v : unit) v *= scale;
  return std::abs(eval(p, unit));
}

double coeff_l1_norm(const HomogeneousPolynomial& p) {
  double s = 0;
  for (auto c : p.coeffs()) s += std::abs(c);
  return s;
}

double polydisk_sup_lower(const HomogeneousPolynomial& p, int samples_per_angle,
                          std::size_t evaluation_cap) {
  const int d = p.degree();
  const int n = p.n();
  require(samples_per_angle >= 4 * d + 1,
          "polydisk_sup_lower: samples_per_angle must be at least 4d+1");
  // |P| is invariant under a common phase, so the Z_0 phase is pinned to 0:
  // the sampled value set is identical and the cost drops by a factor S.
  double evaluations = std::pow(static_cast<double>(samples_per_angle), n);
  require(evaluations <= static_cast<double>(evaluation_cap),
          "polydisk_sup_lower: sample budget exceeded", ErrorCode::budget_exceeded);

  const int S = samples_per_angle;
  std::vector<Complex> roots(static_cast<std::size_t>(S));
  for (int k = 0; k < S; ++k) {
    double t = 2.0 * std::numbers::pi * k / S;
    roots[static_cast<std::size_t>(k)] = {std::cos(t), std::sin(t)};
  }
  const auto vars = static_cast<std::size_t>(n) + 1;
  const auto& table = exponent_table(n, d);
  const auto& c = p.coeffs();

  std::vector<int> phase(vars, 0);
  double best = 0;
  while (true) {
    CompensatedSum acc;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] == Complex{}) continue;
      long long e = 0;
      for (std::size_t k = 1; k < vars; ++k)
        e += static_cast<long long>(table[i * vars + k]) * phase[k];
      acc.add(c[i] * roots[static_cast<std::size_t>(e % S)]);
    }
    best = std::max(best, std::abs(acc.value()));
    std::size_t k = 1;
    for (; k < vars; ++k) {
      if (++phase[k] < S) break;
      phase[k] = 0;
    }
    if (k >= vars) break;
  }
  return best;
}

HomogeneousPolynomial multiply(const HomogeneousPolynomial& p,
                               const HomogeneousPolynomial& q, const PolyLimits& limits) {
  require(p.n() == q.n(), "multiply: polynomials live in different dimensions",
          ErrorCode::dimension_mismatch);
  const int n = p.n();
  const auto vars = static_cast<std::size_t>(n) + 1;
  HomogeneousPolynomial out(n, p.degree() + q.degree(), limits);
  const auto& tp = exponent_table(n, p.degree());
  const auto& tq = exponent_table(n, q.degree());
  std::vector<int> sum(vars);
  // Compensated accumulation per output coefficient.
  std::vector<CompensatedSum> acc(out.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Complex a = p.coeffs()[i];
    if (a == Complex{}) continue;
    for (std::size_t j = 0; j < q.size(); ++j) {
      const Complex b = q.coeffs()[j];
      if (b == Complex{}) continue;
      for (std::size_t k = 0; k < vars; ++k) sum[k] = tp[i * vars + k] + tq[j * vars + k];
      acc[monomial_rank(sum)].add(a * b);
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) out.coeffs()[i] = acc[i].value();
  return out;
}

HomogeneousPolynomial veronese_power(const HomogeneousPolynomial& p, int k,
                                     const PolyLimits& limits) {
  require(k >= 1, "veronese_power: k must be >= 1");
  require(static_cast<long long>(p.degree()) * k <= limits.max_degree,
          "veronese_power: degree cap exceeded", ErrorCode::budget_exceeded);
  HomogeneousPolynomial out = p;
  for (int i = 1; i < k; ++i) out = multiply(out, p, limits);
  return out;
}

Complex extract_degree_component(const ValueOracle& value, std::span<const Complex> z,
                                 int m, int N, int declared_degree) {
  require(N >= 1, "extract_degree_component: N must be positive");
  require(N > declared_degree,
          "extract_degree_component: N=" + std::to_string(N) +
              " does not exceed the degree " + std::to_string(declared_degree) +
              " (aliasing)",
          ErrorCode::aliasing);
  require(m >= 0 && m < N, "extract_degree_component: m must lie in [0, N)");
  CVector rotated(z.begin(), z.end());
  CompensatedSum acc;
  for (int j = 0; j < N; ++j) {
    // Reduce the exponent modulo N before forming the angle so that the
    // roots of unity are computed from small arguments.
    const double t = 2.0 * std::numbers::pi * j / N;
    const Complex w{std::cos(t), std::sin(t)};
    for (std::size_t k = 0; k < z.size(); ++k) rotated[k] = w * z[k];
    const long long e = (static_cast<long long>(j) * m) % N;
    const double s = -2.0 * std::numbers::pi * static_cast<double>(e) / N;
    acc.add(value(rotated) * Complex{std::cos(s), std::sin(s)});
  }
  return acc.value() / static_cast<double>(N);
}

AffinePolynomial::AffinePolynomial(int n, int d, const PolyLimits& limits) : n_(n), d_(d) {
  require(n >= 1, "affine polynomial: need at least one variable");
  check_shape(n, d, limits);
  coeffs_.assign(homogeneous_dimension(n, d), Complex{});
}

AffinePolynomial::AffinePolynomial(int n, int d, CVector coeffs, const PolyLimits& limits)
    : n_(n), d_(d), coeffs_(std::move(coeffs)) {
  require(n >= 1, "affine polynomial: need at least one variable");
  check_shape(n, d, limits);
  require(coeffs_.size() == homogeneous_dimension(n, d),
          "affine polynomial: wrong coefficient count", ErrorCode::dimension_mismatch);
}

std::size_t AffinePolynomial::position(std::span<const int> beta) const {
  require(beta.size() == static_cast<std::size_t>(n_), "affine coeff: wrong arity",
          ErrorCode::dimension_mismatch);
  std::vector<int> alpha(static_cast<std::size_t>(n_) + 1);
  int total = 0;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    alpha[k + 1] = beta[k];
    total += beta[k];
  }
  require(total <= d_, "affine coeff: degree exceeds cap");
  alpha[0] = d_ - total;
  return monomial_rank(alpha);
}

Complex AffinePolynomial::coeff(std::span<const int> beta) const {
  return coeffs_[position(beta)];
}

void AffinePolynomial::set_coeff(std::span<const int> beta, Complex c) {
  coeffs_[position(beta)] = c;
}

CVector affine_monomial_values(int n, int d, std::span<const Complex> z) {
  require(z.size() == static_cast<std::size_t>(n), "affine eval: wrong dimension",
          ErrorCode::dimension_mismatch);
  CVector hom(static_cast<std::size_t>(n) + 1);
  hom[0] = 1.0;
  std::copy(z.begin(), z.end(), hom.begin() + 1);
  return monomial_values(n, d, hom);
}

Complex AffinePolynomial::operator()(std::span<const Complex> z) const {
  CVector mono = affine_monomial_values(n_, d_, z);
  CompensatedSum acc;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != Complex{}) acc.add(coeffs_[i] * mono[i]);
  return acc.value();
}

HomogeneousPolynomial AffinePolynomial::homogenize() const {
  return HomogeneousPolynomial(n_, d_, coeffs_);
}

AffinePolynomial AffinePolynomial::dehomogenize(const HomogeneousPolynomial& p) {
  return AffinePolynomial(p.n(), p.degree(), p.coeffs());
}

double affine_section_norm(const AffinePolynomial& p, std::span<const Complex> z, int d) {
  require(p.degree_cap() <= d, "affine_section_norm: polynomial degree exceeds d");
  double norm2 = 1.0;
  for (auto v : z) norm2 += std::norm(v);
  return std::abs(p(z)) / std::pow(norm2, 0.5 * d);
}

}  // namespace phull
