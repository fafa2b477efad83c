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

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace phull {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

struct PolyLimits {
  int max_degree = 64;
  std::size_t max_coefficients = 1'000'000;
};

/// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(Complex v);
  Complex value() const { return {re_ + cre_, im_ + cim_}; }

 private:
  double re_ = 0, im_ = 0, cre_ = 0, cim_ = 0;
};

/// Element of C[Z_0..Z_n]_d, stored densely in graded-lex order.
class HomogeneousPolynomial {
 public:
  HomogeneousPolynomial(int n, int d, const PolyLimits& limits = {});
  HomogeneousPolynomial(int n, int d, CVector coeffs, const PolyLimits& limits = {});

  static HomogeneousPolynomial monomial(std::span<const int> alpha, Complex c = 1.0);

  int n() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return coeffs_.size(); }
  const CVector& coeffs() const { return coeffs_; }
  CVector& coeffs() { return coeffs_; }

  Complex coeff(std::span<const int> alpha) const;
  void set_coeff(std::span<const int> alpha, Complex c);

  Complex operator()(std::span<const Complex> z) const;

  HomogeneousPolynomial& operator*=(Complex s);

 private:
  int n_;
  int d_;
  CVector coeffs_;
};

/// Fills `out` with Z^alpha for every alpha of C[Z_0..Z_n]_d, in graded-lex
/// order. This is the evaluation functional as a row of coefficient space.
void monomial_values(int n, int d, std::span<const Complex> z, std::span<Complex> out);
CVector monomial_values(int n, int d, std::span<const Complex> z);

Complex eval(const HomogeneousPolynomial& p, std::span<const Complex> z);

/// |P(Z)| / |Z|^d; independent of the representative Z of the point.
double fs_section_norm(const HomogeneousPolynomial& p, std::span<const Complex> z);

double coeff_l1_norm(const HomogeneousPolynomial& p);

/// Maximum of |P| over the distinguished torus |Z_0| = ... = |Z_n| = 1 at
/// samples_per_angle equispaced phases per coordinate. This is a lower bound
/// for the sup over the closed unit polydisk. Requires
/// samples_per_angle >= 4d+1; throws budget_exceeded when the number of
/// evaluations would pass `evaluation_cap`.
double polydisk_sup_lower(const HomogeneousPolynomial& p, int samples_per_angle,
                          std::size_t evaluation_cap = 20'000'000);

HomogeneousPolynomial multiply(const HomogeneousPolynomial& p,
                               const HomogeneousPolynomial& q,
                               const PolyLimits& limits = {});

/// P^k by repeated exact coefficient convolution.
HomogeneousPolynomial veronese_power(const HomogeneousPolynomial& p, int k,
                                     const PolyLimits& limits = {});

using ValueOracle = std::function<Complex(std::span<const Complex>)>;

/// Degree-m homogeneous component of an (inhomogeneous) polynomial given only
/// by its values: (1/N) sum_j P(w^j Z) w^(-jm), w = exp(2 pi i / N). Exact
/// when N exceeds the polynomial's total degree; `declared_degree` is that
/// degree and N <= declared_degree raises `aliasing`.
Complex extract_degree_component(const ValueOracle& value, std::span<const Complex> z,
                                 int m, int N, int declared_degree);

/// p in C[z_1..z_n] of degree <= d. Coefficients follow the graded order
/// obtained by dehomogenizing C[Z_0..Z_n]_d, so homogenization by Z_0 is the
/// identity on the coefficient vector.
class AffinePolynomial {
 public:
  AffinePolynomial(int n, int d, const PolyLimits& limits = {});
  AffinePolynomial(int n, int d, CVector coeffs, const PolyLimits& limits = {});

  int n() const { return n_; }
  int degree_cap() const { return d_; }
  const CVector& coeffs() const { return coeffs_; }
  CVector& coeffs() { return coeffs_; }

  /// Coefficient of z^beta, |beta| <= d.
  Complex coeff(std::span<const int> beta) const;
  void set_coeff(std::span<const int> beta, Complex c);

  Complex operator()(std::span<const Complex> z) const;

  HomogeneousPolynomial homogenize() const;
  static AffinePolynomial dehomogenize(const HomogeneousPolynomial& p);

 private:
  std::size_t position(std::span<const int> beta) const;

  int n_;
  int d_;
  CVector coeffs_;
};

/// |p(z)| / (1 + |z|^2)^(d/2): the norm of the section p defines at [1:z]
/// when p is regarded as an element of degree d.
double affine_section_norm(const AffinePolynomial& p, std::span<const Complex> z, int d);

/// Affine evaluation row: z^beta for |beta| <= d in AffinePolynomial order.
CVector affine_monomial_values(int n, int d, std::span<const Complex> z);

}  // namespace phull
