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

#include "phull/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Dense>

#include "phull/error.hpp"

namespace phull {

void DenseMatrix::append_row(std::span<const double> r) {
  require(rows == 0 ? true : r.size() == cols, "append_row: wrong row length",
          ErrorCode::dimension_mismatch);
  if (rows == 0) cols = r.size();
  data.insert(data.end(), r.begin(), r.end());
  ++rows;
}

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::numerical_failure: return "numerical_failure";
  }
  return "unknown";
}

namespace {

// Tableau in "dictionary" form. Row i < m expresses its basic variable as
//   basic_i = T(i, n) - sum_j T(i, j) * nonbasic_j
// and row m the objective z = T(m, n) - sum_j T(m, j) * nonbasic_j.
// Variables 0..n-1 are the free structurals, n..n+m-1 the slacks (>= 0).
// A free structural enters with either sign: its column is negated when
// needed and `sign` remembers the flip. Basic free variables have no bound,
// so their rows never take part in the ratio test and they never leave.
class Tableau {
 public:
  Tableau(const DenseMatrix& A, std::span<const double> b, std::span<const double> c)
      : m_(A.rows), n_(A.cols), width_(A.cols + 1), T_((A.rows + 1) * (A.cols + 1)) {
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = A(i, j);
      at(i, n_) = b[i];
    }
    for (std::size_t j = 0; j < n_; ++j) at(m_, j) = -c[j];
    basic_.resize(m_);
    nonbasic_.resize(n_);
    for (std::size_t i = 0; i < m_; ++i) basic_[i] = n_ + i;
    for (std::size_t j = 0; j < n_; ++j) nonbasic_[j] = j;
    sign_.assign(n_, 1.0);
  }

  double& at(std::size_t i, std::size_t j) { return T_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const { return T_[i * width_ + j]; }

  bool is_free(std::size_t var) const { return var < n_; }

  // Entering column or npos when optimal.
  std::size_t price(bool bland, double tol) {
    std::size_t best = npos;
    double best_score = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      const double rc = at(m_, j);
      const std::size_t var = nonbasic_[j];
      double score;
      if (is_free(var))
        score = std::abs(rc);
      else
        score = -rc;
      if (score <= tol) continue;
      if (bland) {
        if (best == npos || var < nonbasic_[best]) best = j;
      } else if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
    if (best != npos && is_free(nonbasic_[best]) && at(m_, best) > 0) negate_column(best);
    return best;
  }

  // Leaving row or npos when the column is an unbounded ray.
  std::size_t ratio_test(std::size_t s, bool bland, double pivot_tol, double& step) const {
    std::size_t best = npos;
    if (bland) {
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        if (is_free(basic_[i])) continue;
        const double a = at(i, s);
        if (a <= pivot_tol) continue;
        const double ratio = std::max(at(i, n_), 0.0) / a;
        if (ratio < best_ratio - 1e-15 ||
            (ratio <= best_ratio + 1e-15 && best != npos && basic_[i] < basic_[best])) {
          best_ratio = std::min(best_ratio, ratio);
          best = i;
        }
      }
      step = best == npos ? 0 : best_ratio;
      return best;
    }
    // Harris two-pass: bound the step with a small relaxation, then take the
    // largest pivot among rows whose exact ratio fits under the bound.
    constexpr double relax = 1e-12;
    double bound = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m_; ++i) {
      if (is_free(basic_[i])) continue;
      const double a = at(i, s);
      if (a <= pivot_tol) continue;
      bound = std::min(bound, (std::max(at(i, n_), 0.0) + relax) / a);
    }
    if (!std::isfinite(bound)) return npos;
    double best_a = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (is_free(basic_[i])) continue;
      const double a = at(i, s);
      if (a <= pivot_tol) continue;
      if (std::max(at(i, n_), 0.0) / a <= bound && a > best_a) {
        best_a = a;
        best = i;
      }
    }
    step = std::max(at(best, n_), 0.0) / at(best, s);
    return best;
  }

  void pivot(std::size_t r, std::size_t s) {
    const double p = at(r, s);
    const double inv = 1.0 / p;
    double* row_r = &T_[r * width_];
    for (std::size_t j = 0; j < width_; ++j) row_r[j] *= inv;
    row_r[s] = inv;
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      double* row_i = &T_[i * width_];
      const double f = row_i[s];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < width_; ++j) row_i[j] -= f * row_r[j];
      row_i[s] = -f * inv;
    }
    std::swap(basic_[r], nonbasic_[s]);
  }

  std::vector<double> primal() const {
    std::vector<double> x(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i)
      if (is_free(basic_[i])) x[basic_[i]] = sign_[basic_[i]] * at(i, n_);
    return x;
  }

  // Rows whose slack is nonbasic, i.e. tight at the current vertex.
  std::vector<std::size_t> tight_rows() const {
    std::vector<std::size_t> rows;
    for (std::size_t var : nonbasic_)
      if (!is_free(var)) rows.push_back(var - n_);
    return rows;
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  void negate_column(std::size_t j) {
    for (std::size_t i = 0; i <= m_; ++i) at(i, j) = -at(i, j);
    sign_[nonbasic_[j]] = -sign_[nonbasic_[j]];
  }

  std::size_t m_, n_, width_;
  std::vector<double> T_;
  std::vector<std::size_t> basic_, nonbasic_;
  std::vector<double> sign_;
};

double max_violation(const DenseMatrix& A, std::span<const double> b, const std::vector<double>& x) {
  double worst = 0;
  for (std::size_t i = 0; i < A.rows; ++i) {
    double ax = 0;
    for (std::size_t j = 0; j < A.cols; ++j) ax += A(i, j) * x[j];
    worst = std::max(worst, ax - b[i]);
  }
  return worst;
}

// The tableau drifts over long pivot sequences. At a vertex where all free
// variables are basic, the n tight rows determine x; re-solve them from the
// original data and keep the result when it is no less feasible.
void refine_vertex(const DenseMatrix& A, std::span<const double> b,
                   const std::vector<std::size_t>& tight, std::vector<double>& x) {
  const std::size_t n = A.cols;
  if (tight.size() != n || n == 0) return;
  Eigen::MatrixXd M(n, n);
  Eigen::VectorXd rhs(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < n; ++j) M(r, j) = A(tight[r], j);
    rhs(r) = b[tight[r]];
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
  Eigen::VectorXd sol = lu.solve(rhs);
  sol += lu.solve(rhs - M * sol);
  if (!sol.allFinite()) return;
  std::vector<double> y(sol.data(), sol.data() + n);
  if (max_violation(A, b, y) <= std::max(max_violation(A, b, x), 0.0) + 1e-15) x = std::move(y);
}

}  // namespace

LpResult solve_lp(const DenseMatrix& A, std::span<const double> b, std::span<const double> c,
                  const LpOptions& options) {
  require(A.rows == b.size(), "solve_lp: A has " + std::to_string(A.rows) +
                                  " rows but b has " + std::to_string(b.size()),
          ErrorCode::dimension_mismatch);
  require(A.cols == c.size(), "solve_lp: A has " + std::to_string(A.cols) +
                                  " columns but c has " + std::to_string(c.size()),
          ErrorCode::dimension_mismatch);
  for (double v : b)
    require(v >= 0 && std::isfinite(v), "solve_lp: the origin must be feasible (b >= 0)");

  LpResult result;
  Tableau tab(A, b, c);
  const std::size_t cap =
      options.max_iterations ? options.max_iterations : 50 * (A.rows + A.cols) + 100;
  bool bland = false;
  int degenerate = 0;
  result.min_pivot = std::numeric_limits<double>::infinity();

  while (true) {
    if (result.iterations >= cap) {
      std::ostringstream os;
      os << "iteration cap " << cap << " reached; pivot range [" << result.min_pivot << ", "
         << result.max_pivot << "]";
      result.status = LpStatus::numerical_failure;
      result.diagnostics = os.str();
      break;
    }
    const std::size_t s = tab.price(bland, options.optimality_tolerance);
    if (s == Tableau::npos) {
      result.status = LpStatus::optimal;
      break;
    }
    double step = 0;
    const std::size_t r = tab.ratio_test(s, bland, options.pivot_tolerance, step);
    if (r == Tableau::npos) {
      result.status = LpStatus::unbounded;
      break;
    }
    const double p = std::abs(tab.at(r, s));
    result.min_pivot = std::min(result.min_pivot, p);
    result.max_pivot = std::max(result.max_pivot, p);
    if (step <= 1e-13) {
      if (++degenerate > options.degenerate_limit && !bland) {
        bland = true;
        result.used_bland = true;
      }
    } else {
      degenerate = 0;
    }
    tab.pivot(r, s);
    ++result.iterations;
  }

  result.x = tab.primal();
  if (result.status == LpStatus::unbounded) {
    result.value = std::numeric_limits<double>::infinity();
    return result;
  }
  if (result.status == LpStatus::optimal) refine_vertex(A, b, tab.tight_rows(), result.x);
  double value = 0;
  for (std::size_t j = 0; j < c.size(); ++j) value += c[j] * result.x[j];
  result.value = value;

  double worst = 0, scale = 1;
  for (std::size_t i = 0; i < A.rows; ++i) {
    double ax = 0;
    for (std::size_t j = 0; j < A.cols; ++j) ax += A(i, j) * result.x[j];
    worst = std::max(worst, ax - b[i]);
    scale = std::max(scale, std::abs(b[i]));
  }
  result.max_violation = std::max(worst, 0.0);
  if (result.status == LpStatus::optimal &&
      result.max_violation > options.feasibility_tolerance * scale) {
    std::ostringstream os;
    os << "primal residual " << result.max_violation << " exceeds tolerance; pivot range ["
       << result.min_pivot << ", " << result.max_pivot << "]";
    result.status = LpStatus::numerical_failure;
    result.diagnostics = os.str();
  }
  return result;
}

}  // namespace phull
