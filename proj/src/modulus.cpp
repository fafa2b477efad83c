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

#include "phull/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <numbers>
#include <sstream>
#include <string>

#include <Eigen/Dense>

#include "phull/error.hpp"

namespace phull {

const char* to_string(BracketStatus s) {
  switch (s) {
    case BracketStatus::bracketed: return "bracketed";
    case BracketStatus::unbounded: return "unbounded";
    case BracketStatus::failed: return "failed";
  }
  return "unknown";
}

double certification_ratio(int m_con, int m_obj) {
  return 1.0 / (std::cos(std::numbers::pi / m_con) * std::cos(std::numbers::pi / m_obj));
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Real vector of x -> Re(e^{i phi} <x, v>) in the variables (Re x, Im x).
void realified_row(const CVector& v, double phi, double* out) {
  const Complex rot{std::cos(phi), std::sin(phi)};
  const std::size_t D = v.size();
  for (std::size_t k = 0; k < D; ++k) {
    const Complex r = rot * v[k];
    out[k] = r.real();
    out[D + k] = -r.imag();
  }
}

// Column of the dual: polygon row (j, k), or the artificial unit column of
// row k when j < 0.
struct Column {
  long j = -1;
  int k = 0;
  double sign = 1.0;
  bool artificial() const { return j < 0; }
};

enum class Outcome { optimal, unbounded, failure };

struct DirectionalSolve {
  Outcome outcome = Outcome::failure;
  double dual_value = 0;
  double primal_value = 0;
  CVector x;
  std::size_t iterations = 0;
  std::size_t active = 0;
  double residual = 0;
  double residual_norm = 0;
  // Split of the final dual multipliers: polygon rows with y >= 0, polygon
  // rows with y < 0 (by modulus) and artificial columns (by modulus).
  double negative_sum = 0;
  double artificial_sum = 0;
  std::string diagnostics;
};

class DualSimplex {
 public:
  DualSimplex(const ModulusProgram& prog, const ModulusOptions& opt, std::vector<double> cost)
      : prog_(prog), opt_(opt), D_(prog.objective.size()), n_(2 * D_), c_(n_), c_exact_(n_) {
    // The pivots run on a slightly perturbed right-hand side, which keeps
    // the basic multipliers away from ties on the degenerate programs that
    // arise at points of K. The certificate is recomputed from the exact one.
    for (std::size_t i = 0; i < n_; ++i) {
      const auto I = static_cast<Eigen::Index>(i);
      c_exact_(I) = cost[i];
      const double u = std::fmod(0.6180339887498949 * static_cast<double>(i + 1), 1.0);
      c_(I) = cost[i] + opt.perturbation * (1 + std::abs(cost[i])) * (u - 0.5);
    }
    phase_step_ = kTwoPi / prog.m_con;
    basis_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i)
      basis_[i] = Column{-1, static_cast<int>(i), c_(static_cast<Eigen::Index>(i)) < 0 ? -1.0 : 1.0};
    refactor();
  }

  DirectionalSolve run() {
    DirectionalSolve out;
    const std::size_t cap = opt_.max_iterations ? opt_.max_iterations : 200 * (n_ + 10);
    bool phase_one = true;
    bool bland = false;
    int degenerate = 0;
    int since_refactor = 0;
    Eigen::VectorXd a(static_cast<Eigen::Index>(n_));

    while (true) {
      if (out.iterations >= cap) {
        out.diagnostics = "iteration cap " + std::to_string(cap) + " reached";
        return out;
      }
      const Eigen::VectorXd pi = Binv_.transpose() * basic_costs(phase_one);
      const auto entering = price(pi, phase_one, bland);
      if (!entering) {
        if (phase_one) {
          double infeasibility = 0;
          for (std::size_t i = 0; i < n_; ++i)
            if (basis_[i].artificial()) infeasibility += y_(static_cast<Eigen::Index>(i));
          if (infeasibility > 1e-9 * (1.0 + c_.lpNorm<1>())) {
            out.outcome = Outcome::unbounded;
            return out;
          }
          phase_one = false;
          degenerate = 0;
          bland = false;
          continue;
        }
        break;
      }
      column(*entering, a.data());
      const Eigen::VectorXd dir = Binv_ * a;
      const std::size_t r = ratio_test(dir, phase_one, bland);
      if (r == npos) {
        out.diagnostics = "no leaving column: basis numerically singular";
        return out;
      }
      const double theta = std::max(y_(static_cast<Eigen::Index>(r)), 0.0) / dir(static_cast<Eigen::Index>(r));
      if (theta <= 1e-14) {
        if (++degenerate > opt_.degenerate_limit) bland = true;
      } else {
        degenerate = 0;
      }
      min_pivot_ = std::min(min_pivot_, std::abs(dir(static_cast<Eigen::Index>(r))));
      max_pivot_ = std::max(max_pivot_, std::abs(dir(static_cast<Eigen::Index>(r))));
      update(r, dir, theta, *entering);
      ++out.iterations;
      if (++since_refactor >= opt_.refactor_interval) {
        refactor();
        since_refactor = 0;
      }
    }

    c_ = c_exact_;
    refactor();
    refine_final();
    const Eigen::VectorXd pi = Binv_.transpose() * basic_costs(false);
    out.x.assign(D_, Complex{});
    for (std::size_t k = 0; k < D_; ++k)
      out.x[k] = {pi(static_cast<Eigen::Index>(k)), pi(static_cast<Eigen::Index>(D_ + k))};
    // Dual objective and feasibility of the final basic solution.
    Eigen::VectorXd lhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      const double yi = y_(static_cast<Eigen::Index>(i));
      column(basis_[i], a.data());
      lhs += yi * a;
      if (basis_[i].artificial()) {
        out.artificial_sum += std::abs(yi);
      } else {
        ++out.active;
        if (yi >= 0)
          out.dual_value += yi;
        else
          out.negative_sum -= yi;
      }
    }
    out.residual = (lhs - c_).lpNorm<Eigen::Infinity>();
    out.residual_norm = (lhs - c_).norm();
    out.primal_value = c_.dot(pi);
    // Residual, negative and artificial multipliers are all absorbed by the
    // caller; only a non-finite solve invalidates the dual.
    if (!std::isfinite(out.residual_norm) || !std::isfinite(out.dual_value + out.negative_sum + out.artificial_sum)) {
      std::ostringstream os;
      os << "final basis numerically singular; pivot range [" << min_pivot_ << ", " << max_pivot_ << "]";
      out.diagnostics = os.str();
      return out;
    }
    out.outcome = Outcome::optimal;
    return out;
  }

 private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  void column(const Column& col, double* out) const {
    if (col.artificial()) {
      std::fill(out, out + n_, 0.0);
      out[col.k] = col.sign;
      return;
    }
    realified_row(prog_.constraints[static_cast<std::size_t>(col.j)], col.k * phase_step_, out);
  }

  Eigen::VectorXd basic_costs(bool phase_one) const {
    Eigen::VectorXd cb(static_cast<Eigen::Index>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      cb(static_cast<Eigen::Index>(i)) = basis_[i].artificial() == phase_one ? 1.0 : 0.0;
    return cb;
  }

  int best_phase(Complex w, double& value) const {
    const int M = prog_.m_con;
    const long long centre = std::llround(-std::atan2(w.imag(), w.real()) / phase_step_);
    value = -std::numeric_limits<double>::infinity();
    int best = 0;
    for (long long kk = centre - 1; kk <= centre + 1; ++kk) {
      const int k = static_cast<int>(((kk % M) + M) % M);
      const double v = (Complex{std::cos(k * phase_step_), std::sin(k * phase_step_)} * w).real();
      if (v > value) {
        value = v;
        best = k;
      }
    }
    return best;
  }

  // Entering column with negative reduced cost, if any. Reduced cost of
  // polygon row (j, k) is cost - Re(e^{i phi_k} w_j) with w_j = <pi, v_j>.
  std::optional<Column> price(const Eigen::VectorXd& pi, bool phase_one, bool bland) const {
    const double cost = phase_one ? 0.0 : 1.0;
    CVector x(D_);
    for (std::size_t k = 0; k < D_; ++k)
      x[k] = {pi(static_cast<Eigen::Index>(k)), pi(static_cast<Eigen::Index>(D_ + k))};
    std::optional<Column> best;
    double best_rc = -opt_.optimality_tolerance;
    for (std::size_t j = 0; j < prog_.constraints.size(); ++j) {
      Complex w{};
      const auto& v = prog_.constraints[j];
      for (std::size_t k = 0; k < D_; ++k) w += x[k] * v[k];
      double value;
      int k = best_phase(w, value);
      const double rc = cost - value;
      if (rc >= -opt_.optimality_tolerance) continue;
      if (bland) {
        // Smallest (j, k) with negative reduced cost.
        for (int kk = 0; kk < prog_.m_con; ++kk) {
          const double v2 =
              (Complex{std::cos(kk * phase_step_), std::sin(kk * phase_step_)} * w).real();
          if (cost - v2 < -opt_.optimality_tolerance) {
            k = kk;
            break;
          }
        }
        return Column{static_cast<long>(j), k, 1.0};
      }
      if (rc < best_rc) {
        best_rc = rc;
        best = Column{static_cast<long>(j), k, 1.0};
      }
    }
    return best;
  }

  std::size_t ratio_test(const Eigen::VectorXd& dir, bool phase_one, bool bland) const {
    const double tol = opt_.pivot_tolerance * std::max(1.0, dir.lpNorm<Eigen::Infinity>());
    // Zero-level artificials must not move once phase one is over; the one
    // with the largest pivot leaves.
    if (!phase_one) {
      std::size_t art = npos;
      double art_pivot = tol;
      for (std::size_t i = 0; i < n_; ++i) {
        const double d = std::abs(dir(static_cast<Eigen::Index>(i)));
        if (basis_[i].artificial() && d > art_pivot) {
          art = i;
          art_pivot = d;
        }
      }
      if (art != npos) return art;
    }
    double bound = std::numeric_limits<double>::infinity();
    constexpr double relax = 1e-12;
    for (std::size_t i = 0; i < n_; ++i) {
      const double d = dir(static_cast<Eigen::Index>(i));
      if (d <= tol) continue;
      const double y = std::max(y_(static_cast<Eigen::Index>(i)), 0.0);
      bound = std::min(bound, (y + (bland ? 0.0 : relax)) / d);
    }
    if (!std::isfinite(bound)) return npos;
    std::size_t best = npos;
    double best_key = -1;
    for (std::size_t i = 0; i < n_; ++i) {
      const double d = dir(static_cast<Eigen::Index>(i));
      if (d <= tol) continue;
      const double ratio = std::max(y_(static_cast<Eigen::Index>(i)), 0.0) / d;
      if (ratio > bound * (1 + 1e-12) + 1e-300) continue;
      // Bland: the column with the smallest identity leaves; otherwise the
      // largest pivot among the candidates.
      const double key = bland ? -static_cast<double>(identity(basis_[i])) : d;
      if (key > best_key || best == npos) {
        best_key = key;
        best = i;
      }
    }
    return best;
  }

  double identity(const Column& c) const {
    if (c.artificial()) return c.k;
    return static_cast<double>(n_) + static_cast<double>(c.j) * prog_.m_con + c.k;
  }

  void update(std::size_t r, const Eigen::VectorXd& dir, double theta, const Column& entering) {
    const auto R = static_cast<Eigen::Index>(r);
    y_ -= theta * dir;
    y_(R) = theta;
    const double p = dir(R);
    Eigen::RowVectorXd row = Binv_.row(R) / p;
    for (Eigen::Index i = 0; i < Binv_.rows(); ++i) {
      if (i == R || dir(i) == 0.0) continue;
      Binv_.row(i) -= dir(i) * row;
    }
    Binv_.row(R) = row;
    basis_[r] = entering;
  }

  void refactor() {
    const auto N = static_cast<Eigen::Index>(n_);
    Eigen::MatrixXd B(N, N);
    for (std::size_t i = 0; i < n_; ++i) column(basis_[i], B.col(static_cast<Eigen::Index>(i)).data());
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
    Binv_ = lu.inverse();
    y_ = lu.solve(c_);
    y_ += lu.solve(c_ - B * y_);
  }

  // Basic solution for the final certificate: full pivoting and iterative
  // refinement until the residual stops shrinking.
  void refine_final() {
    const auto N = static_cast<Eigen::Index>(n_);
    Eigen::MatrixXd B(N, N);
    for (std::size_t i = 0; i < n_; ++i) column(basis_[i], B.col(static_cast<Eigen::Index>(i)).data());
    Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
    Eigen::VectorXd y = lu.solve(c_);
    double res = (c_ - B * y).lpNorm<Eigen::Infinity>();
    for (int it = 0; it < 8 && res > 0; ++it) {
      const Eigen::VectorXd next = y + lu.solve(c_ - B * y);
      const double r = (c_ - B * next).lpNorm<Eigen::Infinity>();
      if (!(r < res)) break;
      y = next;
      res = r;
    }
    if (res < (c_ - B * y_).lpNorm<Eigen::Infinity>()) y_ = y;
  }

  const ModulusProgram& prog_;
  const ModulusOptions& opt_;
  std::size_t D_, n_;
  Eigen::VectorXd c_, c_exact_;
  double phase_step_ = 0;
  std::vector<Column> basis_;
  Eigen::MatrixXd Binv_;
  Eigen::VectorXd y_;
  double min_pivot_ = std::numeric_limits<double>::infinity();
  double max_pivot_ = 0;
};

// Program whose constraint vectors span the coefficient space numerically.
BracketedValue solve_full_rank(const ModulusProgram& prog, const ModulusOptions& opt) {
  // Distinct direction residues modulo 2 pi / m_con.
  const double period = kTwoPi / prog.m_con;
  std::vector<double> residues;
  for (int k = 0; k < prog.m_obj; ++k) {
    const double theta = kTwoPi * k / prog.m_obj;
    double r = theta - std::floor(theta / period + 1e-12) * period;
    if (r < 1e-12 * period || r > period * (1 - 1e-12)) r = 0;
    bool known = false;
    for (double q : residues) known = known || std::abs(q - r) <= 1e-12 * period;
    if (!known) residues.push_back(r);
  }

  // Column scaling: the LP sees x'_k = x_k / s_k with every column of
  // modulus at most one. The program value is unchanged.
  ModulusProgram scaled = prog;
  std::vector<double> scale(prog.objective.size(), 0.0);
  for (std::size_t k = 0; k < scale.size(); ++k) {
    double s = std::abs(prog.objective[k]);
    for (const auto& v : prog.constraints) s = std::max(s, std::abs(v[k]));
    scale[k] = s > 0 ? 1.0 / s : 1.0;
    scaled.objective[k] *= scale[k];
    for (auto& v : scaled.constraints) v[k] *= scale[k];
  }

  // Every feasible x has |<x, v_j>| <= sec(pi / m_con), hence
  // |x|_2 <= sqrt(m) sec(pi / m_con) / sigma_min(V). For multipliers y with
  // sum y a = c - r, weak duality gives
  //   c.x <= sum y+ + sec(pi / m_con) sum |y-| + radius (sum |y_art| + |r|_2).
  const std::size_t D = prog.objective.size();
  Eigen::MatrixXcd V(D, scaled.constraints.size());
  for (std::size_t j = 0; j < scaled.constraints.size(); ++j)
    for (std::size_t k = 0; k < D; ++k) V(k, j) = scaled.constraints[j][k];
  const double sigma_min = Eigen::BDCSVD<Eigen::MatrixXcd>(V).singularValues().minCoeff();
  const double radius = std::sqrt(static_cast<double>(scaled.constraints.size())) /
                        std::cos(std::numbers::pi / prog.m_con) / sigma_min;

  BracketedValue out;
  double best_value = 0;
  std::vector<double> cost(2 * D);
  for (double theta : residues) {
    realified_row(scaled.objective, theta, cost.data());
    DualSimplex solver(scaled, opt, cost);
    const DirectionalSolve s = solver.run();
    out.lp_iterations += s.iterations;
    if (s.outcome == Outcome::unbounded) {
      out.status = BracketStatus::unbounded;
      out.lo = 0;
      out.hi = out.directional_value = std::numeric_limits<double>::infinity();
      out.diagnostics = "polygon LP unbounded: some coefficient vector vanishes on every constraint";
      return out;
    }
    if (s.outcome != Outcome::optimal) {
      out.status = BracketStatus::failed;
      out.diagnostics = s.diagnostics;
      return out;
    }
    out.active_rows = s.active;
    out.dual_residual = std::max(out.dual_residual, s.residual);
    const double correction = s.negative_sum / std::cos(std::numbers::pi / prog.m_con) +
                              (s.artificial_sum + s.residual_norm) * radius;
    if (!std::isfinite(correction)) {
      out.status = BracketStatus::failed;
      out.diagnostics = "dual residual cannot be bounded: constraint matrix singular";
      return out;
    }
    best_value = std::max({best_value, s.dual_value + correction, s.primal_value});

    double max_modulus = 0;
    for (const auto& v : scaled.constraints) {
      Complex w{};
      for (std::size_t k = 0; k < D; ++k) w += s.x[k] * v[k];
      max_modulus = std::max(max_modulus, std::abs(w));
    }
    if (max_modulus > 0) {
      Complex obj{};
      for (std::size_t k = 0; k < D; ++k) obj += s.x[k] * scaled.objective[k];
      const double ratio = std::abs(obj) / max_modulus;
      if (ratio > out.lo || out.witness.empty()) {
        out.lo = ratio;
        out.witness = s.x;
        for (auto& c : out.witness) c /= max_modulus;
      }
    }
  }
  out.status = BracketStatus::bracketed;
  out.directional_value = best_value;
  out.hi = best_value / std::cos(std::numbers::pi / prog.m_obj);
  if (out.witness.empty()) out.witness.assign(D, Complex{});
  for (std::size_t k = 0; k < D; ++k) out.witness[k] *= scale[k];
  return out;
}

// Rounding-guarded lower bound |<c, o>| / max_j |<c, v_j>| for a witness c.
double certified_ratio(const CVector& c, const ModulusProgram& prog) {
  const double gamma = 2.0 * (static_cast<double>(c.size()) + 2) * std::numeric_limits<double>::epsilon();
  auto dot = [&](const CVector& v, double& err) {
    Complex s{};
    double a = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      s += c[k] * v[k];
      a += std::abs(c[k]) * std::abs(v[k]);
    }
    err = gamma * a;
    return std::abs(s);
  };
  double err = 0;
  const double num = dot(prog.objective, err) - err;
  double den = 0;
  for (const auto& v : prog.constraints) {
    const double m = dot(v, err);
    den = std::max(den, m + err);
  }
  if (num <= 0 || den <= 0) return 0;
  return num / den;
}

}  // namespace

BracketedValue solve_modulus_program(const ModulusProgram& prog, const ModulusOptions& opt) {
  require(prog.m_con >= 8 && prog.m_con % 2 == 0, "modulus program: M_con must be even and >= 8");
  require(prog.m_obj >= 8 && prog.m_obj % 2 == 0, "modulus program: M_obj must be even and >= 8");
  require(!prog.constraints.empty(), "modulus program: at least one constraint is required");
  require(!prog.objective.empty(), "modulus program: empty coefficient space");
  for (const auto& v : prog.constraints)
    require(v.size() == prog.objective.size(), "modulus program: constraint of wrong length",
            ErrorCode::dimension_mismatch);

  // Numerical row space of the column-scaled constraints. Directions below
  // the rank tolerance are treated as exact relations among the samples.
  const std::size_t D = prog.objective.size(), m = prog.constraints.size();
  std::vector<double> scale(D, 0.0);
  for (std::size_t k = 0; k < D; ++k) {
    double s = std::abs(prog.objective[k]);
    for (const auto& v : prog.constraints) s = std::max(s, std::abs(v[k]));
    scale[k] = s > 0 ? 1.0 / s : 1.0;
  }
  Eigen::MatrixXcd V(D, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < D; ++k) V(k, j) = prog.constraints[j][k] * scale[k];
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(V);
  qr.setThreshold(opt.rank_tolerance);
  const auto r = static_cast<std::size_t>(qr.rank());
  if (r == D) {
    auto out = solve_full_rank(prog, opt);
    out.rank = r;
    return out;
  }

  Eigen::VectorXcd o(D);
  for (std::size_t k = 0; k < D; ++k) o(k) = prog.objective[k] * scale[k];
  const Eigen::MatrixXcd Q = qr.householderQ() * Eigen::MatrixXcd::Identity(D, static_cast<Eigen::Index>(r));
  const Eigen::VectorXcd perp = o - Q * (Q.adjoint() * o);
  std::ostringstream diag;
  diag << "constraint rank " << r << " of " << D;

  // Projection onto a basis with pivot ratio kappa is accurate to about
  // eps * kappa, so the span test cannot be sharper than that.
  const auto R = qr.matrixQR().diagonal();
  const double kappa = std::abs(R(0)) / std::abs(R(static_cast<Eigen::Index>(r) - 1));
  const double span_tol =
      std::max(opt.span_tolerance, 100 * std::numeric_limits<double>::epsilon() * kappa);
  if (perp.norm() > span_tol * o.norm()) {
    // Some coefficient vector vanishes on every constraint to working
    // precision without vanishing on the objective.
    BracketedValue out;
    out.status = BracketStatus::unbounded;
    out.rank = r;
    out.hi = out.directional_value = std::numeric_limits<double>::infinity();
    out.witness.resize(D);
    for (std::size_t k = 0; k < D; ++k) out.witness[k] = std::conj(perp(k)) * scale[k];
    out.lo = certified_ratio(out.witness, prog);
    double top = 0;
    for (const auto& v : prog.constraints) {
      Complex s{};
      for (std::size_t k = 0; k < D; ++k) s += out.witness[k] * v[k];
      top = std::max(top, std::abs(s));
    }
    if (top > 0)
      for (auto& c : out.witness) c /= top;
    diag << "; objective leaves the numerical row space (relative residual "
         << perp.norm() / o.norm() << ", tolerance " << span_tol << ")";
    out.diagnostics = diag.str();
    return out;
  }

  // Solve in the orthonormal coordinates c' = Q^T c of the row space and map
  // back with c = conj(Q) c', which reproduces every <c, v_j> exactly.
  ModulusProgram reduced;
  reduced.m_con = prog.m_con;
  reduced.m_obj = prog.m_obj;
  const Eigen::VectorXcd ro = Q.adjoint() * o;
  reduced.objective.assign(ro.data(), ro.data() + r);
  const Eigen::MatrixXcd RV = Q.adjoint() * V;
  for (std::size_t j = 0; j < m; ++j) {
    const Eigen::VectorXcd col = RV.col(static_cast<Eigen::Index>(j));
    reduced.constraints.emplace_back(col.data(), col.data() + r);
  }
  auto out = solve_full_rank(reduced, opt);
  out.rank = r;
  diag << (out.diagnostics.empty() ? "" : "; ") << out.diagnostics;
  out.diagnostics = diag.str();
  if (out.status != BracketStatus::bracketed) return out;
  Eigen::VectorXcd w(static_cast<Eigen::Index>(r));
  for (std::size_t k = 0; k < r; ++k) w(k) = out.witness[k];
  const Eigen::VectorXcd c = Q.conjugate() * w;
  out.witness.assign(D, Complex{});
  for (std::size_t k = 0; k < D; ++k) out.witness[k] = c(k) * scale[k];
  double top = 0;
  Complex obj{};
  for (const auto& v : prog.constraints) {
    Complex s{};
    for (std::size_t k = 0; k < D; ++k) s += out.witness[k] * v[k];
    top = std::max(top, std::abs(s));
  }
  for (std::size_t k = 0; k < D; ++k) obj += out.witness[k] * prog.objective[k];
  if (top > 0) {
    for (auto& x : out.witness) x /= top;
    out.lo = std::abs(obj) / top;
  }
  return out;
}

}  // namespace phull
