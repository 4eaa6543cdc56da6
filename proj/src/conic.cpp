// Copyright 2026 The steer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "steer/conic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <sstream>

#include "steer/errors.hpp"

namespace steer::conic {

int Problem::add_block(int size) {
  if (size <= 0) throw ShapeError("conic block size must be positive");
  block_sizes_.push_back(size);
  return num_blocks() - 1;
}

int Problem::add_constraint(double rhs) {
  rhs_.push_back(rhs);
  return num_constraints() - 1;
}

void Problem::set_rhs(int constraint, double rhs) {
  check(constraint, 0, 0, 0);
  rhs_[constraint] = rhs;
}

void Problem::check(int constraint, int block, int row, int col) const {
  if (constraint < -1 || constraint >= num_constraints() || block < 0 ||
      block >= num_blocks() || row < 0 || col < 0 || row >= block_sizes_[block] ||
      col >= block_sizes_[block]) {
    std::ostringstream msg;
    msg << "conic entry out of range (constraint " << constraint << ", block " << block
        << ", " << row << ", " << col << ")";
    throw ShapeError(msg.str());
  }
}

void Problem::add_entry(int constraint, int block, int row, int col, double value) {
  check(constraint, block, row, col);
  if (value == 0.0) return;
  if (row > col) std::swap(row, col);
  entries_.push_back({constraint, block, row, col, value});
}

void Problem::add_objective_entry(int block, int row, int col, double value) {
  add_entry(-1, block, row, col, value);
}

void Problem::add_dense(int constraint, int block, const RMatrix& m, double value) {
  for (int j = 0; j < m.cols(); ++j) {
    for (int i = 0; i <= j; ++i) add_entry(constraint, block, i, j, value * m(i, j));
  }
}

void Problem::add_objective_dense(int block, const RMatrix& m, double value) {
  add_dense(-1, block, m, value);
}

int Problem::total_dimension() const {
  int n = 0;
  for (int s : block_sizes_) n += s;
  return n;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "optimal";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kInaccurate:
      return "inaccurate";
  }
  return "unknown";
}

namespace {

struct SparseTerm {
  int row;
  int col;
  double value;
};

// One A_i restricted to one block, entries listed at both symmetric positions.
struct BlockConstraint {
  int constraint;
  std::vector<SparseTerm> terms;
};

struct CompiledProblem {
  int m = 0;
  std::vector<int> sizes;
  RVector b;
  std::vector<RMatrix> c;
  std::vector<std::vector<BlockConstraint>> blocks;
  std::vector<double> constraint_norm;  // ||A_i||_F
};

CompiledProblem compile(const Problem& problem) {
  CompiledProblem out;
  out.m = problem.num_constraints();
  out.sizes = problem.block_sizes();
  out.b = Eigen::Map<const RVector>(problem.rhs().data(), out.m);
  out.c.resize(out.sizes.size());
  for (size_t k = 0; k < out.sizes.size(); ++k) out.c[k] = RMatrix::Zero(out.sizes[k], out.sizes[k]);
  out.blocks.resize(out.sizes.size());
  out.constraint_norm.assign(out.m, 0.0);

  // Merge duplicates: (block, constraint, row, col) -> value.
  std::vector<Problem::Entry> entries = problem.entries();
  std::sort(entries.begin(), entries.end(), [](const auto& l, const auto& r) {
    if (l.block != r.block) return l.block < r.block;
    if (l.constraint != r.constraint) return l.constraint < r.constraint;
    if (l.row != r.row) return l.row < r.row;
    return l.col < r.col;
  });
  size_t i = 0;
  while (i < entries.size()) {
    Problem::Entry e = entries[i];
    size_t j = i + 1;
    while (j < entries.size() && entries[j].block == e.block &&
           entries[j].constraint == e.constraint && entries[j].row == e.row &&
           entries[j].col == e.col) {
      e.value += entries[j].value;
      ++j;
    }
    i = j;
    if (e.value == 0.0) continue;
    if (e.constraint < 0) {
      out.c[e.block](e.row, e.col) += e.value;
      if (e.row != e.col) out.c[e.block](e.col, e.row) += e.value;
      continue;
    }
    auto& list = out.blocks[e.block];
    if (list.empty() || list.back().constraint != e.constraint) {
      list.push_back({e.constraint, {}});
    }
    list.back().terms.push_back({e.row, e.col, e.value});
    if (e.row != e.col) list.back().terms.push_back({e.col, e.row, e.value});
    out.constraint_norm[e.constraint] += (e.row == e.col ? 1.0 : 2.0) * e.value * e.value;
  }
  for (double& v : out.constraint_norm) v = std::sqrt(v);
  return out;
}

double trace_product(const std::vector<SparseTerm>& terms, const RMatrix& m) {
  double s = 0.0;
  for (const SparseTerm& t : terms) s += t.value * m(t.col, t.row);
  return s;
}

// A(X)_i = tr(A_i X).
RVector apply_constraints(const CompiledProblem& p, const std::vector<RMatrix>& x) {
  RVector out = RVector::Zero(p.m);
  for (size_t k = 0; k < p.blocks.size(); ++k) {
    for (const BlockConstraint& bc : p.blocks[k]) out(bc.constraint) += trace_product(bc.terms, x[k]);
  }
  return out;
}

// A^T(y) restricted to block k.
RMatrix adjoint_block(const CompiledProblem& p, size_t k, const RVector& y) {
  RMatrix out = RMatrix::Zero(p.sizes[k], p.sizes[k]);
  for (const BlockConstraint& bc : p.blocks[k]) {
    const double w = y(bc.constraint);
    if (w == 0.0) continue;
    for (const SparseTerm& t : bc.terms) out(t.row, t.col) += w * t.value;
  }
  return out;
}

double inner(const std::vector<RMatrix>& a, const std::vector<RMatrix>& b) {
  double s = 0.0;
  for (size_t k = 0; k < a.size(); ++k) s += (a[k].array() * b[k].array()).sum();
  return s;
}

double frobenius(const std::vector<RMatrix>& a) { return std::sqrt(inner(a, a)); }

RMatrix symmetrize(const RMatrix& m) { return 0.5 * (m + m.transpose()); }

// Largest alpha with X + alpha dX >= 0 (infinity if unbounded).
double max_step(const std::vector<RMatrix>& x, const std::vector<RMatrix>& dx) {
  double alpha = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k < x.size(); ++k) {
    Eigen::LLT<RMatrix> llt(x[k]);
    if (llt.info() != Eigen::Success) return 0.0;
    const RMatrix l_inv = llt.matrixL().solve(RMatrix::Identity(x[k].rows(), x[k].cols()));
    const RMatrix w = symmetrize(l_inv * dx[k] * l_inv.transpose());
    double lowest;
    if (w.rows() == 1) {
      lowest = w(0, 0);
    } else {
      Eigen::SelfAdjointEigenSolver<RMatrix> eig(w, Eigen::EigenvaluesOnly);
      lowest = eig.eigenvalues()(0);
    }
    if (lowest < 0.0) alpha = std::min(alpha, -1.0 / lowest);
  }
  return alpha;
}

bool all_finite(const std::vector<RMatrix>& blocks) {
  for (const RMatrix& m : blocks) {
    if (!m.allFinite()) return false;
  }
  return true;
}

}  // namespace

Solution InteriorPointSolver::solve(const Problem& problem, const Settings& settings) const {
  const CompiledProblem p = compile(problem);
  const size_t nb = p.sizes.size();
  const int m = p.m;
  const double n = problem.total_dimension();
  const double b_norm = p.b.norm();
  const double c_norm = frobenius(p.c);

  // Starting point as in CSDP: scaled identities, y = 0.
  double alpha0 = 0.0;
  double max_a_norm = 0.0;
  for (int i = 0; i < m; ++i) {
    alpha0 = std::max(alpha0, (1.0 + std::abs(p.b(i))) / (1.0 + p.constraint_norm[i]));
    max_a_norm = std::max(max_a_norm, p.constraint_norm[i]);
  }
  alpha0 *= n;
  const double beta0 = (1.0 + std::max(max_a_norm, c_norm)) / std::sqrt(n);

  std::vector<RMatrix> x(nb), z(nb);
  for (size_t k = 0; k < nb; ++k) {
    x[k] = 10.0 * alpha0 * RMatrix::Identity(p.sizes[k], p.sizes[k]);
    z[k] = 10.0 * beta0 * RMatrix::Identity(p.sizes[k], p.sizes[k]);
  }
  RVector y = RVector::Zero(m);

  Solution sol;
  std::vector<RMatrix> z_inv(nb), rd(nb);
  RMatrix schur(m, m);

  for (int iter = 0; iter <= settings.max_iterations; ++iter) {
    // Residuals: rp = b - A(X), rd = A^T(y) - C - Z.
    const RVector ax = apply_constraints(p, x);
    const RVector rp = p.b - ax;
    for (size_t k = 0; k < nb; ++k) rd[k] = adjoint_block(p, k, y) - p.c[k] - z[k];
    sol.primal_objective = inner(p.c, x);
    sol.dual_objective = p.b.dot(y);
    sol.primal_infeasibility = rp.norm() / (1.0 + b_norm);
    sol.dual_infeasibility = frobenius(rd) / (1.0 + c_norm);
    sol.iterations = iter;
    const double rel_gap = std::abs(sol.dual_objective - sol.primal_objective) /
                           (1.0 + std::abs(sol.dual_objective) + std::abs(sol.primal_objective));
    if (sol.primal_infeasibility < settings.tolerance &&
        sol.dual_infeasibility < settings.tolerance && rel_gap < settings.tolerance) {
      sol.status = Status::kOptimal;
      break;
    }
    if (iter == settings.max_iterations) {
      sol.message = "iteration limit reached";
      break;
    }
    if (!all_finite(x) || !all_finite(z) || !y.allFinite() || frobenius(x) > 1e15 ||
        y.norm() > 1e15) {
      sol.status = Status::kInfeasible;
      sol.message = "iterates diverged; problem is likely infeasible or unbounded";
      break;
    }

    const double mu = inner(x, z) / n;

    // Schur complement M_ij = tr(A_i X A_j Z^-1).
    bool factor_ok = true;
    for (size_t k = 0; k < nb; ++k) {
      Eigen::LLT<RMatrix> llt(z[k]);
      if (llt.info() != Eigen::Success) {
        factor_ok = false;
        break;
      }
      z_inv[k] = symmetrize(llt.solve(RMatrix::Identity(p.sizes[k], p.sizes[k])));
    }
    if (!factor_ok) {
      sol.message = "slack matrix lost positive definiteness";
      break;
    }
    schur.setZero();
    for (size_t k = 0; k < nb; ++k) {
      const auto& list = p.blocks[k];
      const RMatrix& xk = x[k];
      const RMatrix& zi = z_inv[k];
      RMatrix w(p.sizes[k], p.sizes[k]);
      for (size_t jj = 0; jj < list.size(); ++jj) {
        w.setZero();
        for (const SparseTerm& t : list[jj].terms) {
          w.noalias() += t.value * xk.col(t.row) * zi.row(t.col);
        }
        const int j = list[jj].constraint;
        for (size_t ii = 0; ii <= jj; ++ii) {
          schur(list[ii].constraint, j) += trace_product(list[ii].terms, w);
        }
      }
    }
    schur.triangularView<Eigen::StrictlyLower>() =
        schur.triangularView<Eigen::StrictlyUpper>().transpose();
    Eigen::LLT<RMatrix> schur_llt(schur);
    if (schur_llt.info() != Eigen::Success) {
      const double shift = 1e-14 * std::max(1.0, schur.diagonal().maxCoeff());
      schur_llt.compute(schur + shift * RMatrix::Identity(m, m));
      if (schur_llt.info() != Eigen::Success) {
        sol.message = "Schur complement is singular";
        break;
      }
    }

    // Solves for a direction given the complementarity target `target`
    // (the term added to -X in the linearized X Z = target).
    auto direction = [&](const std::vector<RMatrix>& target, std::vector<RMatrix>& dx,
                         RVector& dy, std::vector<RMatrix>& dz) {
      std::vector<RMatrix> r(nb);
      for (size_t k = 0; k < nb; ++k) r[k] = target[k] - x[k] * rd[k] * z_inv[k];
      const RVector rhs = apply_constraints(p, r) - p.b;
      dy = schur_llt.solve(rhs);
      for (size_t k = 0; k < nb; ++k) {
        dz[k] = adjoint_block(p, k, dy) + rd[k];
        dx[k] = symmetrize(target[k] - x[k] - x[k] * dz[k] * z_inv[k]);
      }
    };

    // Predictor (affine scaling).
    std::vector<RMatrix> target(nb), dx_aff(nb), dz_aff(nb), dx(nb), dz(nb);
    RVector dy_aff, dy;
    for (size_t k = 0; k < nb; ++k) target[k] = RMatrix::Zero(p.sizes[k], p.sizes[k]);
    direction(target, dx_aff, dy_aff, dz_aff);
    const double ap_aff = std::min(1.0, max_step(x, dx_aff));
    const double ad_aff = std::min(1.0, max_step(z, dz_aff));
    double mu_aff = 0.0;
    for (size_t k = 0; k < nb; ++k) {
      mu_aff += ((x[k] + ap_aff * dx_aff[k]).array() * (z[k] + ad_aff * dz_aff[k]).array()).sum();
    }
    mu_aff /= n;
    const double sigma = std::clamp(std::pow(std::max(mu_aff, 0.0) / mu, 3.0), 0.0, 1.0);

    // Corrector.
    for (size_t k = 0; k < nb; ++k) {
      target[k] = sigma * mu * z_inv[k] - dx_aff[k] * dz_aff[k] * z_inv[k];
    }
    direction(target, dx, dy, dz);

    const double ap = std::min(1.0, settings.step_fraction * max_step(x, dx));
    const double ad = std::min(1.0, settings.step_fraction * max_step(z, dz));
    if (ap < 1e-12 && ad < 1e-12) {
      sol.message = "step length collapsed";
      break;
    }
    for (size_t k = 0; k < nb; ++k) {
      x[k] += ap * dx[k];
      z[k] += ad * dz[k];
    }
    y += ad * dy;
  }

  if (sol.status != Status::kOptimal && sol.status != Status::kInfeasible &&
      sol.message.empty()) {
    sol.message = "did not reach the requested accuracy";
  }
  sol.primal = std::move(x);
  sol.slack = std::move(z);
  sol.dual = std::move(y);
  return sol;
}

std::unique_ptr<Solver> make_solver(std::string_view name) {
  if (name.empty() || name == "ipm") return std::make_unique<InteriorPointSolver>();
  std::ostringstream msg;
  msg << "unknown conic solver '" << name << "' (available: ipm)";
  throw Error(msg.str());
}

const Solver& default_solver() {
  static const std::unique_ptr<Solver> solver = [] {
    const char* env = std::getenv("STEER_SOLVER");
    return make_solver(env == nullptr ? "" : env);
  }();
  return *solver;
}

}  // namespace steer::conic
