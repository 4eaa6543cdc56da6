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

#include "steer/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "steer/errors.hpp"

namespace steer {

HermMatrix::HermMatrix(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    std::ostringstream msg;
    msg << "HermMatrix needs a square matrix, got " << m.rows() << "x"
        << m.cols();
    throw ShapeError(msg.str());
  }
  const CMatrix adj = m.adjoint();
  input_asymmetry_ = m.size() == 0 ? 0.0 : (m - adj).cwiseAbs().maxCoeff();
  m_ = (m + adj) * 0.5;
}

HermMatrix HermMatrix::zero(int dim) {
  return HermMatrix(CMatrix::Zero(dim, dim));
}

HermMatrix HermMatrix::identity(int dim) {
  return HermMatrix(CMatrix::Identity(dim, dim));
}

HermMatrix HermMatrix::diagonal(std::span<const double> entries) {
  const int n = static_cast<int>(entries.size());
  CMatrix m = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = entries[i];
  return HermMatrix(m);
}

HermMatrix HermMatrix::projector(const CVector& v) {
  return HermMatrix(v * v.adjoint());
}

HermMatrix HermMatrix::transpose() const {
  return HermMatrix(CMatrix(m_.transpose()));
}

HermMatrix HermMatrix::operator+(const HermMatrix& other) const {
  if (dim() != other.dim()) throw ShapeError("HermMatrix sum: dimension mismatch");
  return HermMatrix(CMatrix(m_ + other.m_));
}

HermMatrix HermMatrix::operator-(const HermMatrix& other) const {
  if (dim() != other.dim()) throw ShapeError("HermMatrix difference: dimension mismatch");
  return HermMatrix(CMatrix(m_ - other.m_));
}

HermMatrix HermMatrix::operator*(double s) const {
  return HermMatrix(CMatrix(m_ * s));
}

EigenDecomposition herm_eig(const HermMatrix& m) {
  if (m.dim() == 0) return {RVector(), CMatrix()};
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m.matrix());
  if (solver.info() != Eigen::Success) {
    throw SolverError("Hermitian eigensolver did not converge",
                      std::numeric_limits<double>::infinity());
  }
  EigenDecomposition out{solver.eigenvalues(), solver.eigenvectors()};
  const CMatrix rebuilt =
      out.vectors * out.values.cast<Complex>().asDiagonal() * out.vectors.adjoint();
  const double scale = std::max(1.0, m.matrix().norm());
  const double residual = (rebuilt - m.matrix()).norm() / scale;
  if (residual > tol::kAlgebraic) {
    throw SolverError("Hermitian eigendecomposition is inaccurate", residual);
  }
  return out;
}

HermMatrix psd_sqrt(const HermMatrix& m, double negative_tolerance) {
  const EigenDecomposition eig = herm_eig(m);
  if (eig.values.size() == 0) return m;
  const double lowest = eig.values(0);
  if (lowest < -negative_tolerance) {
    std::ostringstream msg;
    msg << "psd_sqrt: matrix has eigenvalue " << lowest;
    throw NotPsdError(msg.str(), lowest);
  }
  // Eigenvalues at rounding level would otherwise contribute their square
  // roots, which are far larger than the noise itself.
  const double scale = eig.values.cwiseAbs().maxCoeff();
  const double floor = 16.0 * std::numeric_limits<double>::epsilon() * m.dim() * scale;
  const RVector roots =
      eig.values.unaryExpr([floor](double x) { return x > floor ? std::sqrt(x) : 0.0; });
  return HermMatrix(CMatrix(eig.vectors * roots.cast<Complex>().asDiagonal() *
                            eig.vectors.adjoint()));
}

HermMatrix partial_trace_first(const HermMatrix& m, int dim_a, int dim_b) {
  if (dim_a <= 0 || dim_b <= 0 || m.dim() != dim_a * dim_b) {
    std::ostringstream msg;
    msg << "partial_trace_first: matrix of dimension " << m.dim()
        << " is not " << dim_a << "x" << dim_b;
    throw ShapeError(msg.str());
  }
  CMatrix out = CMatrix::Zero(dim_b, dim_b);
  for (int a = 0; a < dim_a; ++a) {
    out += m.matrix().block(a * dim_b, a * dim_b, dim_b, dim_b);
  }
  return HermMatrix(out);
}

HermMatrix kron(const HermMatrix& a, const HermMatrix& b) {
  const int na = a.dim();
  const int nb = b.dim();
  CMatrix out(na * nb, na * nb);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < na; ++j) {
      out.block(i * nb, j * nb, nb, nb) = a(i, j) * b.matrix();
    }
  }
  return HermMatrix(out);
}

RMatrix real_embed(const HermMatrix& m) {
  const int n = m.dim();
  const RMatrix re = m.matrix().real();
  const RMatrix im = m.matrix().imag();
  RMatrix out(2 * n, 2 * n);
  out << re, -im, im, re;
  return out;
}

double min_eig(const HermMatrix& m) {
  if (m.dim() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m.matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

double max_eig(const HermMatrix& m) {
  if (m.dim() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(m.matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(m.dim() - 1);
}

bool is_psd(const HermMatrix& m, double tolerance) {
  return min_eig(m) >= -tolerance;
}

double trace_inner(const HermMatrix& a, const HermMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeError("trace_inner: dimension mismatch");
  // Tr(AB) = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B.
  return (a.matrix().array() * b.matrix().conjugate().array()).sum().real();
}

double max_abs_diff(const HermMatrix& a, const HermMatrix& b) {
  if (a.dim() != b.dim()) throw ShapeError("max_abs_diff: dimension mismatch");
  if (a.dim() == 0) return 0.0;
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

double frobenius_norm(const HermMatrix& m) { return m.matrix().norm(); }

}  // namespace steer
