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

#ifndef STEER_LINALG_HPP_
#define STEER_LINALG_HPP_

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace steer {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

namespace tol {
// Verdicts on PSD-ness and normalization of physical objects.
inline constexpr double kFeasibility = 1e-8;
// Algebraic identities that hold up to rounding.
inline constexpr double kAlgebraic = 1e-10;
// Negative eigenvalues above -kSqrtClamp are treated as zero in psd_sqrt.
inline constexpr double kSqrtClamp = 1e-10;
}  // namespace tol

// Dense complex Hermitian matrix. The constructor symmetrizes its input,
// (M + M^dagger) / 2, and remembers how far the input was from Hermitian.
class HermMatrix {
 public:
  HermMatrix() = default;
  explicit HermMatrix(const CMatrix& m);

  static HermMatrix zero(int dim);
  static HermMatrix identity(int dim);
  static HermMatrix diagonal(std::span<const double> entries);
  // |v><v| (not normalized).
  static HermMatrix projector(const CVector& v);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  // max |M - M^dagger| entry-wise of the matrix passed to the constructor.
  double input_asymmetry() const { return input_asymmetry_; }

  double trace() const { return m_.trace().real(); }
  HermMatrix transpose() const;

  HermMatrix operator+(const HermMatrix& other) const;
  HermMatrix operator-(const HermMatrix& other) const;
  HermMatrix operator*(double s) const;
  HermMatrix operator/(double s) const { return *this * (1.0 / s); }
  HermMatrix operator-() const { return *this * -1.0; }

 private:
  CMatrix m_;
  double input_asymmetry_ = 0.0;
};

inline HermMatrix operator*(double s, const HermMatrix& m) { return m * s; }

struct EigenDecomposition {
  RVector values;   // ascending
  CMatrix vectors;  // columns are eigenvectors
};

// Throws SolverError if the decomposition does not reconstruct M to 1e-10
// relative Frobenius error.
EigenDecomposition herm_eig(const HermMatrix& m);

// Unique PSD square root. Eigenvalues in [-1e-10, 0) are clamped to zero;
// anything more negative raises NotPsdError.
HermMatrix psd_sqrt(const HermMatrix& m, double negative_tolerance = tol::kSqrtClamp);

// Tr_A of an operator on C^dim_a (x) C^dim_b.
HermMatrix partial_trace_first(const HermMatrix& m, int dim_a, int dim_b);

HermMatrix kron(const HermMatrix& a, const HermMatrix& b);

// [[Re M, -Im M], [Im M, Re M]]: real symmetric, PSD iff M is PSD, every
// eigenvalue of M appears twice.
RMatrix real_embed(const HermMatrix& m);

double min_eig(const HermMatrix& m);
double max_eig(const HermMatrix& m);
bool is_psd(const HermMatrix& m, double tolerance = tol::kFeasibility);

// Re Tr(A B); exact trace for Hermitian A, B.
double trace_inner(const HermMatrix& a, const HermMatrix& b);

// Largest entry-wise modulus of A - B.
double max_abs_diff(const HermMatrix& a, const HermMatrix& b);
double frobenius_norm(const HermMatrix& m);

}  // namespace steer

#endif  // STEER_LINALG_HPP_
