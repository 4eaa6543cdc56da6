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

#include "hermitian_blocks.hpp"

namespace steer::detail {

HermitianBasis::HermitianBasis(int n) : n_(n) {
  for (int i = 0; i < n; ++i) slots_.push_back({i, i, 0});
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      slots_.push_back({i, j, 1});
      slots_.push_back({i, j, 2});
    }
  }
}

double HermitianBasis::pair_with(int p, const HermMatrix& h) const {
  const Slot& s = slots_[p];
  switch (s.kind) {
    case 0:
      return h(s.i, s.i).real();
    case 1:
      return 2.0 * h(s.i, s.j).real();
    default:
      return 2.0 * h(s.i, s.j).imag();
  }
}

HermMatrix HermitianBasis::combine(const double* coeffs) const {
  CMatrix m = CMatrix::Zero(n_, n_);
  for (int p = 0; p < size(); ++p) {
    const Slot& s = slots_[p];
    switch (s.kind) {
      case 0:
        m(s.i, s.i) += coeffs[p];
        break;
      case 1:
        m(s.i, s.j) += coeffs[p];
        m(s.j, s.i) += coeffs[p];
        break;
      default:
        m(s.i, s.j) += Complex(0.0, coeffs[p]);
        m(s.j, s.i) -= Complex(0.0, coeffs[p]);
        break;
    }
  }
  return HermMatrix(m);
}

HermMatrix HermitianBasis::element(int p) const {
  std::vector<double> coeffs(size(), 0.0);
  coeffs[p] = 1.0;
  return combine(coeffs.data());
}

void HermitianBasis::add_element(conic::Problem& problem, int constraint, int block, int p,
                                 double scale) const {
  const Slot& s = slots_[p];
  const double half = 0.5 * scale;
  switch (s.kind) {
    case 0:
      problem.add_entry(constraint, block, s.i, s.i, half);
      problem.add_entry(constraint, block, s.i + n_, s.i + n_, half);
      break;
    case 1:
      problem.add_entry(constraint, block, s.i, s.j, half);
      problem.add_entry(constraint, block, s.i + n_, s.j + n_, half);
      break;
    default:
      // embed(i (E_ij - E_ji)) has -1 at (i, j+n) and +1 at (j, i+n).
      problem.add_entry(constraint, block, s.i, s.j + n_, -half);
      problem.add_entry(constraint, block, s.j, s.i + n_, half);
      break;
  }
}

void add_hermitian(conic::Problem& problem, int constraint, int block, const HermMatrix& h,
                   double scale) {
  problem.add_dense(constraint, block, real_embed(h), 0.5 * scale);
}

HermMatrix hermitian_from_block(const RMatrix& block) {
  const int n = static_cast<int>(block.rows()) / 2;
  const RMatrix re = 0.5 * (block.topLeftCorner(n, n) + block.bottomRightCorner(n, n));
  const RMatrix im = 0.5 * (block.bottomLeftCorner(n, n) - block.topRightCorner(n, n));
  CMatrix h(n, n);
  h.real() = re;
  h.imag() = im;
  return HermMatrix(h);
}

}  // namespace steer::detail
