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

#ifndef STEER_SRC_HERMITIAN_BLOCKS_HPP_
#define STEER_SRC_HERMITIAN_BLOCKS_HPP_

// Helpers that express complex Hermitian unknowns and constraints in the real
// block form accepted by conic::Problem. A Hermitian n x n matrix is stored as
// a real 2n x 2n block through real_embed; coefficient matrices are scaled by
// 1/2 so that tr(embed(A)/2 * X) = Tr(A H) where H is the Hermitian matrix
// represented by X.

#include "steer/conic.hpp"
#include "steer/linalg.hpp"

namespace steer::detail {

// Real basis of n x n Hermitian matrices, indexed 0..n^2-1: diagonal units
// E_ii first, then for every pair i < j the two elements E_ij + E_ji and
// i (E_ij - E_ji).
class HermitianBasis {
 public:
  explicit HermitianBasis(int n);

  int dim() const { return n_; }
  int size() const { return n_ * n_; }

  // Tr(B_p H).
  double pair_with(int p, const HermMatrix& h) const;
  // sum_p coeffs[p] B_p.
  HermMatrix combine(const double* coeffs) const;
  HermMatrix element(int p) const;

  // A_constraint[block] += scale * embed(B_p) / 2.
  void add_element(conic::Problem& problem, int constraint, int block, int p,
                   double scale) const;

 private:
  struct Slot {
    int i;
    int j;
    int kind;  // 0 diagonal, 1 real part, 2 imaginary part
  };
  int n_;
  std::vector<Slot> slots_;
};

// scale * embed(H) / 2 into A_constraint[block] (constraint -1 is C).
void add_hermitian(conic::Problem& problem, int constraint, int block, const HermMatrix& h,
                   double scale);

// Hermitian matrix represented by a real 2n x 2n primal block.
HermMatrix hermitian_from_block(const RMatrix& block);

}  // namespace steer::detail

#endif  // STEER_SRC_HERMITIAN_BLOCKS_HPP_
