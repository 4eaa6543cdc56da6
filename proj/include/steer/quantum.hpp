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

#ifndef STEER_QUANTUM_HPP_
#define STEER_QUANTUM_HPP_

#include <random>
#include <vector>

#include "steer/linalg.hpp"

namespace steer {

// Positive operator-valued measure: PSD effects summing to the identity.
class Povm {
 public:
  // Throws ValidationError unless every effect is PSD and the effects sum to
  // the identity, both within tol::kFeasibility.
  explicit Povm(std::vector<HermMatrix> outcomes);

  int dim() const { return dim_; }
  int num_outcomes() const { return static_cast<int>(outcomes_.size()); }
  const HermMatrix& operator[](int a) const { return outcomes_[a]; }
  const std::vector<HermMatrix>& outcomes() const { return outcomes_; }

 private:
  int dim_ = 0;
  std::vector<HermMatrix> outcomes_;
};

// k measurements on the same space with the same number of outcomes.
class MeasurementSet {
 public:
  explicit MeasurementSet(std::vector<Povm> povms);

  int num_settings() const { return static_cast<int>(povms_.size()); }
  int num_outcomes() const { return povms_.front().num_outcomes(); }
  int dim() const { return povms_.front().dim(); }
  const Povm& operator[](int x) const { return povms_[x]; }
  const std::vector<Povm>& povms() const { return povms_; }
  // A_{a|x}.
  const HermMatrix& effect(int a, int x) const { return povms_[x][a]; }

 private:
  std::vector<Povm> povms_;
};

// Conditional states sigma_{a|x} on the trusted side.
class Assemblage {
 public:
  // states[x][a]. Validates PSD-ness, no-signalling and unit trace of the
  // reduced state within tol::kFeasibility.
  explicit Assemblage(std::vector<std::vector<HermMatrix>> states);

  int num_settings() const { return static_cast<int>(states_.size()); }
  int num_outcomes() const { return static_cast<int>(states_.front().size()); }
  int dim() const { return reduced_.dim(); }
  const HermMatrix& state(int a, int x) const { return states_[x][a]; }
  const std::vector<std::vector<HermMatrix>>& states() const { return states_; }
  const HermMatrix& reduced_state() const { return reduced_; }

 private:
  std::vector<std::vector<HermMatrix>> states_;
  HermMatrix reduced_;
};

class BipartiteState {
 public:
  // Validates PSD within 1e-8 and unit trace within 1e-10.
  BipartiteState(int dim_a, int dim_b, HermMatrix matrix);

  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  const HermMatrix& matrix() const { return matrix_; }

 private:
  int dim_a_;
  int dim_b_;
  HermMatrix matrix_;
};

// Columns of each matrix form an orthonormal basis; any two bases are
// mutually unbiased. Basis 0 is the computational basis. Prime powers use the
// Galois-field construction, d = 6 the tensor product of the d = 2 and d = 3
// sets (3 bases). Throws CapabilityError beyond what can be constructed.
std::vector<CMatrix> mub_bases(int d, int k);

// Largest number of MUBs mub_bases can build in dimension d (0 if none).
int max_constructible_mubs(int d);

// Rank-one projectors onto the columns of an orthonormal basis.
Povm povm_from_basis(const CMatrix& basis);

// Projective measurements onto the first k MUBs in dimension d.
MeasurementSet mub_measurements(int d, int k);

// (sum_i |ii>) / sqrt(d).
CVector maximally_entangled_vector(int d);

// v |phi_d><phi_d| + (1 - v) 1/d^2, for -1/(d^2-1) <= v <= 1.
BipartiteState isotropic_state(int d, double v);

BipartiteState product_state(const HermMatrix& rho_a, const HermMatrix& rho_b);

// sigma_{a|x} = Tr_A[(A_{a|x} (x) 1) rho_AB].
Assemblage make_assemblage(const BipartiteState& state, const MeasurementSet& measurements);

// Element-wise transpose in the computational basis.
MeasurementSet transpose_measurements(const MeasurementSet& measurements);

// Random objects for property tests and randomized CLI suites.
CMatrix random_unitary(int d, std::mt19937_64& rng);
// Rank-one POVM with `outcomes` >= d effects |v_a><v_a|.
Povm random_rank_one_povm(int d, int outcomes, std::mt19937_64& rng);
// Generic full-rank POVM.
Povm random_povm(int d, int outcomes, std::mt19937_64& rng);
HermMatrix random_density_matrix(int d, std::mt19937_64& rng);
HermMatrix random_hermitian(int d, std::mt19937_64& rng);

}  // namespace steer

#endif  // STEER_QUANTUM_HPP_
