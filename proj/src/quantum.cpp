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

#include "steer/quantum.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <sstream>

#include "steer/errors.hpp"
#include "steer/galois.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace steer {

Povm::Povm(std::vector<HermMatrix> outcomes) : outcomes_(std::move(outcomes)) {
  if (outcomes_.empty()) throw ValidationError("Povm needs at least one outcome");
  dim_ = outcomes_.front().dim();
  CMatrix total = CMatrix::Zero(dim_, dim_);
  for (size_t a = 0; a < outcomes_.size(); ++a) {
    const HermMatrix& e = outcomes_[a];
    if (e.dim() != dim_) throw ValidationError("Povm effects have different dimensions");
    const double lowest = min_eig(e);
    if (lowest < -tol::kFeasibility) {
      std::ostringstream msg;
      msg << "Povm effect " << a << " is not PSD (min eigenvalue " << lowest << ")";
      throw ValidationError(msg.str());
    }
    total += e.matrix();
  }
  const double dev = (total - CMatrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
  if (dev > tol::kFeasibility) {
    std::ostringstream msg;
    msg << "Povm effects do not sum to identity (deviation " << dev << ")";
    throw ValidationError(msg.str());
  }
}

MeasurementSet::MeasurementSet(std::vector<Povm> povms) : povms_(std::move(povms)) {
  if (povms_.empty()) throw ValidationError("MeasurementSet needs at least one setting");
  for (const Povm& p : povms_) {
    if (p.dim() != dim() || p.num_outcomes() != num_outcomes()) {
      throw ValidationError("MeasurementSet is ragged: settings differ in dimension or outcome count");
    }
  }
}

Assemblage::Assemblage(std::vector<std::vector<HermMatrix>> states)
    : states_(std::move(states)) {
  if (states_.empty() || states_.front().empty()) {
    throw ValidationError("Assemblage needs at least one setting and one outcome");
  }
  const int outcomes = static_cast<int>(states_.front().size());
  const int d = states_.front().front().dim();
  for (size_t x = 0; x < states_.size(); ++x) {
    if (static_cast<int>(states_[x].size()) != outcomes) {
      throw ValidationError("Assemblage is ragged");
    }
    CMatrix marginal = CMatrix::Zero(d, d);
    for (int a = 0; a < outcomes; ++a) {
      const HermMatrix& s = states_[x][a];
      if (s.dim() != d) throw ValidationError("Assemblage states differ in dimension");
      const double lowest = min_eig(s);
      if (lowest < -tol::kFeasibility) {
        std::ostringstream msg;
        msg << "Assemblage state (a=" << a << ", x=" << x << ") is not PSD (" << lowest << ")";
        throw ValidationError(msg.str());
      }
      marginal += s.matrix();
    }
    if (x == 0) {
      reduced_ = HermMatrix(marginal);
    } else {
      const double dev = (marginal - reduced_.matrix()).cwiseAbs().maxCoeff();
      if (dev > tol::kFeasibility) {
        std::ostringstream msg;
        msg << "Assemblage violates no-signalling at x=" << x << " (deviation " << dev << ")";
        throw ValidationError(msg.str());
      }
    }
  }
  if (std::abs(reduced_.trace() - 1.0) > tol::kFeasibility) {
    std::ostringstream msg;
    msg << "Assemblage reduced state has trace " << reduced_.trace();
    throw ValidationError(msg.str());
  }
}

BipartiteState::BipartiteState(int dim_a, int dim_b, HermMatrix matrix)
    : dim_a_(dim_a), dim_b_(dim_b), matrix_(std::move(matrix)) {
  if (dim_a <= 0 || dim_b <= 0 || matrix_.dim() != dim_a * dim_b) {
    throw ShapeError("BipartiteState: matrix dimension does not match dim_a * dim_b");
  }
  const double lowest = min_eig(matrix_);
  if (lowest < -tol::kFeasibility) {
    std::ostringstream msg;
    msg << "BipartiteState is not PSD (min eigenvalue " << lowest << ")";
    throw ValidationError(msg.str());
  }
  if (std::abs(matrix_.trace() - 1.0) > tol::kAlgebraic) {
    std::ostringstream msg;
    msg << "BipartiteState has trace " << matrix_.trace();
    throw ValidationError(msg.str());
  }
}

namespace {

// Bases for d = p^r, odd p: components omega^{Tr(m n^2 + j n)} / sqrt(d).
std::vector<CMatrix> odd_prime_power_mubs(const GaloisField& field) {
  const int q = field.order();
  const int p = field.characteristic();
  const double norm = 1.0 / std::sqrt(static_cast<double>(q));
  std::vector<CMatrix> bases;
  bases.push_back(CMatrix::Identity(q, q));
  for (int m = 0; m < q; ++m) {
    CMatrix basis(q, q);
    for (int j = 0; j < q; ++j) {
      for (int n = 0; n < q; ++n) {
        const int arg = field.add(field.mul(m, field.mul(n, n)), field.mul(j, n));
        const double phase = 2.0 * std::numbers::pi * field.trace(arg) / p;
        basis(n, j) = std::polar(norm, phase);
      }
    }
    bases.push_back(basis);
  }
  return bases;
}

// Bases for d = 2^r: for each field element m the symmetric binary form
// S_m[i][l] = Tr(m x^i x^l) defines components i^{n.S_m.n mod 4} (-1)^{j.n}.
// S_m - S_m' = S_{m-m'} is non-singular, which makes the bases unbiased.
std::vector<CMatrix> binary_mubs(const GaloisField& field) {
  const int q = field.order();
  const int r = field.exponent();
  const double norm = 1.0 / std::sqrt(static_cast<double>(q));
  static constexpr Complex kPowersOfI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<CMatrix> bases;
  bases.push_back(CMatrix::Identity(q, q));
  for (int m = 0; m < q; ++m) {
    std::vector<int> form(r * r);
    for (int i = 0; i < r; ++i) {
      for (int l = 0; l < r; ++l) {
        form[i * r + l] = field.trace(field.mul(m, field.mul(1 << i, 1 << l)));
      }
    }
    CMatrix basis(q, q);
    for (int n = 0; n < q; ++n) {
      int quad = 0;
      for (int i = 0; i < r; ++i) {
        for (int l = 0; l < r; ++l) {
          quad += form[i * r + l] * ((n >> i) & 1) * ((n >> l) & 1);
        }
      }
      const Complex phase = kPowersOfI[quad % 4];
      for (int j = 0; j < q; ++j) {
        const double sign = (std::popcount(static_cast<unsigned>(j & n)) % 2) ? -1.0 : 1.0;
        basis(n, j) = norm * sign * phase;
      }
    }
    bases.push_back(basis);
  }
  return bases;
}

std::vector<CMatrix> all_mubs(int d) {
  if (d == 1) return {CMatrix::Identity(1, 1)};
  const PrimePower pp = factor_prime_power(d);
  if (pp.prime != 0) {
    const GaloisField field(pp.prime, pp.exponent);
    return pp.prime == 2 ? binary_mubs(field) : odd_prime_power_mubs(field);
  }
  if (d == 6) {
    const std::vector<CMatrix> two = all_mubs(2);
    const std::vector<CMatrix> three = all_mubs(3);
    std::vector<CMatrix> out;
    for (int i = 0; i < 3; ++i) {
      out.push_back(Eigen::kroneckerProduct(two[i], three[i]).eval());
    }
    return out;
  }
  return {};
}

}  // namespace

int max_constructible_mubs(int d) {
  if (d == 1) return 1;
  if (factor_prime_power(d).prime != 0) return d + 1;
  if (d == 6) return 3;
  return 0;
}

std::vector<CMatrix> mub_bases(int d, int k) {
  if (d < 1 || k < 1) throw DomainError("mub_bases needs d >= 1 and k >= 1");
  const int limit = max_constructible_mubs(d);
  if (k > limit) {
    std::ostringstream msg;
    msg << "only " << limit << " MUBs constructible for d=" << d << " (requested " << k << ")";
    throw CapabilityError(msg.str());
  }
  std::vector<CMatrix> bases = all_mubs(d);
  bases.resize(k);
  return bases;
}

Povm povm_from_basis(const CMatrix& basis) {
  if (basis.rows() != basis.cols()) throw ValidationError("basis matrix must be square");
  const int d = static_cast<int>(basis.rows());
  const double dev = (basis.adjoint() * basis - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > tol::kAlgebraic) {
    std::ostringstream msg;
    msg << "basis is not orthonormal (deviation " << dev << ")";
    throw ValidationError(msg.str());
  }
  std::vector<HermMatrix> effects;
  effects.reserve(d);
  for (int j = 0; j < d; ++j) effects.push_back(HermMatrix::projector(basis.col(j)));
  return Povm(std::move(effects));
}

MeasurementSet mub_measurements(int d, int k) {
  std::vector<Povm> povms;
  for (const CMatrix& basis : mub_bases(d, k)) povms.push_back(povm_from_basis(basis));
  return MeasurementSet(std::move(povms));
}

CVector maximally_entangled_vector(int d) {
  CVector phi = CVector::Zero(d * d);
  for (int i = 0; i < d; ++i) phi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return phi;
}

BipartiteState isotropic_state(int d, double v) {
  if (d < 1) throw DomainError("isotropic_state needs d >= 1");
  const double lower = d == 1 ? -1.0 : -1.0 / (d * d - 1.0);
  if (!(v >= lower - 1e-15 && v <= 1.0 + 1e-15)) {
    std::ostringstream msg;
    msg << "isotropic_state: v=" << v << " outside PSD range [" << lower << ", 1]";
    throw DomainError(msg.str());
  }
  const int n = d * d;
  const CVector phi = maximally_entangled_vector(d);
  CMatrix rho = v * (phi * phi.adjoint()) + (1.0 - v) / n * CMatrix::Identity(n, n);
  return BipartiteState(d, d, HermMatrix(rho));
}

BipartiteState product_state(const HermMatrix& rho_a, const HermMatrix& rho_b) {
  return BipartiteState(rho_a.dim(), rho_b.dim(), kron(rho_a, rho_b));
}

Assemblage make_assemblage(const BipartiteState& state, const MeasurementSet& measurements) {
  const int da = state.dim_a();
  const int db = state.dim_b();
  if (measurements.dim() != da) {
    std::ostringstream msg;
    msg << "make_assemblage: measurements act on dimension " << measurements.dim()
        << " but Alice's system has dimension " << da;
    throw ShapeError(msg.str());
  }
  const CMatrix& rho = state.matrix().matrix();
  std::vector<std::vector<HermMatrix>> states(measurements.num_settings());
  for (int x = 0; x < measurements.num_settings(); ++x) {
    for (int a = 0; a < measurements.num_outcomes(); ++a) {
      const CMatrix& effect = measurements.effect(a, x).matrix();
      // sigma = sum_{ij} A_ji rho[(i, .), (j, .)]
      CMatrix sigma = CMatrix::Zero(db, db);
      for (int i = 0; i < da; ++i) {
        for (int j = 0; j < da; ++j) {
          const Complex w = effect(j, i);
          if (w == Complex(0.0, 0.0)) continue;
          sigma += w * rho.block(i * db, j * db, db, db);
        }
      }
      states[x].push_back(HermMatrix(sigma));
    }
  }
  return Assemblage(std::move(states));
}

MeasurementSet transpose_measurements(const MeasurementSet& measurements) {
  std::vector<Povm> povms;
  for (const Povm& p : measurements.povms()) {
    std::vector<HermMatrix> effects;
    for (const HermMatrix& e : p.outcomes()) effects.push_back(e.transpose());
    povms.emplace_back(std::move(effects));
  }
  return MeasurementSet(std::move(povms));
}

namespace {

CMatrix gaussian_matrix(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) g(i, j) = Complex(normal(rng), normal(rng));
  }
  return g;
}

// Q factor with the phases of R's diagonal removed (Haar distributed).
CMatrix orthonormal_columns(const CMatrix& g) {
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(g.rows(), g.cols());
  const CMatrix r = qr.matrixQR();
  for (int j = 0; j < g.cols(); ++j) {
    const Complex diag = r(j, j);
    if (std::abs(diag) > 0) q.col(j) *= diag / std::abs(diag);
  }
  return q;
}

}  // namespace

CMatrix random_unitary(int d, std::mt19937_64& rng) {
  return orthonormal_columns(gaussian_matrix(d, d, rng));
}

Povm random_rank_one_povm(int d, int outcomes, std::mt19937_64& rng) {
  if (outcomes < d) throw DomainError("rank-one POVM needs at least d outcomes");
  // Rows of an outcomes x d isometry give vectors with sum |v><v| = 1.
  const CMatrix iso = orthonormal_columns(gaussian_matrix(outcomes, d, rng));
  std::vector<HermMatrix> effects;
  for (int a = 0; a < outcomes; ++a) {
    effects.push_back(HermMatrix::projector(iso.row(a).adjoint()));
  }
  return Povm(std::move(effects));
}

Povm random_povm(int d, int outcomes, std::mt19937_64& rng) {
  std::vector<CMatrix> raw;
  CMatrix total = CMatrix::Zero(d, d);
  for (int a = 0; a < outcomes; ++a) {
    const CMatrix g = gaussian_matrix(d, d, rng);
    raw.push_back(g * g.adjoint());
    total += raw.back();
  }
  const HermMatrix inv_sqrt = [&] {
    Eigen::SelfAdjointEigenSolver<CMatrix> eig(total);
    const RVector s = eig.eigenvalues().cwiseSqrt().cwiseInverse();
    return HermMatrix(CMatrix(eig.eigenvectors() * s.cast<Complex>().asDiagonal() *
                              eig.eigenvectors().adjoint()));
  }();
  std::vector<HermMatrix> effects;
  for (const CMatrix& w : raw) {
    effects.push_back(HermMatrix(CMatrix(inv_sqrt.matrix() * w * inv_sqrt.matrix())));
  }
  return Povm(std::move(effects));
}

HermMatrix random_density_matrix(int d, std::mt19937_64& rng) {
  const CMatrix g = gaussian_matrix(d, d, rng);
  const CMatrix w = g * g.adjoint();
  return HermMatrix(CMatrix(w / w.trace().real()));
}

HermMatrix random_hermitian(int d, std::mt19937_64& rng) {
  return HermMatrix(gaussian_matrix(d, d, rng));
}

}  // namespace steer
