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

#include "steer/galois.hpp"

#include <sstream>

#include "steer/errors.hpp"

namespace steer {
namespace {

std::vector<int> digits(int value, int p, int r) {
  std::vector<int> out(r, 0);
  for (int i = 0; i < r; ++i) {
    out[i] = value % p;
    value /= p;
  }
  return out;
}

int encode(const std::vector<int>& coeffs, int p) {
  int value = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    value = value * p + coeffs[i];
  }
  return value;
}

// Product of two residues modulo the monic polynomial `modulus` of degree r.
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& modulus, int p) {
  const int r = static_cast<int>(modulus.size()) - 1;
  std::vector<int> prod(2 * r, 0);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (int deg = 2 * r - 1; deg >= r; --deg) {
    const int c = prod[deg];
    if (c == 0) continue;
    for (int i = 0; i <= r; ++i) {
      prod[deg - r + i] = ((prod[deg - r + i] - c * modulus[i]) % p + p) % p;
    }
  }
  prod.resize(r);
  return prod;
}

// A monic polynomial of degree r over GF(p) is irreducible iff it has no
// monic factor of degree 1..r/2; brute force is fine for the tiny fields used.
bool is_irreducible(const std::vector<int>& poly, int p) {
  const int r = static_cast<int>(poly.size()) - 1;
  for (int deg = 1; deg <= r / 2; ++deg) {
    int count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      std::vector<int> divisor = digits(low, p, deg);
      divisor.push_back(1);
      std::vector<int> rem = poly;
      for (int top = r; top >= deg; --top) {
        const int c = rem[top];
        if (c == 0) continue;
        for (int i = 0; i <= deg; ++i) {
          rem[top - deg + i] = ((rem[top - deg + i] - c * divisor[i]) % p + p) % p;
        }
      }
      bool zero = true;
      for (int i = 0; i < deg; ++i) zero = zero && rem[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

PrimePower factor_prime_power(int d) {
  if (d < 2) return {};
  int p = 2;
  while (d % p != 0) ++p;
  int r = 0;
  int rest = d;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  if (rest != 1) return {};
  return {p, r};
}

GaloisField::GaloisField(int prime, int exponent) : p_(prime), r_(exponent) {
  const PrimePower check = factor_prime_power(prime);
  if (check.prime != prime || check.exponent != 1 || exponent < 1) {
    std::ostringstream msg;
    msg << "GaloisField(" << prime << ", " << exponent << "): need a prime and r >= 1";
    throw DomainError(msg.str());
  }
  q_ = 1;
  for (int i = 0; i < r_; ++i) q_ *= p_;

  // First monic irreducible polynomial in encoding order.
  for (int low = 0; low < q_; ++low) {
    std::vector<int> candidate = digits(low, p_, r_);
    candidate.push_back(1);
    if (r_ == 1 || (candidate[0] != 0 && is_irreducible(candidate, p_))) {
      modulus_ = candidate;
      break;
    }
  }

  add_.assign(static_cast<size_t>(q_) * q_, 0);
  mul_.assign(static_cast<size_t>(q_) * q_, 0);
  for (int a = 0; a < q_; ++a) {
    const std::vector<int> da = digits(a, p_, r_);
    for (int b = 0; b < q_; ++b) {
      const std::vector<int> db = digits(b, p_, r_);
      std::vector<int> sum(r_);
      for (int i = 0; i < r_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = encode(sum, p_);
      mul_[a * q_ + b] = encode(poly_mulmod(da, db, modulus_, p_), p_);
    }
  }

  trace_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    int total = 0;
    int power = a;
    for (int i = 0; i < r_; ++i) {
      total = add(total, power);
      int next = 1;
      for (int j = 0; j < p_; ++j) next = mul(next, power);
      power = next;
    }
    // The trace lies in the prime subfield, i.e. is a constant polynomial.
    if (total >= p_) throw InternalConsistencyError("GaloisField: trace left the prime field");
    trace_[a] = total;
  }
}

}  // namespace steer
