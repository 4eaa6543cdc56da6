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

#ifndef STEER_GALOIS_HPP_
#define STEER_GALOIS_HPP_

#include <vector>

namespace steer {

// Finite field GF(p^r) with precomputed addition, multiplication and trace
// tables. Elements are encoded as integers 0..q-1 whose base-p digits are
// the coefficients of a polynomial in the generator (digit i <-> x^i).
class GaloisField {
 public:
  GaloisField(int prime, int exponent);

  int characteristic() const { return p_; }
  int exponent() const { return r_; }
  int order() const { return q_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  // Absolute trace a + a^p + ... + a^(p^(r-1)), an element of the prime
  // subfield returned as an integer in [0, p).
  int trace(int a) const { return trace_[a]; }
  // Coefficients (lowest degree first) of the monic modulus polynomial.
  const std::vector<int>& modulus() const { return modulus_; }

 private:
  int p_;
  int r_;
  int q_;
  std::vector<int> modulus_;
  std::vector<int> add_;
  std::vector<int> mul_;
  std::vector<int> trace_;
};

// Returns (p, r) with d = p^r, or (0, 0) if d is not a prime power.
struct PrimePower {
  int prime = 0;
  int exponent = 0;
};
PrimePower factor_prime_power(int d);

}  // namespace steer

#endif  // STEER_GALOIS_HPP_
