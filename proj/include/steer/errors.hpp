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

#ifndef STEER_ERRORS_HPP_
#define STEER_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace steer {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix or tensor dimensions do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// A matrix expected to be positive semidefinite has a significantly negative
// eigenvalue.
class NotPsdError : public Error {
 public:
  NotPsdError(const std::string& what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const { return eigenvalue_; }

 private:
  double eigenvalue_;
};

// Argument outside the mathematical domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input data violates a structural invariant (POVM normalization, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// The requested object cannot be constructed (e.g. too many MUBs).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// Problem too large for the strategy enumeration cap.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, long long requested, long long cap)
      : Error(what), requested_(requested), cap_(cap) {}
  long long requested() const { return requested_; }
  long long cap() const { return cap_; }

 private:
  long long requested_;
  long long cap_;
};

// Numerical routine failed to converge.
class SolverError : public Error {
 public:
  SolverError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// A construction produced an object that fails its own invariants.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace steer

#endif  // STEER_ERRORS_HPP_
