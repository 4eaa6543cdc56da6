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

#ifndef STEER_CONIC_HPP_
#define STEER_CONIC_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "steer/linalg.hpp"

namespace steer::conic {

// Semidefinite program in block-diagonal standard form:
//
//   primal:  maximize tr(C X)  s.t.  tr(A_i X) = b_i,  X >= 0
//   dual:    minimize b'y      s.t.  Z = sum_i y_i A_i - C >= 0
//
// X, Z, C and every A_i share a block structure of real symmetric blocks.
// A_i and C are given entry by entry; an entry (row, col) with row != col
// stands for both symmetric positions.
class Problem {
 public:
  struct Entry {
    int constraint;  // -1 for the objective C
    int block;
    int row;
    int col;
    double value;
  };

  int add_block(int size);
  int add_constraint(double rhs);
  void set_rhs(int constraint, double rhs);

  // A_constraint[block](row, col) += value (and the mirrored position).
  void add_entry(int constraint, int block, int row, int col, double value);
  // C[block](row, col) += value (and the mirrored position).
  void add_objective_entry(int block, int row, int col, double value);
  // Adds value * M for a dense symmetric M (upper triangle is read).
  void add_dense(int constraint, int block, const RMatrix& m, double value = 1.0);
  void add_objective_dense(int block, const RMatrix& m, double value = 1.0);

  int num_blocks() const { return static_cast<int>(block_sizes_.size()); }
  int num_constraints() const { return static_cast<int>(rhs_.size()); }
  const std::vector<int>& block_sizes() const { return block_sizes_; }
  const std::vector<double>& rhs() const { return rhs_; }
  const std::vector<Entry>& entries() const { return entries_; }
  int total_dimension() const;

 private:
  void check(int constraint, int block, int row, int col) const;

  std::vector<int> block_sizes_;
  std::vector<double> rhs_;
  std::vector<Entry> entries_;
};

struct Settings {
  // Relative primal/dual infeasibility and relative duality gap at exit.
  double tolerance = 1e-9;
  int max_iterations = 100;
  // Fraction of the distance to the cone boundary taken per step.
  double step_fraction = 0.95;
};

enum class Status { kOptimal, kInfeasible, kInaccurate };

std::string_view to_string(Status status);

struct Solution {
  Status status = Status::kInaccurate;
  std::vector<RMatrix> primal;  // X blocks
  std::vector<RMatrix> slack;   // Z blocks
  RVector dual;                 // y
  double primal_objective = 0.0;  // tr(C X)
  double dual_objective = 0.0;    // b'y
  double primal_infeasibility = 0.0;
  double dual_infeasibility = 0.0;
  int iterations = 0;
  std::string message;

  double gap() const { return dual_objective - primal_objective; }
};

// Contract for conic engines: reentrant, deterministic for fixed settings.
class Solver {
 public:
  virtual ~Solver() = default;
  virtual std::string name() const = 0;
  virtual Solution solve(const Problem& problem, const Settings& settings) const = 0;
};

// Infeasible-start primal-dual path following method (HKM search direction,
// Mehrotra predictor-corrector).
class InteriorPointSolver final : public Solver {
 public:
  std::string name() const override { return "ipm"; }
  Solution solve(const Problem& problem, const Settings& settings) const override;
};

// Looks up an engine by name; throws Error for unknown names.
std::unique_ptr<Solver> make_solver(std::string_view name);

// Engine selected by the STEER_SOLVER environment variable (default "ipm").
const Solver& default_solver();

}  // namespace steer::conic

#endif  // STEER_CONIC_HPP_
