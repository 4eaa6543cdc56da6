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

#include "steer/parent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "steer/bounds.hpp"
#include "steer/errors.hpp"

namespace steer {

namespace {

// An intermediate measurement together with the child outcomes each of its
// effects stands for.
struct Node {
  std::vector<int> settings;
  std::vector<std::vector<int>> labels;  // per effect, outcome per setting
  std::vector<HermMatrix> effects;
};

// In direct mode intermediate parents need not stay PSD. The root of the
// positive part is used and verify_parent reports the violation.
HermMatrix effect_sqrt(const HermMatrix& effect) {
  return psd_sqrt(effect, std::numeric_limits<double>::infinity());
}

HermMatrix sandwich(const HermMatrix& outer, const HermMatrix& inner) {
  return HermMatrix(outer.matrix() * inner.matrix() * outer.matrix());
}

// Pair formula normalized by 2 + 2 sqrt(n); effect (a, b) at index a * |B| + b.
// The normalization identity is enforced only when `strict` is set, i.e. for
// rank-one children; otherwise the final verification reports it.
std::vector<HermMatrix> pair_effects(const std::vector<HermMatrix>& a,
                                     const std::vector<HermMatrix>& b, bool strict) {
  const int n = a.front().dim();
  const double root = std::sqrt(static_cast<double>(n));
  std::vector<HermMatrix> sqrt_a;
  std::vector<HermMatrix> sqrt_b;
  for (const auto& e : a) sqrt_a.push_back(effect_sqrt(e));
  for (const auto& e : b) sqrt_b.push_back(effect_sqrt(e));

  std::vector<HermMatrix> out;
  out.reserve(a.size() * b.size());
  HermMatrix total = HermMatrix::zero(n);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      const CMatrix& ma = a[i].matrix();
      const CMatrix& mb = b[j].matrix();
      HermMatrix g(ma * mb + mb * ma);
      g = g + (b[j].trace() * a[i] + a[i].trace() * b[j]) / (2.0 * root);
      g = g + (root / 2.0) * (sandwich(sqrt_a[i], b[j]) + sandwich(sqrt_b[j], a[i]));
      total = total + g;
      out.push_back(std::move(g));
    }
  }
  const double norm = 2.0 + 2.0 * root;
  const double deviation = max_abs_diff(total, HermMatrix::identity(n) * norm);
  if (strict && deviation > 1e-8 * norm) {
    std::ostringstream msg;
    msg << "pair parent effects sum to the identity times " << norm << " only up to "
        << deviation;
    throw InternalConsistencyError(msg.str());
  }
  for (auto& g : out) g = g / norm;
  return out;
}

Node leaf(const MeasurementSet& measurements, int x) {
  Node node;
  node.settings = {x};
  for (int a = 0; a < measurements.num_outcomes(); ++a) {
    node.labels.push_back({a});
    node.effects.push_back(measurements.effect(a, x));
  }
  return node;
}

// Splits every effect into rank-one eigen-pieces; owner[i] is the effect the
// i-th piece came from.
std::vector<HermMatrix> rank_one_pieces(const std::vector<HermMatrix>& effects,
                                        std::vector<int>& owner) {
  std::vector<HermMatrix> pieces;
  owner.clear();
  for (std::size_t e = 0; e < effects.size(); ++e) {
    const EigenDecomposition eig = herm_eig(effects[e]);
    const int n = effects[e].dim();
    const double scale = eig.values.cwiseAbs().maxCoeff();
    const double floor = 16.0 * std::numeric_limits<double>::epsilon() * n * scale;
    for (int i = 0; i < n; ++i) {
      if (eig.values(i) <= floor) continue;
      const CVector v = eig.vectors.col(i);
      pieces.push_back(eig.values(i) * HermMatrix::projector(v));
      owner.push_back(static_cast<int>(e));
    }
  }
  return pieces;
}

// Pairs refined children and coarse-grains the result back onto the
// original outcomes of each child.
std::vector<HermMatrix> refined_pair_effects(const std::vector<HermMatrix>& a,
                                             const std::vector<HermMatrix>& b) {
  std::vector<int> owner_a;
  std::vector<int> owner_b;
  const std::vector<HermMatrix> pieces_a = rank_one_pieces(a, owner_a);
  const std::vector<HermMatrix> pieces_b = rank_one_pieces(b, owner_b);
  const std::vector<HermMatrix> fine = pair_effects(pieces_a, pieces_b, true);
  const int n = a.front().dim();
  std::vector<HermMatrix> out(a.size() * b.size(), HermMatrix::zero(n));
  for (std::size_t i = 0; i < pieces_a.size(); ++i) {
    for (std::size_t j = 0; j < pieces_b.size(); ++j) {
      HermMatrix& target = out[owner_a[i] * b.size() + owner_b[j]];
      target = target + fine[i * pieces_b.size() + j];
    }
  }
  return out;
}

Node combine(const Node& left, const Node& right, IntermediateMode mode) {
  Node node;
  node.settings = left.settings;
  node.settings.insert(node.settings.end(), right.settings.begin(), right.settings.end());
  const bool leaves = left.settings.size() == 1 && right.settings.size() == 1;
  if (leaves) {
    node.effects = pair_effects(left.effects, right.effects, true);
  } else if (mode == IntermediateMode::kRankOneRefinement) {
    node.effects = refined_pair_effects(left.effects, right.effects);
  } else {
    node.effects = pair_effects(left.effects, right.effects, false);
  }
  for (const auto& l : left.labels) {
    for (const auto& r : right.labels) {
      std::vector<int> label = l;
      label.insert(label.end(), r.begin(), r.end());
      node.labels.push_back(std::move(label));
    }
  }
  return node;
}

// Reorders the effects of a node covering every setting onto the
// lexicographic outcome grid.
ParentMeasurement flatten(const Node& node, int outcomes, double eta) {
  const int k = static_cast<int>(node.settings.size());
  const int n = node.effects.front().dim();
  long long size = 1;
  for (int x = 0; x < k; ++x) size *= outcomes;

  ParentMeasurement parent;
  parent.dim = n;
  parent.settings = k;
  parent.outcomes = outcomes;
  parent.eta_guarantee = eta;
  parent.elements.assign(size, HermMatrix::zero(n));
  parent.labels.assign(size, std::vector<int>(k, 0));
  for (long long j = 0; j < size; ++j) {
    long long rest = j;
    for (int x = k - 1; x >= 0; --x) {
      parent.labels[j][x] = static_cast<int>(rest % outcomes);
      rest /= outcomes;
    }
  }
  for (std::size_t e = 0; e < node.effects.size(); ++e) {
    long long index = 0;
    std::vector<int> by_setting(k);
    for (int pos = 0; pos < k; ++pos) by_setting[node.settings[pos]] = node.labels[e][pos];
    for (int x = 0; x < k; ++x) index = index * outcomes + by_setting[x];
    parent.elements[index] = parent.elements[index] + node.effects[e];
  }
  return parent;
}

void require_rank_one(const MeasurementSet& measurements) {
  for (int x = 0; x < measurements.num_settings(); ++x) {
    if (!is_rank_one(measurements[x])) {
      throw ValidationError("parent construction needs rank-one effects; setting " +
                            std::to_string(x) + " is not rank-one");
    }
  }
}

}  // namespace

bool is_rank_one(const Povm& povm, double tolerance) {
  for (const auto& effect : povm.outcomes()) {
    const auto eig = herm_eig(effect);
    const int n = effect.dim();
    for (int i = 0; i + 1 < n; ++i) {
      if (eig.values(i) > tolerance) return false;
    }
  }
  return true;
}

ParentMeasurement parent_pair_rank1(const Povm& a, const Povm& b) {
  if (a.dim() != b.dim()) throw ShapeError("parent_pair_rank1: dimension mismatch");
  if (a.num_outcomes() != b.num_outcomes()) {
    throw ShapeError("parent_pair_rank1: outcome counts differ");
  }
  const MeasurementSet pair({a, b});
  require_rank_one(pair);
  const Node node = combine(leaf(pair, 0), leaf(pair, 1), IntermediateMode::kRankOneRefinement);
  return flatten(node, a.num_outcomes(), h_pair(a.dim()));
}

double operator_inequality_check(const Povm& a, const Povm& b) {
  if (a.dim() != b.dim()) throw ShapeError("operator_inequality_check: dimension mismatch");
  const int n = a.dim();
  std::vector<HermMatrix> sqrt_b;
  for (const auto& e : b.outcomes()) sqrt_b.push_back(effect_sqrt(e));
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& effect : a.outcomes()) {
    HermMatrix sum = HermMatrix::zero(n);
    for (const auto& root : sqrt_b) sum = sum + sandwich(root, effect);
    worst = std::min(worst, min_eig(sum - effect / static_cast<double>(n)));
  }
  return worst;
}

ParentVerdict verify_parent(const ParentMeasurement& parent, const MeasurementSet& measurements,
                            double eta, double slack_tolerance) {
  const int k = measurements.num_settings();
  const int o = measurements.num_outcomes();
  const int n = measurements.dim();
  if (parent.settings != k || parent.outcomes != o || parent.dim != n) {
    throw ShapeError("verify_parent: parent grid does not match the measurements");
  }
  ParentVerdict verdict;
  verdict.positivity_slack = std::numeric_limits<double>::infinity();
  verdict.marginal_slack = std::numeric_limits<double>::infinity();
  HermMatrix total = HermMatrix::zero(n);
  for (const auto& g : parent.elements) {
    verdict.positivity_slack = std::min(verdict.positivity_slack, min_eig(g));
    total = total + g;
  }
  verdict.normalization_error = max_abs_diff(total, HermMatrix::identity(n));

  std::vector<std::vector<HermMatrix>> marginals(k, std::vector<HermMatrix>(o, HermMatrix::zero(n)));
  for (std::size_t j = 0; j < parent.elements.size(); ++j) {
    for (int x = 0; x < k; ++x) {
      auto& m = marginals[x][parent.labels[j][x]];
      m = m + parent.elements[j];
    }
  }
  for (int x = 0; x < k; ++x) {
    for (int a = 0; a < o; ++a) {
      const double slack = min_eig(marginals[x][a] - eta * measurements.effect(a, x));
      if (slack < verdict.marginal_slack) {
        verdict.marginal_slack = slack;
        verdict.worst_setting = x;
        verdict.worst_outcome = a;
      }
    }
  }
  verdict.worst_slack = std::min(verdict.marginal_slack, verdict.positivity_slack);
  verdict.pass = verdict.positivity_slack >= -tol::kFeasibility &&
                 verdict.normalization_error <= tol::kFeasibility &&
                 verdict.marginal_slack >= -slack_tolerance;
  return verdict;
}

RecursiveParent parent_recursive(const MeasurementSet& measurements, IntermediateMode mode) {
  const int k = measurements.num_settings();
  const int n = measurements.dim();
  const int o = measurements.num_outcomes();
  if (k < 2) throw DomainError("parent_recursive: need at least two settings");
  require_rank_one(measurements);

  RecursiveParent result;
  result.eta_guarantee = h_recursive(k, n);
  int r = 0;
  while ((2 << r) <= k) ++r;
  const int l = k - (1 << r);
  const double term_eta = std::pow(h_pair(n), l > 0 ? r + 1 : r);

  const int shifts = k == 2 ? 1 : k;
  for (int s = 0; s < shifts; ++s) {
    std::vector<Node> level;
    for (int i = 0; i < 2 * l; i += 2) {
      level.push_back(combine(leaf(measurements, (s + i) % k), leaf(measurements, (s + i + 1) % k),
                            mode));
    }
    for (int i = 2 * l; i < k; ++i) level.push_back(leaf(measurements, (s + i) % k));
    while (level.size() > 1) {
      std::vector<Node> next;
      for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
        next.push_back(combine(level[i], level[i + 1], mode));
      }
      level = std::move(next);
    }
    result.terms.push_back(flatten(level.front(), o, term_eta));
  }

  result.averaged = result.terms.front();
  result.averaged.eta_guarantee = result.eta_guarantee;
  for (std::size_t j = 0; j < result.averaged.elements.size(); ++j) {
    HermMatrix sum = HermMatrix::zero(n);
    for (const auto& term : result.terms) sum = sum + term.elements[j];
    result.averaged.elements[j] = sum / static_cast<double>(result.terms.size());
  }

  result.verdict = verify_parent(result.averaged, measurements, result.eta_guarantee);
  if (!result.verdict.pass) {
    std::ostringstream report;
    report << "averaged parent fails at eta = " << result.eta_guarantee << " (k = " << k
           << ", n = " << n << "): marginal slack " << result.verdict.marginal_slack
           << " at setting " << result.verdict.worst_setting << ", outcome "
           << result.verdict.worst_outcome << "; positivity slack "
           << result.verdict.positivity_slack << "; normalization error "
           << result.verdict.normalization_error;
    result.report = report.str();
  }
  return result;
}

}  // namespace steer
