// Copyright 2026 The modspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "modspace/modular.hpp"
#include "modspace/monotone_search.hpp"
#include "modspace/phi.hpp"
#include "modspace/report.hpp"

namespace modspace {

/// Checks w(l,x,x) = 0, symmetry and w(l+m,x,y) <= w(l,x,z) + w(m,z,y) + tol
/// for every triple of points and every pair (l, m) drawn from the grid.
/// Satisfaction is certified at grid resolution only; violations are exact.
/// The first violated triple is reported as the witness path (x, z, y).
DiagnosticReport check_modular_axioms(const ModularFamily& w, const LambdaGrid& grid,
                                      double tol = kTolMetric);

/// Sampled check of
///   w(phi(l+m), x, y) <= l/(l+m) w(phi(l), x, z) + m/(l+m) w(phi(m), z, y).
/// phi is validated (phi(0) = 0, nondecreasing, superadditive, positive on
/// the grid) first; a violation there throws PreconditionError.
DiagnosticReport check_phi_convexity(const ModularFamily& w, const PhiFunction& phi,
                                     const LambdaGrid& grid, double tol = kTolMetric);

struct Membership {
  bool member = false;
  std::optional<double> witness;
  /// Set when no grid lambda qualified: larger lambdas were not explored.
  bool inconclusive_beyond_cap = false;
};

/// Decides x in X*_w (relative to basepoint) at grid resolution: member when
/// some grid lambda gives w(lambda, x, basepoint) < inf, reporting the
/// smallest such lambda.
Membership modular_set_membership(const ModularFamily& w, std::size_t x, std::size_t basepoint,
                                  const LambdaGrid& grid);

enum class Side { kRight, kLeft };

struct Regularization {
  XReal value;
  bool monotone = true;
  std::vector<XReal> trace;
  std::vector<double> lambdas;
};

/// Approximates w_{+0} (right) or w_{-0} (left) at lambda by evaluating at
/// lambda (1 +- shrink^k), k = 1..steps, and returning the last value. The
/// evaluation sequence is checked for the monotonicity a nonincreasing family
/// must show; `monotone` is false otherwise.
Regularization regularize(const ModularFamily& w, Side side, double lambda, std::size_t i,
                          std::size_t j, std::size_t steps = 40, double shrink = 0.5,
                          double tol = kTolMetric);

/// Right inverse inf{l : w(l,i,j) <= mu} or left inverse sup{l : w(l,i,j) >= mu}
/// by monotone bisection on [bracket.floor, bracket.cap] (no cap expansion).
/// +inf with at_cap when even the cap does not qualify; floor with at_floor
/// when the floor already does. The family is checked to be nonincreasing on
/// the bracket values first (PreconditionError with the offending pair).
GaugeResult inverse_gauge(const ModularFamily& w, Side side, double mu, std::size_t i,
                          std::size_t j, const LambdaGrid& bracket, double tol = 1e-10);

/// Throws PreconditionError if lambda -> w(lambda, i, j) increases anywhere
/// along the given ascending lambdas (relative slack 1e-12).
void require_nonincreasing(const ModularFamily& w, std::size_t i, std::size_t j,
                           const std::vector<double>& lambdas);

}  // namespace modspace
