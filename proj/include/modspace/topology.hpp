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
#include <string>
#include <vector>

#include "modspace/matrix.hpp"
#include "modspace/modular.hpp"
#include "modspace/report.hpp"

namespace modspace {

/// {z : w(lambda, center, z) < mu}. mu may be +inf.
struct Ball {
  std::size_t center = 0;
  double lambda = 0.0;
  double mu = 0.0;
  std::vector<std::size_t> members;
};

Ball ball(const ModularFamily& w, double lambda, double mu, std::size_t x);

/// V_n = {(x, y) : w(1/n, x, y) < 1/n} as a dense symmetric adjacency.
class Entourage {
 public:
  Entourage(std::size_t n, std::size_t points) : n_(n), size_(points), adj_(points * points) {}

  std::size_t n() const { return n_; }
  std::size_t size() const { return size_; }
  bool contains(std::size_t x, std::size_t y) const { return adj_[x * size_ + y]; }
  void set(std::size_t x, std::size_t y, bool v) { adj_[x * size_ + y] = v; }
  std::size_t pair_count() const;

 private:
  std::size_t n_;
  std::size_t size_;
  std::vector<bool> adj_;
};

Entourage entourage(const ModularFamily& w, std::size_t n);

/// Exhaustive check of V_{2n} o V_{2n} subset V_n; the witness is the path
/// (x, z, y) with both hops in V_{2n} and (x, y) outside V_n.
DiagnosticReport composition_check(const ModularFamily& w, std::size_t n);

struct Metrization {
  /// min{2^-n : (x,y) in V_n, n <= n_max}, 1 outside V_1. The diagonal holds
  /// 2^-n_max, which is also the matrix resolution.
  DistanceMatrix raw;
  /// Shortest-path closure of `raw` with a zero diagonal: a pseudometric.
  DistanceMatrix chained;
  std::size_t n_max = 0;
};

Metrization metrize_uniformity(const ModularFamily& w, std::size_t n_max);

enum class Direction { kARefinesB, kBRefinesA, kMutual, kNeither };
std::string to_string(Direction d);

struct RefinementWitness {
  /// "A_refines_B" or "B_refines_A": the inclusion that failed.
  std::string inclusion;
  std::size_t point = 0;
  /// Radius of the target ball no source ball fits into.
  double radius = 0.0;
};

struct RefinementVerdict {
  Direction direction = Direction::kMutual;
  std::vector<RefinementWitness> witnesses;
};

/// Ball-level comparison at the given radii. "A refines B" means every
/// admissible B-ball around x contains some admissible A-ball around x.
/// A radius is admissible for a matrix when it exceeds that matrix's
/// resolution; entries at or below the resolution count as 0.
RefinementVerdict refinement_compare(const DistanceMatrix& a, const DistanceMatrix& b,
                                     const std::vector<double>& radii);

struct Delta2Sequence {
  std::vector<std::size_t> points;
  std::size_t limit = 0;
};

/// Falsification-only probe of the Delta_2 condition. For each sequence and
/// lambda, the premise holds when w(lambda, x_k, x) <= tol for every k from
/// some K < horizon on; the conclusion then requires w(lambda/2, x_k, x) <= tol
/// for every k from some K' <= L - horizon on (L = trace length). Traces
/// must have length >= 2 horizon. Inconclusive when no premise held.
DiagnosticReport delta2_diagnostic(const ModularFamily& w,
                                   const std::vector<Delta2Sequence>& sequences,
                                   const std::vector<double>& lambdas, std::size_t horizon,
                                   double tol);

/// M(x, y, t) = t / (t + d(x, y)); 0 where d is infinite.
SquareMatrix fuzzy_from_metric(const DistanceMatrix& d, double t);

/// {y : M(x, y) > 1 - r} for the matrix M at a fixed t, 0 < r < 1.
std::vector<std::size_t> fuzzy_ball(const SquareMatrix& m, std::size_t x, double r);

struct FuzzyComparison {
  RefinementVerdict verdict;
  std::size_t balls_checked = 0;
  /// Fuzzy balls differing from the metric ball of radius t r / (1 - r).
  std::size_t identity_mismatches = 0;
};

/// Compares fuzzy balls B(x, r, t) over ts x rs with metric balls of d at the
/// radii t r / (1 - r).
FuzzyComparison fuzzy_refinement(const DistanceMatrix& d, const std::vector<double>& ts,
                                 const std::vector<double>& rs);

struct AdequacyDefect {
  double defect = 0.0;
  std::size_t x1 = 0;
  std::size_t x2 = 0;
};

/// max over ordered pairs of d(x1, x2) - max_{a in A} (d(a, x2) - d(a, x1)).
AdequacyDefect adequacy_defect(const DistanceMatrix& d, const std::vector<std::size_t>& anchors);

}  // namespace modspace
