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

#include "modspace/matrix.hpp"
#include "modspace/modular.hpp"
#include "modspace/monotone_search.hpp"
#include "modspace/report.hpp"

namespace modspace {

/// A truncated sequence of point indices.
struct SequenceTrace {
  std::vector<std::size_t> points;
  std::optional<std::size_t> claimed_limit;
};

/// A Cauchy condition is accepted at level n when it holds on the tail from
/// some N <= L - min_tail; min_tail = 0 selects ceil(L / 2). Requiring a long
/// tail keeps the one-element tail from certifying every trace.
struct CauchyOptions {
  std::size_t n_max = 8;
  std::size_t min_tail = 0;
};

/// For each n <= n_max, the smallest tail start N with every tail pair in
/// V_n (metrics "N_<n>"); fails at the first n where N is too late, with the
/// latest offending pair (k, l) as witness.
DiagnosticReport is_v_cauchy(const SequenceTrace& seq, const ModularFamily& w,
                             const CauchyOptions& opts = {});

/// V-, d0- and d*-Cauchy classification at thresholds 1/n. Metrics
/// "v_cauchy", "d0_cauchy", "dstar_cauchy" hold the booleans; the report
/// fails when they disagree. Requires w to claim convexity.
DiagnosticReport cauchy_equivalence(const SequenceTrace& seq, const ModularFamily& w,
                                    const CauchyOptions& opts = {},
                                    const SearchOptions& search = {});

struct NetCover {
  double epsilon = 0.0;
  std::vector<std::size_t> centers;
  /// (point, center) for every covered point, ascending by point.
  std::vector<std::pair<std::size_t, std::size_t>> assignment;
};

/// Greedy farthest-point eps-net over `subset` (all points when empty),
/// starting from the first subset point; ties go to the lowest index. Every
/// point ends strictly closer than eps to its assigned center. Centers are
/// pairwise at least eps apart, so their count never exceeds the covering
/// number at radius eps/2.
NetCover epsilon_net(const DistanceMatrix& metric, double epsilon,
                     const std::vector<std::size_t>& subset = {});

struct Subsequence {
  /// Trace positions retained after the last completed level.
  std::vector<std::size_t> positions;
  std::size_t levels_completed = 0;
  bool partial = false;
};

/// Nested refinement: at level eps_k, builds an eps_k/2-net of the currently
/// retained points and keeps the positions assigned to the most populated
/// center, so the retained set has diameter < eps_k. Stops with `partial`
/// when fewer than two positions would remain.
Subsequence cauchy_subsequence(const SequenceTrace& seq, const DistanceMatrix& metric,
                               const std::vector<double>& levels);

struct CompactnessOptions {
  /// Points making up the space under test (all when empty).
  std::vector<std::size_t> subset;
  /// Increasing prefix sizes of `subset` at which net sizes are recorded;
  /// a net that keeps every sampled point at every size flags growth.
  std::vector<std::size_t> sample_sizes;
  double limit_tol = 1e-8;
  std::size_t min_tail = 0;
};

/// Desk-scale compactness evidence: eps-net sizes (precompactness) and a
/// limit search for each trace over the subset (completeness), minimizing
/// the sup-distance over the trace tail.
DiagnosticReport compactness_verdict(const DistanceMatrix& metric,
                                     const std::vector<double>& epsilons,
                                     const std::vector<SequenceTrace>& traces,
                                     const CompactnessOptions& opts = {});

}  // namespace modspace
