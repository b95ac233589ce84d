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
#include <string>
#include <vector>

#include "modspace/compactness.hpp"
#include "modspace/monotone_search.hpp"
#include "modspace/orlicz.hpp"
#include "modspace/report.hpp"

namespace modspace::orlicz {

struct KrOptions {
  /// Strictly decreasing; tightness and EMC run at the first entry.
  std::vector<double> eps_ladder;
  /// Each partition must refine the previous one; the last is used for the
  /// net stage.
  std::vector<Partition> partitions;
  LambdaGrid lambda_grid = LambdaGrid::log_spaced(1e-4, 1e4, 48);
  /// EMC mass budget; defaults to eps_ladder[0] * total mass (capped below
  /// the total mass).
  std::optional<double> emc_delta;
  SearchOptions search;
  /// Tolerance of the Jensen and subadditivity contracts.
  double contract_tol = 1e-9;
};

struct PartitionStage {
  std::size_t blocks = 0;
  std::size_t max_extent = 0;
  double jensen_lhs = 0.0;  // max_u rho((u - Pu)/Lambda)
  double jensen_rhs = 0.0;  // max_u of the double-average bound
  bool jensen_ok = true;
  double projection_error = 0.0;  // max_u |u - Pu|_rho
  double translation = 0.0;       // max_u translation modulus at |y| = extent, scale Lambda
};

struct NetStage {
  double epsilon = 0.0;
  bool ok = false;
  NetCover projected;  // eps-net of P[A] under d*; centers are family rows
  double cover_radius = 0.0;  // max_u min_c |u - P c|_rho
  NetCover family;            // eps-net of A itself under d*
  bool saturated = false;     // every row of A is its own center
};

struct KrResult {
  DiagnosticReport report;
  TightnessResult tightness;
  EmcResult emc;
  double lambda_total = 0.0;  // lambda_T + lambda_C
  std::optional<double> bounded_lambda;
  std::vector<PartitionStage> partitions;
  std::vector<NetStage> nets;
};

/// Desk-scale run of the compactness pipeline: tightness, EMC, Jensen bound
/// per partition, sampled split-scale subadditivity, then d*-nets of the
/// projected family for each eps of the ladder. A net stage passes when the
/// projection error is at most eps, so every u lies within 2 eps of a net
/// element. The report fails at the first failing stage; a failed net stage
/// whose family net is saturated is labelled non-compact evidence.
KrResult kr_compactness(const FunctionFamily& family, const Integrand& phi,
                        const DiscreteMeasureSpace& omega, const KrOptions& opts);

/// Pairwise d* = Luxemburg distance between rows.
DistanceMatrix dstar_matrix(const FunctionFamily& family, const OrliczModular& rho,
                            const SearchOptions& search = {});

}  // namespace modspace::orlicz
