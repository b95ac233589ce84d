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
#include <span>
#include <string>

#include "modspace/matrix.hpp"
#include "modspace/modular.hpp"
#include "modspace/monotone_search.hpp"
#include "modspace/orlicz.hpp"
#include "modspace/phi.hpp"
#include "modspace/report.hpp"

namespace modspace {

/// d0(x,y) = inf{lambda : w(lambda,x,y) <= lambda}.
///
/// w must be nonincreasing in lambda; this is spot-checked on a log grid of
/// the bracket before searching. When w(floor) = 0 the infimum is reported
/// as exactly 0 (the true infimum lies below every admissible floor).
GaugeResult d0(const ModularFamily& w, std::size_t i, std::size_t j,
               const SearchOptions& opts = {});

/// d*(x,y) = inf{lambda : w(lambda,x,y) <= 1}.
GaugeResult dstar(const ModularFamily& w, std::size_t i, std::size_t j,
                  const SearchOptions& opts = {});

/// inf{lambda : w(lambda,x,y) <= phi(lambda)}.
GaugeResult d0_phi(const ModularFamily& w, const PhiFunction& phi, std::size_t i, std::size_t j,
                   const SearchOptions& opts = {});

/// inf_lambda (lambda + phi^{-1}(w(lambda,x,y))).
///
/// Minimizes over the grid, then runs one golden-section pass between the
/// neighbours of the grid argmin. The refinement is local: for objectives
/// that are not unimodal the result is an upper bound on the true infimum.
GaugeResult d1_phi(const ModularFamily& w, const PhiFunction& phi, std::size_t i, std::size_t j,
                   const LambdaGrid& grid);
GaugeResult d1_phi(const ModularFamily& w, const PhiFunction& phi, std::size_t i, std::size_t j);

/// Luxemburg gauge inf{lambda : rho(u/lambda) <= 1}.
GaugeResult luxemburg(const orlicz::OrliczModular& rho, std::span<const double> u,
                      const SearchOptions& opts = {});

enum class GaugeKind { kD0, kDstar, kD0Phi, kD1Phi };

std::string to_string(GaugeKind kind);
GaugeKind gauge_kind_from_string(const std::string& s);

struct GaugeParams {
  SearchOptions search;
  std::optional<PhiFunction> phi;
  std::optional<LambdaGrid> d1_grid;
};

struct GaugeMatrix {
  DistanceMatrix matrix;
  /// Pseudometric validation of the assembled matrix. A triangle violation
  /// here means the engine tolerance is too coarse.
  DiagnosticReport validation;
};

/// Full pairwise gauge matrix. Engine errors are rethrown annotated with
/// the (i, j) pair.
GaugeMatrix gauge_matrix(const ModularFamily& w, GaugeKind kind, const GaugeParams& params = {});

/// Entrywise check of min{d*, sqrt d*} - tol <= d0 <= max{d*, sqrt d*} + tol.
DiagnosticReport check_sandwich(const DistanceMatrix& d0_matrix,
                                const DistanceMatrix& dstar_matrix, double tol);

}  // namespace modspace
