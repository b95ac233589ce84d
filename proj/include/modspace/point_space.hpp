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

#include "modspace/matrix.hpp"
#include "modspace/report.hpp"
#include "modspace/xreal.hpp"

namespace modspace {

inline constexpr double kTolMetric = 1e-9;

enum class TriangleCheck { kEnforce, kSkip };

/// Finite ground set, optionally carrying a base distance matrix.
///
/// A distance matrix, when present, is always required to be symmetric with
/// zero diagonal and nonnegative entries. The triangle inequality is enforced
/// unless the caller passes TriangleCheck::kSkip, which exists so that axiom
/// checkers can be fed deliberately broken inputs.
class PointSpace {
 public:
  PointSpace() = default;
  explicit PointSpace(std::vector<std::string> labels);
  PointSpace(std::vector<std::string> labels, SquareMatrix distance,
             TriangleCheck triangle = TriangleCheck::kEnforce, double tol_metric = kTolMetric);

  /// Labels default to "p0", "p1", ...
  static PointSpace from_distance(SquareMatrix distance,
                                  TriangleCheck triangle = TriangleCheck::kEnforce);
  static PointSpace unlabeled(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  bool has_distance() const { return distance_.has_value(); }
  XReal distance(std::size_t i, std::size_t j) const;
  const SquareMatrix& distance_matrix() const;

  void check_index(std::size_t i) const;

 private:
  std::vector<std::string> labels_;
  std::optional<SquareMatrix> distance_;
};

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix = "p");

/// Validates the pseudometric axioms (zero diagonal, symmetry, triangle
/// inequality within tol). Zero off-diagonal entries are permitted.
DiagnosticReport validate_pseudometric(const SquareMatrix& m, double tol = kTolMetric);

}  // namespace modspace
