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

#include "modspace/point_space.hpp"

#include <cmath>
#include <stdexcept>

namespace modspace {

std::vector<std::string> default_labels(std::size_t n, const std::string& prefix) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

PointSpace::PointSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {}

PointSpace::PointSpace(std::vector<std::string> labels, SquareMatrix distance,
                       TriangleCheck triangle, double tol_metric)
    : labels_(std::move(labels)) {
  const std::size_t n = labels_.size();
  if (distance.size() != n) {
    throw std::invalid_argument("distance matrix is " + std::to_string(distance.size()) +
                                "x" + std::to_string(distance.size()) + " but there are " +
                                std::to_string(n) + " labels");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (distance(i, i) != 0.0) {
      throw std::invalid_argument("distance(" + labels_[i] + "," + labels_[i] + ") is not zero");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double d = distance(i, j);
      if (std::isnan(d) || d < 0.0) {
        throw std::invalid_argument("distance(" + labels_[i] + "," + labels_[j] +
                                    ") must be nonnegative");
      }
      if (d != distance(j, i)) {
        throw std::invalid_argument("distance matrix is not symmetric at (" + labels_[i] + "," +
                                    labels_[j] + ")");
      }
    }
  }
  if (triangle == TriangleCheck::kEnforce) {
    const DiagnosticReport r = validate_pseudometric(distance, tol_metric);
    if (r.failed()) throw std::invalid_argument("distance matrix: " + r.summary);
  }
  distance_ = std::move(distance);
}

PointSpace PointSpace::from_distance(SquareMatrix distance, TriangleCheck triangle) {
  auto labels = default_labels(distance.size());
  return PointSpace(std::move(labels), std::move(distance), triangle);
}

PointSpace PointSpace::unlabeled(std::size_t n) { return PointSpace(default_labels(n)); }

void PointSpace::check_index(std::size_t i) const {
  if (i >= size()) {
    throw std::out_of_range("point index " + std::to_string(i) + " out of range for space of " +
                            std::to_string(size()) + " points");
  }
}

XReal PointSpace::distance(std::size_t i, std::size_t j) const {
  return XReal(distance_matrix()(i, j));
}

const SquareMatrix& PointSpace::distance_matrix() const {
  if (!distance_) throw std::logic_error("point space has no base distance");
  return *distance_;
}

DiagnosticReport validate_pseudometric(const SquareMatrix& m, double tol) {
  DiagnosticReport report;
  report.check = "pseudometric";
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(m(i, i)) > tol) {
      report.fail(Witness{"diagonal", {i, i}, {{"value", m(i, i)}}, ""},
                  "nonzero diagonal at " + std::to_string(i));
      return report;
    }
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = m(i, j);
      const double b = m(j, i);
      const bool same = (std::isinf(a) && std::isinf(b)) || std::abs(a - b) <= tol;
      if (!same) {
        report.fail(Witness{"symmetry", {i, j}, {{"d_ij", a}, {"d_ji", b}}, ""},
                    "asymmetric entry at (" + std::to_string(i) + "," + std::to_string(j) + ")");
        return report;
      }
    }
  }
  double worst = 0.0;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const double dxy = m(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        const double bound = m(x, z) + m(z, y);
        if (dxy > bound + tol) {
          report.fail(Witness{"triangle",
                              {x, z, y},
                              {{"d_xy", dxy}, {"d_xz", m(x, z)}, {"d_zy", m(z, y)}},
                              "d(x,y) > d(x,z) + d(z,y)"},
                      "triangle inequality violated on (" + std::to_string(x) + "," +
                          std::to_string(z) + "," + std::to_string(y) + ")");
          return report;
        }
        if (std::isfinite(bound)) worst = std::max(worst, dxy - bound);
      }
    }
  }
  report.metric("max_triangle_excess", worst);
  report.summary = "pseudometric axioms hold within tolerance";
  return report;
}

}  // namespace modspace
