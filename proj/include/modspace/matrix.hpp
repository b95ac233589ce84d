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

namespace modspace {

/// Dense row-major n x n matrix of doubles. +inf entries are allowed.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}
  static SquareMatrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  const std::vector<double>& data() const { return data_; }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

/// A (pseudo)metric on a finite point set, tagged with the gauge that
/// produced it.
///
/// `resolution` is the smallest distance the producer can resolve: entries
/// at or below it are indistinguishable from zero. Gauges computed by
/// bisection have resolution 0; the 2^-n metrization has 2^-n_max.
struct DistanceMatrix {
  SquareMatrix values;
  std::string provenance;
  double resolution = 0.0;

  std::size_t size() const { return values.size(); }
  double operator()(std::size_t i, std::size_t j) const { return values(i, j); }

  /// Entry with sub-resolution values collapsed to zero.
  double effective(std::size_t i, std::size_t j) const {
    const double v = values(i, j);
    return v <= resolution ? 0.0 : v;
  }

  DistanceMatrix scaled(double factor) const;
};

}  // namespace modspace
