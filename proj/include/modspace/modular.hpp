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
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "modspace/point_space.hpp"
#include "modspace/xreal.hpp"

namespace modspace {

/// Finite sample of the scale parameter lambda.
///
/// values are strictly increasing and positive; [floor, cap] is the search
/// bracket used by bisection-based operations.
class LambdaGrid {
 public:
  LambdaGrid(std::vector<double> values, double floor, double cap);

  /// floor = min(values), cap = max(values).
  static LambdaGrid from_values(std::vector<double> values);
  /// Log-spaced grid including both endpoints.
  static LambdaGrid log_spaced(double lo, double hi, std::size_t per_decade);
  /// {lo, lo+step, ..., hi}.
  static LambdaGrid linear(double lo, double hi, std::size_t count);

  const std::vector<double>& values() const { return values_; }
  double floor() const { return floor_; }
  double cap() const { return cap_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
  double floor_;
  double cap_;
};

struct ModularClaims {
  bool strict = false;
  bool convex = false;
  bool delta2_expected = true;
};

using ModularEval = std::function<XReal(double lambda, std::size_t i, std::size_t j)>;

/// A (pseudo)modular w(lambda, i, j) over a finite point space.
///
/// Immutable after construction; copies share the space. Evaluation checks
/// lambda > 0 and the indices before calling the evaluator.
class ModularFamily {
 public:
  ModularFamily(PointSpace space, ModularEval eval, ModularClaims claims, std::string name);
  ModularFamily(std::shared_ptr<const PointSpace> space, ModularEval eval, ModularClaims claims,
                std::string name);

  XReal operator()(double lambda, std::size_t i, std::size_t j) const;

  const PointSpace& space() const { return *space_; }
  std::shared_ptr<const PointSpace> shared_space() const { return space_; }
  std::size_t size() const { return space_->size(); }
  const ModularClaims& claims() const { return claims_; }
  const std::string& name() const { return name_; }

 private:
  std::shared_ptr<const PointSpace> space_;
  ModularEval eval_;
  ModularClaims claims_;
  std::string name_;
};

}  // namespace modspace
