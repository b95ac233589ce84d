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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "modspace/report.hpp"
#include "modspace/xreal.hpp"

namespace modspace {

/// A superadditive map phi : [0, inf) -> [0, inf) with phi(0) = 0.
///
/// The inverse is either supplied in closed form or computed as the
/// generalized inverse inf{t >= 0 : phi(t) >= y} by bisection.
class PhiFunction {
 public:
  PhiFunction(std::function<double(double)> value, std::string name,
              std::function<double(double)> inverse = {});

  double operator()(double t) const { return value_(t); }
  /// phi^{-1}(+inf) = +inf.
  XReal inverse(XReal y) const;
  const std::string& name() const { return name_; }
  bool has_closed_form_inverse() const { return static_cast<bool>(inverse_); }

 private:
  std::function<double(double)> value_;
  std::function<double(double)> inverse_;
  std::string name_;
};

PhiFunction phi_identity();
/// phi(t) = t^q, superadditive for q >= 1.
PhiFunction phi_power(double q);

/// Validates phi(0) = 0, monotonicity and superadditivity on the given
/// samples (all values and pairwise sums). Throws PreconditionError naming
/// the offending sample.
void validate_superadditive(const PhiFunction& phi, const std::vector<double>& samples,
                            double tol);

}  // namespace modspace
