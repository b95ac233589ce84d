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

#include "modspace/phi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace modspace {

PhiFunction::PhiFunction(std::function<double(double)> value, std::string name,
                         std::function<double(double)> inverse)
    : value_(std::move(value)), inverse_(std::move(inverse)), name_(std::move(name)) {
  if (!value_) throw std::invalid_argument("PhiFunction needs a value function");
}

XReal PhiFunction::inverse(XReal y) const {
  if (y.is_infinite()) return XReal::infinity();
  if (y.is_zero()) return XReal::zero();
  if (inverse_) return XReal(inverse_(y.value()));

  const double target = y.value();
  double lo = 0.0;
  double hi = 1.0;
  while (value_(hi) < target) {
    lo = hi;
    hi *= 2.0;
    if (std::isinf(hi)) return XReal::infinity();
  }
  for (int it = 0; it < 2000; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    if (value_(mid) >= target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return XReal(hi);
}

PhiFunction phi_identity() {
  return PhiFunction([](double t) { return t; }, "identity", [](double y) { return y; });
}

PhiFunction phi_power(double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("phi_power: exponent must be >= 1");
  return PhiFunction([q](double t) { return std::pow(t, q); }, "t^" + format_double(q),
                     [q](double y) { return std::pow(y, 1.0 / q); });
}

void validate_superadditive(const PhiFunction& phi, const std::vector<double>& samples,
                            double tol) {
  if (std::abs(phi(0.0)) > tol) {
    throw PreconditionError("phi(0) = " + format_double(phi(0.0)) + " is not zero",
                            Witness{"phi_zero", {}, {{"phi0", phi(0.0)}}, ""});
  }
  std::vector<double> s = samples;
  std::sort(s.begin(), s.end());
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (phi(s[k]) + tol < phi(s[k - 1])) {
      throw PreconditionError("phi decreases between " + format_double(s[k - 1]) + " and " +
                                  format_double(s[k]),
                              Witness{"phi_decreasing", {}, {{"t_a", s[k - 1]}, {"t_b", s[k]}},
                                      ""});
    }
  }
  for (double a : s) {
    for (double b : s) {
      const double lhs = phi(a + b);
      const double rhs = phi(a) + phi(b);
      if (lhs + tol * std::max(1.0, std::abs(rhs)) < rhs) {
        throw PreconditionError("phi is not superadditive at (" + format_double(a) + ", " +
                                    format_double(b) + ")",
                                Witness{"phi_not_superadditive", {}, {{"a", a}, {"b", b},
                                        {"phi_sum", lhs}, {"sum_phi", rhs}}, ""});
      }
    }
  }
}

}  // namespace modspace
