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

#include <compare>
#include <limits>
#include <string>

namespace modspace {

/// Extended nonnegative real in [0, +inf].
///
/// Infinity absorbs addition and multiplication by positive reals, and
/// 0 * inf is defined as 0 so that convex combinations with zero weight stay
/// evaluable. There is no subtraction: comparisons go through the ordering.
class XReal {
 public:
  constexpr XReal() = default;

  // Implicit on purpose: modular evaluators return plain doubles most of the
  // time. Throws std::domain_error for negative or NaN input.
  XReal(double v);  // NOLINT(google-explicit-constructor)

  static constexpr XReal infinity() { return XReal(Raw{}, kInf); }
  static constexpr XReal zero() { return XReal(); }

  constexpr bool is_finite() const { return value_ != kInf; }
  constexpr bool is_infinite() const { return value_ == kInf; }
  constexpr bool is_zero() const { return value_ == 0.0; }

  /// Underlying double; +inf is returned as IEEE infinity.
  constexpr double value() const { return value_; }

  friend XReal operator+(XReal a, XReal b);
  friend XReal operator*(XReal a, XReal b);
  XReal& operator+=(XReal other) { return *this = *this + other; }

  friend constexpr bool operator==(XReal a, XReal b) { return a.value_ == b.value_; }
  friend constexpr std::partial_ordering operator<=>(XReal a, XReal b) {
    return a.value_ <=> b.value_;
  }

  /// "inf" for infinity, shortest round-trip decimal otherwise.
  std::string to_string() const;

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();
  struct Raw {};
  constexpr XReal(Raw, double v) : value_(v) {}

  double value_ = 0.0;
};

XReal min(XReal a, XReal b);
XReal max(XReal a, XReal b);

/// Formats a double with the shortest round-trip representation ("inf" for
/// +infinity). Used by every text serializer so reports are byte-stable.
std::string format_double(double v);

}  // namespace modspace
