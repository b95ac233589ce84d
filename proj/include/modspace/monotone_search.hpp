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

#include "modspace/xreal.hpp"

namespace modspace {

/// Search bracket and stopping rule for the bisection engine.
struct SearchOptions {
  double floor = 1e-12;
  double cap = 1e12;
  double tol = 1e-10;
  /// How many times the cap may double when pred(cap) is false.
  int max_cap_doublings = 60;
};

struct GaugeFlags {
  bool at_floor = false;
  bool at_cap = false;
  bool exact = false;
};

/// Result of an infimum search: value lies in [bracket_low, bracket_high]
/// when finite, and bracket_high - bracket_low <= tol on exit.
struct GaugeResult {
  XReal value;
  double bracket_low = 0.0;
  double bracket_high = 0.0;
  std::size_t iterations = 0;
  GaugeFlags flags;
};

/// inf{lambda in [floor, cap] : pred(lambda)} for a predicate that is
/// monotone nondecreasing in lambda (false ... false true ... true).
///
/// The bracket is spot-checked at three interior points before bisecting; a
/// PreconditionError whose witness holds lambda_true < lambda_false is thrown
/// when the predicate is seen to switch back from true to false.
/// If pred(cap) is false the cap doubles up to max_cap_doublings times before
/// +inf is returned with at_cap set. If pred(floor) holds the result is floor
/// with at_floor set.
GaugeResult infimum_monotone(const std::function<bool(double)>& pred,
                             const SearchOptions& opts = {});

}  // namespace modspace
