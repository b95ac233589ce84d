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

#include "modspace/monotone_search.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "modspace/report.hpp"

namespace modspace {

GaugeResult infimum_monotone(const std::function<bool(double)>& pred, const SearchOptions& opts) {
  if (!(opts.floor > 0.0) || !(opts.cap > opts.floor)) {
    throw std::invalid_argument("infimum_monotone: need 0 < floor < cap");
  }
  if (!(opts.tol > 0.0)) throw std::invalid_argument("infimum_monotone: tol must be positive");

  GaugeResult r;
  if (pred(opts.floor)) {
    r.value = XReal(opts.floor);
    r.bracket_low = r.bracket_high = opts.floor;
    r.flags.at_floor = true;
    return r;
  }

  double cap = opts.cap;
  bool cap_holds = pred(cap);
  for (int k = 0; !cap_holds && k < opts.max_cap_doublings; ++k) {
    cap *= 2.0;
    cap_holds = pred(cap);
  }
  if (!cap_holds) {
    r.value = XReal::infinity();
    r.bracket_low = r.bracket_high = cap;
    r.flags.at_cap = true;
    return r;
  }

  // Geometric quartiles of the bracket.
  std::array<double, 5> probe{opts.floor, 0.0, 0.0, 0.0, cap};
  std::array<bool, 5> holds{false, false, false, false, true};
  for (int q = 1; q <= 3; ++q) {
    probe[q] = opts.floor * std::pow(cap / opts.floor, q / 4.0);
    holds[q] = pred(probe[q]);
  }
  double lo = opts.floor;
  double hi = cap;
  for (int q = 0; q < 5; ++q) {
    if (!holds[q]) continue;
    for (int later = q + 1; later < 5; ++later) {
      if (!holds[later]) {
        throw PreconditionError(
            "infimum_monotone: predicate not monotone, true at lambda=" +
                format_double(probe[q]) + " but false at lambda=" + format_double(probe[later]),
            Witness{"non_monotone", {}, {{"lambda_true", probe[q]}, {"lambda_false", probe[later]}},
                    ""});
      }
    }
  }
  for (int q = 0; q < 5; ++q) {
    if (holds[q]) {
      hi = probe[q];
      break;
    }
    lo = probe[q];
  }

  while (hi - lo > opts.tol) {
    const double mid = hi / lo > 4.0 ? std::sqrt(lo * hi) : lo + 0.5 * (hi - lo);
    if (!(mid > lo && mid < hi)) break;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
    ++r.iterations;
  }
  r.value = XReal(hi);
  r.bracket_low = lo;
  r.bracket_high = hi;
  return r;
}

}  // namespace modspace
