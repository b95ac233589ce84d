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

#include "modspace/random.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace modspace::gen {

PointSpace random_metric_space(Rng& rng, std::size_t n, double side, double min_separation) {
  if (n == 0) throw std::invalid_argument("random_metric_space: n must be positive");
  if (!(side > 0.0) || !(min_separation >= 0.0)) {
    throw std::invalid_argument("random_metric_space: need side > 0, min_separation >= 0");
  }
  std::vector<std::pair<double, double>> pts;
  std::size_t attempts = 0;
  while (pts.size() < n) {
    if (++attempts > 100000 * n) {
      throw std::invalid_argument("random_metric_space: separation too large for the square");
    }
    const std::pair<double, double> p{rng.uniform(0.0, side), rng.uniform(0.0, side)};
    bool ok = true;
    for (const auto& q : pts) {
      ok = ok && std::hypot(p.first - q.first, p.second - q.second) >= min_separation;
    }
    if (ok) pts.push_back(p);
  }
  SquareMatrix d(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      d(i, j) = d(j, i) = std::hypot(pts[i].first - pts[j].first, pts[i].second - pts[j].second);
    }
  }
  return PointSpace::from_distance(std::move(d));
}

LineSequence power_sequence(double c, double a, std::size_t len) {
  if (!(c > 0.0) || !(a > 0.0) || len == 0) {
    throw std::invalid_argument("power_sequence: need c > 0, a > 0, len > 0");
  }
  std::vector<double> x{0.0};
  for (std::size_t k = 1; k <= len; ++k) x.push_back(c * std::pow(static_cast<double>(k), -a));
  SquareMatrix d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) d(i, j) = std::abs(x[i] - x[j]);
  }
  LineSequence out{PointSpace(default_labels(x.size(), "x"), std::move(d)), {}};
  for (std::size_t k = 1; k <= len; ++k) out.sequence.points.push_back(k);
  out.sequence.limit = 0;
  return out;
}

orlicz::FunctionFamily rademacher_family(std::size_t m, std::size_t n) {
  if (!std::has_single_bit(n) || m == 0 || m >= n) {
    throw std::invalid_argument("rademacher_family: need n a power of two and 0 < m < n");
  }
  orlicz::FunctionFamily f(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) f(r, c) = std::popcount((r + 1) & c) % 2 == 0 ? 1.0 : -1.0;
  }
  return f;
}

orlicz::FunctionFamily lipschitz_family(const std::vector<double>& slopes, std::size_t n) {
  if (slopes.empty() || n == 0) throw std::invalid_argument("lipschitz_family: empty input");
  orlicz::FunctionFamily f(slopes.size(), n);
  for (std::size_t r = 0; r < slopes.size(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      f(r, c) = slopes[r] * (static_cast<double>(c) + 0.5) / static_cast<double>(n);
    }
  }
  return f;
}

orlicz::FunctionFamily random_family(Rng& rng, std::size_t m, std::size_t n, double lo,
                                     double hi) {
  orlicz::FunctionFamily f(m, n);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) f(r, c) = rng.uniform(lo, hi);
  }
  return f;
}

}  // namespace modspace::gen
