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
#include <cstdint>
#include <random>
#include <vector>

#include "modspace/orlicz.hpp"
#include "modspace/point_space.hpp"
#include "modspace/topology.hpp"

namespace modspace::gen {

/// Seeded generator with a hand-mapped uniform so draws are identical across
/// standard libraries (std::uniform_real_distribution is not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) {
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
  }
  /// Uniform on {0, ..., n - 1} (n > 0); modulo bias is negligible for the
  /// small n used here.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

/// n points in [0, side]^2 with Euclidean distances, pairwise at least
/// min_separation apart (rejection sampling).
PointSpace random_metric_space(Rng& rng, std::size_t n, double side = 1.0,
                               double min_separation = 0.05);

/// Points 0 and c k^-a (k = 1..len) on the real line. Index 0 is the limit;
/// the sequence is points 1..len.
struct LineSequence {
  PointSpace space;
  Delta2Sequence sequence;
};
LineSequence power_sequence(double c, double a, std::size_t len);

/// Rows 1..m of the n x n Sylvester-Hadamard matrix (n a power of two, m < n):
/// +-1 patterns, any two differing in exactly n/2 cells.
orlicz::FunctionFamily rademacher_family(std::size_t m, std::size_t n);

/// Rows c * x_i for each slope c, x_i the centers of n equal cells of [0, 1].
orlicz::FunctionFamily lipschitz_family(const std::vector<double>& slopes, std::size_t n);

/// Uniform entries in [lo, hi).
orlicz::FunctionFamily random_family(Rng& rng, std::size_t m, std::size_t n, double lo,
                                     double hi);

}  // namespace modspace::gen
