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
#include <string>
#include <vector>

#include "modspace/modular.hpp"
#include "modspace/point_space.hpp"

namespace modspace {

/// A named scalar function of the scale parameter, e.g. g or h in the
/// metric-based builders.
struct ScaleFunction {
  std::function<double(double)> fn;
  std::string name;

  double operator()(double lambda) const { return fn(lambda); }
};

/// g(lambda) = lambda^{-p}.
ScaleFunction power_scale(double p);
/// h(lambda) = c * lambda^q (q >= 0).
ScaleFunction power_growth(double c, double q);

/// w(lambda, x, y) = g(lambda) d(x, y). g must be nonincreasing; the family is
/// claimed convex when lambda g(lambda) is nonincreasing on samples.
ModularFamily from_scaled_metric(const PointSpace& space, const ScaleFunction& g);

/// w(lambda, x, y) = d / (h(lambda) + d) for positive nondecreasing h.
ModularFamily from_saturating_metric(const PointSpace& space, const ScaleFunction& h);

/// Points are trajectories t -> x(t) in R^k sampled on a finite set T of
/// nonnegative times; w(lambda, x, y) = max_t e^{-lambda t} |x(t) - y(t)|.
/// trajectories[point][time] is a coordinate vector.
ModularFamily from_exponential_family(std::vector<double> times,
                                      std::vector<std::vector<std::vector<double>>> trajectories,
                                      std::vector<std::string> labels = {});

/// w(lambda, x, y) = 0 if d(x, y) <= lambda, +inf otherwise. The standard
/// example of a modular violating the Delta_2 condition.
ModularFamily step_modular(const PointSpace& space);

/// Sampled check that f is nonincreasing (or nondecreasing) on a log grid
/// spanning [1e-6, 1e6]. Returns the first offending pair when it is not.
struct MonotoneSample {
  bool ok = true;
  double lambda_a = 0.0;
  double lambda_b = 0.0;
};
MonotoneSample sample_monotone(const std::function<double(double)>& f, bool nonincreasing);

}  // namespace modspace
