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

#include "modspace/builders.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace modspace {
namespace {

std::vector<double> probe_lambdas() {
  std::vector<double> out;
  for (int k = -24; k <= 24; ++k) out.push_back(std::pow(10.0, k / 4.0));
  return out;
}

// Allows a relative slack of a few ulps so that closed forms like
// lambda * lambda^{-1} do not trip the check.
bool exceeds(double later, double earlier) {
  if (std::isinf(earlier)) return false;
  if (std::isinf(later)) return true;
  return later > earlier + 1e-12 * std::abs(earlier);
}

std::shared_ptr<const PointSpace> require_distance(const PointSpace& space, const char* who) {
  if (!space.has_distance()) {
    throw std::invalid_argument(std::string(who) + ": point space has no base distance");
  }
  return std::make_shared<const PointSpace>(space);
}

}  // namespace

MonotoneSample sample_monotone(const std::function<double(double)>& f, bool nonincreasing) {
  const auto lambdas = probe_lambdas();
  double prev = f(lambdas.front());
  for (std::size_t k = 1; k < lambdas.size(); ++k) {
    const double cur = f(lambdas[k]);
    const bool bad = nonincreasing ? exceeds(cur, prev) : exceeds(prev, cur);
    if (bad) return {false, lambdas[k - 1], lambdas[k]};
    prev = cur;
  }
  return {};
}

ScaleFunction power_scale(double p) {
  if (!(p >= 0.0)) throw std::invalid_argument("power_scale: p must be >= 0");
  return {[p](double lambda) { return std::pow(lambda, -p); },
          "lambda^-" + format_double(p)};
}

ScaleFunction power_growth(double c, double q) {
  if (!(c > 0.0) || !(q >= 0.0)) throw std::invalid_argument("power_growth: need c > 0, q >= 0");
  return {[c, q](double lambda) { return c * std::pow(lambda, q); },
          format_double(c) + "*lambda^" + format_double(q)};
}

ModularFamily from_scaled_metric(const PointSpace& space, const ScaleFunction& g) {
  auto shared = require_distance(space, "from_scaled_metric");
  const MonotoneSample mono = sample_monotone(g.fn, /*nonincreasing=*/true);
  if (!mono.ok) {
    throw PreconditionError("from_scaled_metric: g is increasing between lambda=" +
                                format_double(mono.lambda_a) +
                                " and lambda=" + format_double(mono.lambda_b),
                            Witness{"g_increasing", {}, {{"lambda_a", mono.lambda_a},
                                                        {"lambda_b", mono.lambda_b}}, ""});
  }
  ModularClaims claims;
  claims.convex =
      sample_monotone([&g](double l) { return l * g(l); }, /*nonincreasing=*/true).ok;
  claims.strict = false;
  for (double l : probe_lambdas()) claims.strict = claims.strict || g(l) > 0.0;

  auto eval = [shared, g = g.fn](double lambda, std::size_t i, std::size_t j) -> XReal {
    if (i == j) return XReal::zero();
    return XReal(g(lambda)) * shared->distance(i, j);
  };
  return ModularFamily(shared, std::move(eval), claims, "scaled[g=" + g.name + "]");
}

ModularFamily from_saturating_metric(const PointSpace& space, const ScaleFunction& h) {
  auto shared = require_distance(space, "from_saturating_metric");
  for (double l : probe_lambdas()) {
    if (!(h(l) > 0.0)) {
      throw std::invalid_argument("from_saturating_metric: h must be positive, h(" +
                                  format_double(l) + ") = " + format_double(h(l)));
    }
  }
  const MonotoneSample mono = sample_monotone(h.fn, /*nonincreasing=*/false);
  if (!mono.ok) {
    throw PreconditionError("from_saturating_metric: h decreases between lambda=" +
                                format_double(mono.lambda_a) +
                                " and lambda=" + format_double(mono.lambda_b),
                            Witness{"h_decreasing", {}, {{"lambda_a", mono.lambda_a},
                                                        {"lambda_b", mono.lambda_b}}, ""});
  }
  auto eval = [shared, h = h.fn](double lambda, std::size_t i, std::size_t j) -> XReal {
    if (i == j) return XReal::zero();
    const double d = shared->distance_matrix()(i, j);
    if (d == 0.0) return XReal::zero();
    if (std::isinf(d)) return XReal(1.0);
    return XReal(d / (h(lambda) + d));
  };
  ModularClaims claims;
  claims.strict = true;
  return ModularFamily(shared, std::move(eval), claims, "saturating[h=" + h.name + "]");
}

ModularFamily from_exponential_family(std::vector<double> times,
                                      std::vector<std::vector<std::vector<double>>> trajectories,
                                      std::vector<std::string> labels) {
  if (times.empty()) throw std::invalid_argument("from_exponential_family: T is empty");
  for (double t : times) {
    if (!(t >= 0.0) || !std::isfinite(t)) {
      throw std::invalid_argument("from_exponential_family: times must be finite and >= 0");
    }
  }
  std::size_t dim = 0;
  for (std::size_t p = 0; p < trajectories.size(); ++p) {
    if (trajectories[p].size() != times.size()) {
      throw std::invalid_argument("from_exponential_family: trajectory " + std::to_string(p) +
                                  " has " + std::to_string(trajectories[p].size()) +
                                  " samples, expected " + std::to_string(times.size()));
    }
    for (const auto& x : trajectories[p]) {
      if (p == 0 && dim == 0) dim = x.size();
      if (x.size() != dim) {
        throw std::invalid_argument("from_exponential_family: inconsistent state dimension");
      }
    }
  }
  if (labels.empty()) labels = default_labels(trajectories.size(), "x");
  if (labels.size() != trajectories.size()) {
    throw std::invalid_argument("from_exponential_family: label count mismatch");
  }
  auto space = std::make_shared<const PointSpace>(std::move(labels));
  auto data = std::make_shared<const std::vector<std::vector<std::vector<double>>>>(
      std::move(trajectories));
  auto ts = std::make_shared<const std::vector<double>>(std::move(times));

  auto eval = [data, ts](double lambda, std::size_t i, std::size_t j) -> XReal {
    if (i == j) return XReal::zero();
    double best = 0.0;
    for (std::size_t k = 0; k < ts->size(); ++k) {
      const auto& a = (*data)[i][k];
      const auto& b = (*data)[j][k];
      double sq = 0.0;
      for (std::size_t c = 0; c < a.size(); ++c) sq += (a[c] - b[c]) * (a[c] - b[c]);
      const double dist = std::sqrt(sq);
      if (dist == 0.0) continue;
      best = std::max(best, std::exp(-lambda * (*ts)[k]) * dist);
    }
    return XReal(best);
  };
  ModularClaims claims;
  claims.strict = true;
  return ModularFamily(space, std::move(eval), claims, "exponential");
}

ModularFamily step_modular(const PointSpace& space) {
  auto shared = require_distance(space, "step_modular");
  auto eval = [shared](double lambda, std::size_t i, std::size_t j) -> XReal {
    if (i == j) return XReal::zero();
    return shared->distance_matrix()(i, j) <= lambda ? XReal::zero() : XReal::infinity();
  };
  ModularClaims claims;
  claims.strict = true;
  // 0/inf valued with the split-scale triangle inequality, hence convex.
  claims.convex = true;
  claims.delta2_expected = false;
  return ModularFamily(shared, std::move(eval), claims, "step");
}

}  // namespace modspace
