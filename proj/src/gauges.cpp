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

#include "modspace/gauges.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "modspace/axioms.hpp"

namespace modspace {
namespace {

std::vector<double> validation_lambdas(double floor, double cap) {
  std::vector<double> out;
  constexpr int kSamples = 25;
  for (int k = 0; k < kSamples; ++k) {
    out.push_back(floor * std::pow(cap / floor, static_cast<double>(k) / (kSamples - 1)));
  }
  return out;
}

GaugeResult exact_zero(double floor) {
  GaugeResult r;
  r.value = XReal::zero();
  r.bracket_low = 0.0;
  r.bracket_high = floor;
  r.flags.at_floor = true;
  r.flags.exact = true;
  return r;
}

template <typename Pred>
GaugeResult modular_infimum(const ModularFamily& w, std::size_t i, std::size_t j,
                            const SearchOptions& opts, Pred pred) {
  require_nonincreasing(w, i, j, validation_lambdas(opts.floor, opts.cap));
  if (w(opts.floor, i, j).is_zero() && pred(opts.floor)) return exact_zero(opts.floor);
  return infimum_monotone(pred, opts);
}

constexpr double kInvPhi = 0.6180339887498949;  // (sqrt 5 - 1) / 2

}  // namespace

GaugeResult d0(const ModularFamily& w, std::size_t i, std::size_t j, const SearchOptions& opts) {
  return modular_infimum(w, i, j, opts,
                         [&](double l) { return w(l, i, j) <= XReal(l); });
}

GaugeResult dstar(const ModularFamily& w, std::size_t i, std::size_t j,
                  const SearchOptions& opts) {
  return modular_infimum(w, i, j, opts,
                         [&](double l) { return w(l, i, j) <= XReal(1.0); });
}

GaugeResult d0_phi(const ModularFamily& w, const PhiFunction& phi, std::size_t i, std::size_t j,
                   const SearchOptions& opts) {
  return modular_infimum(w, i, j, opts,
                         [&](double l) { return w(l, i, j) <= XReal(phi(l)); });
}

GaugeResult d1_phi(const ModularFamily& w, const PhiFunction& phi, std::size_t i, std::size_t j) {
  return d1_phi(w, phi, i, j, LambdaGrid::log_spaced(1e-12, 1e12, 48));
}

GaugeResult d1_phi(const ModularFamily& w, const PhiFunction& phi, std::size_t i, std::size_t j,
                   const LambdaGrid& grid) {
  if (w(grid.floor(), i, j).is_zero()) return exact_zero(grid.floor());

  auto objective = [&](double l) -> double {
    const XReal inv = phi.inverse(w(l, i, j));
    return inv.is_infinite() ? std::numeric_limits<double>::infinity() : l + inv.value();
  };
  const auto& ls = grid.values();
  std::size_t best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < ls.size(); ++k) {
    const double v = objective(ls[k]);
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }
  GaugeResult r;
  if (std::isinf(best_value)) {
    r.value = XReal::infinity();
    r.bracket_low = r.bracket_high = grid.cap();
    r.flags.at_cap = true;
    return r;
  }

  double a = ls[best == 0 ? 0 : best - 1];
  double b = ls[std::min(best + 1, ls.size() - 1)];
  double best_lambda = ls[best];
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = objective(c);
  double fd = objective(d);
  while (b - a > 1e-14 * std::max(1.0, std::abs(b)) && r.iterations < 200) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = objective(d);
    }
    ++r.iterations;
  }
  for (auto [l, v] : {std::pair{c, fc}, std::pair{d, fd}}) {
    if (v < best_value) {
      best_value = v;
      best_lambda = l;
    }
  }
  r.value = XReal(best_value);
  r.bracket_low = a;
  r.bracket_high = b;
  r.flags.at_floor = best_lambda <= grid.floor();
  r.flags.at_cap = best_lambda >= grid.cap();
  return r;
}

GaugeResult luxemburg(const orlicz::OrliczModular& rho, std::span<const double> u,
                      const SearchOptions& opts) {
  for (double v : u) {
    if (!std::isfinite(v)) throw std::invalid_argument("luxemburg: function values must be finite");
  }
  if (rho(u).is_zero() && rho.scaled(u, opts.floor).is_zero()) return exact_zero(opts.floor);

  const auto lambdas = validation_lambdas(opts.floor, opts.cap);
  XReal prev = rho.scaled(u, lambdas.front());
  for (std::size_t k = 1; k < lambdas.size(); ++k) {
    const XReal cur = rho.scaled(u, lambdas[k]);
    if (prev.is_finite() && (cur.is_infinite() || cur.value() > prev.value() * (1.0 + 1e-12))) {
      throw PreconditionError("luxemburg: rho(u/lambda) increases between lambda=" +
                                  format_double(lambdas[k - 1]) +
                                  " and lambda=" + format_double(lambdas[k]),
                              Witness{"non_monotone", {}, {{"lambda_a", lambdas[k - 1]},
                                                          {"lambda_b", lambdas[k]}}, ""});
    }
    prev = cur;
  }
  return infimum_monotone([&](double l) { return rho.scaled(u, l) <= XReal(1.0); }, opts);
}

std::string to_string(GaugeKind kind) {
  switch (kind) {
    case GaugeKind::kD0:
      return "d0";
    case GaugeKind::kDstar:
      return "dstar";
    case GaugeKind::kD0Phi:
      return "d0_phi";
    case GaugeKind::kD1Phi:
      return "d1_phi";
  }
  return "unknown";
}

GaugeKind gauge_kind_from_string(const std::string& s) {
  // d_w is an alias of d0.
  if (s == "d0" || s == "dw") return GaugeKind::kD0;
  if (s == "dstar") return GaugeKind::kDstar;
  if (s == "d0_phi") return GaugeKind::kD0Phi;
  if (s == "d1_phi") return GaugeKind::kD1Phi;
  throw std::invalid_argument("unknown gauge '" + s + "' (expected d0, dstar, d0_phi, d1_phi)");
}

GaugeMatrix gauge_matrix(const ModularFamily& w, GaugeKind kind, const GaugeParams& params) {
  if ((kind == GaugeKind::kD0Phi || kind == GaugeKind::kD1Phi) && !params.phi) {
    throw std::invalid_argument("gauge_matrix: " + to_string(kind) + " needs phi");
  }
  const std::size_t n = w.size();
  GaugeMatrix out;
  out.matrix.values = SquareMatrix(n, 0.0);
  out.matrix.provenance = to_string(kind) + "(" + w.name() + ")";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      GaugeResult g;
      try {
        switch (kind) {
          case GaugeKind::kD0:
            g = d0(w, i, j, params.search);
            break;
          case GaugeKind::kDstar:
            g = dstar(w, i, j, params.search);
            break;
          case GaugeKind::kD0Phi:
            g = d0_phi(w, *params.phi, i, j, params.search);
            break;
          case GaugeKind::kD1Phi:
            g = params.d1_grid ? d1_phi(w, *params.phi, i, j, *params.d1_grid)
                               : d1_phi(w, *params.phi, i, j);
            break;
        }
      } catch (const PreconditionError& e) {
        Witness wit = e.witness();
        wit.points = {i, j};
        throw PreconditionError(std::string(e.what()) + " [pair (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")]",
                                wit);
      }
      out.matrix.values(i, j) = g.value.value();
      out.matrix.values(j, i) = g.value.value();
    }
  }
  out.validation = validate_pseudometric(out.matrix.values, kTolMetric);
  return out;
}

DiagnosticReport check_sandwich(const DistanceMatrix& d0m, const DistanceMatrix& dsm, double tol) {
  if (d0m.size() != dsm.size()) throw std::invalid_argument("check_sandwich: size mismatch");
  DiagnosticReport report;
  report.check = "sandwich";
  double worst = 0.0;
  for (std::size_t i = 0; i < d0m.size(); ++i) {
    for (std::size_t j = 0; j < d0m.size(); ++j) {
      const double ds = dsm(i, j);
      const double z = d0m(i, j);
      if (std::isinf(ds) || std::isinf(z)) continue;
      const double lo = std::min(ds, std::sqrt(ds));
      const double hi = std::max(ds, std::sqrt(ds));
      const double excess = std::max(lo - z, z - hi);
      worst = std::max(worst, excess);
      if (excess > tol && !report.failed()) {
        report.fail(Witness{"sandwich", {i, j}, {{"d0", z}, {"dstar", ds}}, ""},
                    "d0 outside [min(d*, sqrt d*), max(d*, sqrt d*)] at (" + std::to_string(i) +
                        "," + std::to_string(j) + ")");
      }
    }
  }
  report.metric("worst_excess", worst);
  if (!report.failed()) report.summary = "sandwich inequality holds entrywise";
  return report;
}

}  // namespace modspace
