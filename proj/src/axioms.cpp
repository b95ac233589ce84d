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

#include "modspace/axioms.hpp"

#include <cmath>
#include <stdexcept>

namespace modspace {
namespace {

std::string triple_name(const PointSpace& s, std::size_t x, std::size_t z, std::size_t y) {
  return "(" + s.label(x) + "," + s.label(z) + "," + s.label(y) + ")";
}

// table[k][x * n + y] = w(grid[k], x, y)
std::vector<std::vector<XReal>> tabulate(const ModularFamily& w, const std::vector<double>& ls) {
  const std::size_t n = w.size();
  std::vector<std::vector<XReal>> table(ls.size(), std::vector<XReal>(n * n));
  for (std::size_t k = 0; k < ls.size(); ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) table[k][x * n + y] = w(ls[k], x, y);
    }
  }
  return table;
}

bool within(XReal a, XReal b, double tol) {
  if (a.is_infinite() || b.is_infinite()) return a == b;
  return std::abs(a.value() - b.value()) <= tol;
}

}  // namespace

DiagnosticReport check_modular_axioms(const ModularFamily& w, const LambdaGrid& grid, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("check_modular_axioms: tol must be positive");
  DiagnosticReport report;
  report.check = "modular_axioms";
  const std::size_t n = w.size();
  const auto& ls = grid.values();
  const auto table = tabulate(w, ls);

  for (std::size_t k = 0; k < ls.size(); ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      const XReal self = table[k][x * n + x];
      if (self.value() > tol) {
        report.fail(Witness{"self_distance", {x}, {{"lambda", ls[k]}, {"w", self.value()}}, ""},
                    "w(lambda,x,x) != 0 at x=" + w.space().label(x));
        return report;
      }
      for (std::size_t y = x + 1; y < n; ++y) {
        const XReal a = table[k][x * n + y];
        const XReal b = table[k][y * n + x];
        if (!within(a, b, tol)) {
          report.fail(Witness{"symmetry", {x, y},
                              {{"lambda", ls[k]}, {"w_xy", a.value()}, {"w_yx", b.value()}}, ""},
                      "w is not symmetric at (" + w.space().label(x) + "," +
                          w.space().label(y) + ")");
          return report;
        }
      }
    }
  }

  std::size_t violations = 0;
  double worst_excess = 0.0;
  std::vector<XReal> joint(n * n);
  for (std::size_t a = 0; a < ls.size(); ++a) {
    for (std::size_t b = 0; b < ls.size(); ++b) {
      const double sum = ls[a] + ls[b];
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) joint[x * n + y] = w(sum, x, y);
      }
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          const XReal lhs = joint[x * n + y];
          if (lhs.is_zero()) continue;
          for (std::size_t z = 0; z < n; ++z) {
            const XReal rhs = table[a][x * n + z] + table[b][z * n + y];
            if (rhs.is_infinite()) continue;
            const double excess = lhs.value() - rhs.value();
            if (excess > tol) {
              ++violations;
              worst_excess = std::max(worst_excess, excess);
              if (violations == 1) {
                report.fail(Witness{"triangle",
                                    {x, z, y},
                                    {{"lambda", ls[a]},
                                     {"mu", ls[b]},
                                     {"lhs", lhs.value()},
                                     {"rhs", rhs.value()}},
                                    "w(lambda+mu,x,y) > w(lambda,x,z) + w(mu,z,y)"},
                            "split-scale triangle inequality violated on " +
                                triple_name(w.space(), x, z, y));
              }
            }
          }
        }
      }
    }
  }
  report.metric("grid_points", static_cast<double>(ls.size()));
  report.metric("triangle_violations", static_cast<double>(violations));
  report.metric("worst_excess", worst_excess);
  if (violations == 0) {
    report.summary = "modular axioms hold at grid resolution";
  }
  return report;
}

DiagnosticReport check_phi_convexity(const ModularFamily& w, const PhiFunction& phi,
                                     const LambdaGrid& grid, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("check_phi_convexity: tol must be positive");
  const auto& ls = grid.values();
  validate_superadditive(phi, ls, tol);
  for (double l : ls) {
    if (!(phi(l) > 0.0)) {
      throw PreconditionError("phi(" + format_double(l) + ") must be positive to serve as a scale",
                              Witness{"phi_not_positive", {}, {{"lambda", l}}, ""});
    }
  }

  DiagnosticReport report;
  report.check = "phi_convexity";
  const std::size_t n = w.size();
  std::vector<double> phis;
  for (double l : ls) phis.push_back(phi(l));
  const auto table = tabulate(w, phis);

  std::size_t violations = 0;
  for (std::size_t a = 0; a < ls.size(); ++a) {
    for (std::size_t b = 0; b < ls.size(); ++b) {
      const double total = ls[a] + ls[b];
      const double scale = phi(total);
      const XReal wa(ls[a] / total);
      const XReal wb(ls[b] / total);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          const XReal lhs = w(scale, x, y);
          if (lhs.is_zero()) continue;
          for (std::size_t z = 0; z < n; ++z) {
            const XReal rhs = wa * table[a][x * n + z] + wb * table[b][z * n + y];
            if (rhs.is_infinite()) continue;
            if (lhs.value() > rhs.value() + tol) {
              ++violations;
              if (violations == 1) {
                report.fail(Witness{"phi_convexity",
                                    {x, z, y},
                                    {{"lambda", ls[a]},
                                     {"mu", ls[b]},
                                     {"lhs", lhs.value()},
                                     {"rhs", rhs.value()}},
                                    ""},
                            "phi-convexity violated on " + triple_name(w.space(), x, z, y));
              }
            }
          }
        }
      }
    }
  }
  report.metric("violations", static_cast<double>(violations));
  if (violations == 0) report.summary = "phi-convexity holds at grid resolution";
  return report;
}

Membership modular_set_membership(const ModularFamily& w, std::size_t x, std::size_t basepoint,
                                  const LambdaGrid& grid) {
  w.space().check_index(x);
  w.space().check_index(basepoint);
  Membership m;
  for (double l : grid.values()) {
    if (w(l, x, basepoint).is_finite()) {
      m.member = true;
      m.witness = l;
      return m;
    }
  }
  m.inconclusive_beyond_cap = true;
  return m;
}

Regularization regularize(const ModularFamily& w, Side side, double lambda, std::size_t i,
                          std::size_t j, std::size_t steps, double shrink, double tol) {
  if (steps < 2) throw std::invalid_argument("regularize: steps must be >= 2");
  if (!(shrink > 0.0 && shrink < 1.0)) {
    throw std::invalid_argument("regularize: shrink must lie in (0, 1)");
  }
  if (!(lambda > 0.0)) throw std::domain_error("regularize: lambda must be positive");
  if (!(lambda * std::pow(shrink, static_cast<double>(steps)) > 0.0)) {
    throw std::domain_error("regularize: lambda * shrink^steps underflows to zero");
  }
  if (side == Side::kLeft && !(lambda * (1.0 - shrink) > 0.0)) {
    throw std::domain_error("regularize: left regularization needs lambda (1 - shrink) > 0");
  }

  Regularization r;
  double step = 1.0;
  for (std::size_t k = 1; k <= steps; ++k) {
    step *= shrink;
    const double at = side == Side::kRight ? lambda * (1.0 + step) : lambda * (1.0 - step);
    const XReal v = w(at, i, j);
    if (!r.trace.empty()) {
      const XReal prev = r.trace.back();
      // Right: scales decrease toward lambda, so values must not drop.
      // Left: scales increase toward lambda, so values must not grow.
      const bool ok = side == Side::kRight ? !(v.value() + tol < prev.value())
                                           : !(v.value() > prev.value() + tol);
      r.monotone = r.monotone && ok;
    }
    r.trace.push_back(v);
    r.lambdas.push_back(at);
  }
  r.value = r.trace.back();
  return r;
}

void require_nonincreasing(const ModularFamily& w, std::size_t i, std::size_t j,
                           const std::vector<double>& lambdas) {
  if (lambdas.empty()) return;
  XReal prev = w(lambdas.front(), i, j);
  for (std::size_t k = 1; k < lambdas.size(); ++k) {
    const XReal cur = w(lambdas[k], i, j);
    const bool grows =
        prev.is_finite() && (cur.is_infinite() || cur.value() > prev.value() * (1.0 + 1e-12));
    if (grows) {
      throw PreconditionError(
          "w(lambda," + w.space().label(i) + "," + w.space().label(j) +
              ") increases between lambda=" + format_double(lambdas[k - 1]) +
              " and lambda=" + format_double(lambdas[k]),
          Witness{"non_monotone", {i, j},
                  {{"lambda_a", lambdas[k - 1]}, {"lambda_b", lambdas[k]}}, ""});
    }
    prev = cur;
  }
}

GaugeResult inverse_gauge(const ModularFamily& w, Side side, double mu, std::size_t i,
                          std::size_t j, const LambdaGrid& bracket, double tol) {
  if (!(mu >= 0.0)) throw std::invalid_argument("inverse_gauge: mu must be nonnegative");
  require_nonincreasing(w, i, j, bracket.values());
  SearchOptions opts;
  opts.floor = bracket.floor();
  opts.cap = bracket.cap();
  opts.tol = tol;
  opts.max_cap_doublings = 0;
  if (!(opts.cap > opts.floor)) {
    // Degenerate bracket: a single admissible scale.
    GaugeResult r;
    const XReal v = w(opts.floor, i, j);
    const bool holds = side == Side::kRight ? v.value() <= mu : v.value() < mu;
    r.value = holds ? XReal(opts.floor) : XReal::infinity();
    r.bracket_low = r.bracket_high = opts.floor;
    r.flags.at_floor = holds;
    r.flags.at_cap = !holds;
    return r;
  }
  // sup{l : w >= mu} = inf{l : w < mu} for nonincreasing w.
  auto pred = [&](double l) {
    const XReal v = w(l, i, j);
    return side == Side::kRight ? v.value() <= mu : v.value() < mu;
  };
  return infimum_monotone(pred, opts);
}

}  // namespace modspace
