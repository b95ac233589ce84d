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

#include "modspace/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "modspace/gauges.hpp"

namespace modspace::orlicz {
namespace {

void require_size(std::size_t got, std::size_t want, const char* who) {
  if (got != want) {
    throw std::invalid_argument(std::string(who) + ": function has " + std::to_string(got) +
                                " entries but the measure space has " + std::to_string(want) +
                                " cells");
  }
}

std::vector<std::size_t> coordinates(const GridLayout& g, std::size_t cell) {
  std::vector<std::size_t> c(g.dims.size());
  for (std::size_t a = g.dims.size(); a-- > 0;) {
    c[a] = cell % g.dims[a];
    cell /= g.dims[a];
  }
  return c;
}

const GridLayout& require_grid(const DiscreteMeasureSpace& omega, const char* who) {
  if (!omega.grid()) throw std::invalid_argument(std::string(who) + ": measure space has no grid");
  return *omega.grid();
}

// First index of `grid` satisfying pred. With `monotone` the predicate is
// assumed false...true and a binary search is used.
template <typename Pred>
std::optional<std::size_t> first_lambda(const LambdaGrid& grid, bool monotone, Pred pred) {
  const auto& ls = grid.values();
  if (!monotone) {
    for (std::size_t k = 0; k < ls.size(); ++k) {
      if (pred(ls[k])) return k;
    }
    return std::nullopt;
  }
  if (!pred(ls.back())) return std::nullopt;
  std::size_t lo = 0;
  std::size_t hi = ls.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (pred(ls[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

double finite_or_inf(XReal v) { return v.value(); }

}  // namespace

std::size_t GridLayout::cell_count() const {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

DiscreteMeasureSpace::DiscreteMeasureSpace(std::vector<double> masses,
                                           std::optional<GridLayout> grid)
    : masses_(std::move(masses)), grid_(std::move(grid)) {
  if (masses_.empty()) throw std::invalid_argument("measure space needs at least one cell");
  for (std::size_t i = 0; i < masses_.size(); ++i) {
    if (!(masses_[i] > 0.0) || !std::isfinite(masses_[i])) {
      throw std::invalid_argument("cell " + std::to_string(i) + " has non-positive mass");
    }
    total_ += masses_[i];
  }
  if (grid_) {
    if (grid_->dims.empty() || grid_->dims.size() > 2) {
      throw std::invalid_argument("grid must be 1-D or 2-D");
    }
    if (grid_->cell_count() != masses_.size()) {
      throw std::invalid_argument("grid dims do not match the number of cells");
    }
    if (!(grid_->mesh > 0.0)) throw std::invalid_argument("grid mesh must be positive");
  }
}

DiscreteMeasureSpace DiscreteMeasureSpace::uniform_1d(std::size_t n, double length) {
  if (n == 0 || !(length > 0.0)) throw std::invalid_argument("uniform_1d: need n > 0, length > 0");
  const double h = length / static_cast<double>(n);
  return DiscreteMeasureSpace(std::vector<double>(n, h), GridLayout{{n}, h});
}

DiscreteMeasureSpace DiscreteMeasureSpace::uniform_2d(std::size_t nx, std::size_t ny,
                                                      double length) {
  if (nx == 0 || ny == 0 || !(length > 0.0)) {
    throw std::invalid_argument("uniform_2d: need nx, ny > 0, length > 0");
  }
  const double h = length / static_cast<double>(nx);
  return DiscreteMeasureSpace(std::vector<double>(nx * ny, h * h), GridLayout{{nx, ny}, h});
}

bool DiscreteMeasureSpace::equal_masses() const {
  return std::all_of(masses_.begin(), masses_.end(),
                     [&](double m) { return std::abs(m - masses_.front()) <= 1e-12 * m; });
}

std::vector<double> DiscreteMeasureSpace::position(std::size_t i) const {
  const auto& g = require_grid(*this, "position");
  if (i >= size()) throw std::out_of_range("cell index out of range");
  std::vector<double> out;
  for (std::size_t c : coordinates(g, i)) out.push_back((static_cast<double>(c) + 0.5) * g.mesh);
  return out;
}

Integrand lp(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw std::invalid_argument("lp: need p >= 1");
  std::function<double(std::size_t, double)> eval;
  if (p == 1.0) {
    eval = [](std::size_t, double t) { return t; };
  } else if (p == 2.0) {
    eval = [](std::size_t, double t) { return t * t; };
  } else {
    eval = [p](std::size_t, double t) { return std::pow(t, p); };
  }
  return {std::move(eval), {true, true}, "lp(" + format_double(p) + ")"};
}

Integrand exp_squared() {
  return {[](std::size_t, double t) { return std::expm1(t * t); }, {true, false}, "exp_squared"};
}

Integrand variable_exponent(std::vector<double> exponents) {
  if (exponents.empty()) throw std::invalid_argument("variable_exponent: no exponents");
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (!(exponents[i] > 1.0) || !std::isfinite(exponents[i])) {
      throw std::invalid_argument("variable_exponent: exponent at cell " + std::to_string(i) +
                                  " must lie in (1, inf)");
    }
  }
  auto shared = std::make_shared<const std::vector<double>>(std::move(exponents));
  return {[shared](std::size_t cell, double t) { return std::pow(t, shared->at(cell)); },
          {true, true},
          "variable_exponent"};
}

DiagnosticReport validate_integrand(const Integrand& phi, const DiscreteMeasureSpace& omega) {
  DiagnosticReport report;
  report.check = "integrand";
  std::vector<double> ts{0.0};
  for (int k = -12; k <= 4; ++k) ts.push_back(std::pow(10.0, k / 4.0));
  for (std::size_t x = 0; x < omega.size(); ++x) {
    if (phi(x, 0.0) != 0.0) {
      report.fail(Witness{"phi_at_zero", {x}, {{"value", phi(x, 0.0)}}, ""},
                  "Phi(x, 0) != 0 at cell " + std::to_string(x));
      return report;
    }
    for (std::size_t k = 1; k < ts.size(); ++k) {
      const double a = phi(x, ts[k - 1]);
      const double b = phi(x, ts[k]);
      if (b < a) {
        report.fail(Witness{"phi_decreasing", {x}, {{"t_a", ts[k - 1]}, {"t_b", ts[k]}}, ""},
                    "Phi decreases in t at cell " + std::to_string(x));
        return report;
      }
      if (phi.tags.convex_in_t) {
        const double mid = phi(x, 0.5 * (ts[k - 1] + ts[k]));
        if (std::isfinite(b) && mid > 0.5 * (a + b) * (1.0 + 1e-12) + 1e-300) {
          report.fail(Witness{"phi_not_convex", {x}, {{"t_a", ts[k - 1]}, {"t_b", ts[k]}}, ""},
                      "midpoint convexity fails at cell " + std::to_string(x));
          return report;
        }
      }
    }
  }
  report.summary = "integrand contract holds on samples";
  return report;
}

FunctionFamily::FunctionFamily(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

FunctionFamily FunctionFamily::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("function family needs at least one row");
  FunctionFamily f(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != f.cols_) {
      throw std::invalid_argument("function family row " + std::to_string(r) +
                                  " has the wrong length");
    }
    for (std::size_t c = 0; c < f.cols_; ++c) {
      if (!std::isfinite(rows[r][c])) {
        throw std::invalid_argument("function family entry (" + std::to_string(r) + "," +
                                    std::to_string(c) + ") is not finite");
      }
      f(r, c) = rows[r][c];
    }
  }
  return f;
}

std::vector<double> FunctionFamily::row_vector(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("function family row out of range");
  auto s = row(r);
  return {s.begin(), s.end()};
}

Partition::Partition(std::vector<std::vector<std::size_t>> blocks,
                     const DiscreteMeasureSpace& omega)
    : blocks_(std::move(blocks)) {
  std::vector<bool> seen(omega.size(), false);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) throw std::invalid_argument("partition block " + std::to_string(b) + " is empty");
    double mass = 0.0;
    for (std::size_t c : blocks_[b]) {
      if (c >= omega.size()) throw std::invalid_argument("partition cell out of range");
      if (seen[c]) {
        throw std::invalid_argument("partition blocks overlap at cell " + std::to_string(c));
      }
      seen[c] = true;
      mass += omega.mass(c);
    }
    block_mass_.push_back(mass);
  }
  const auto missing = std::find(seen.begin(), seen.end(), false);
  if (missing != seen.end()) {
    throw std::invalid_argument("partition does not cover cell " +
                                std::to_string(missing - seen.begin()));
  }
}

Partition Partition::dyadic_blocks(const DiscreteMeasureSpace& omega, std::size_t block_cells) {
  const auto& g = require_grid(omega, "dyadic_blocks");
  if (block_cells == 0) throw std::invalid_argument("dyadic_blocks: block size must be positive");
  std::vector<std::vector<std::size_t>> blocks;
  if (g.dims.size() == 1) {
    for (std::size_t start = 0; start < g.dims[0]; start += block_cells) {
      std::vector<std::size_t> b;
      for (std::size_t c = start; c < std::min(start + block_cells, g.dims[0]); ++c) b.push_back(c);
      blocks.push_back(std::move(b));
    }
  } else {
    const std::size_t rows = g.dims[0];
    const std::size_t cols = g.dims[1];
    for (std::size_t r0 = 0; r0 < rows; r0 += block_cells) {
      for (std::size_t c0 = 0; c0 < cols; c0 += block_cells) {
        std::vector<std::size_t> b;
        for (std::size_t r = r0; r < std::min(r0 + block_cells, rows); ++r) {
          for (std::size_t c = c0; c < std::min(c0 + block_cells, cols); ++c) {
            b.push_back(r * cols + c);
          }
        }
        blocks.push_back(std::move(b));
      }
    }
  }
  return Partition(std::move(blocks), omega);
}

Partition Partition::singletons(const DiscreteMeasureSpace& omega) {
  std::vector<std::vector<std::size_t>> blocks;
  for (std::size_t c = 0; c < omega.size(); ++c) blocks.push_back({c});
  return Partition(std::move(blocks), omega);
}

Partition Partition::whole(const DiscreteMeasureSpace& omega) {
  std::vector<std::size_t> all(omega.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return Partition({std::move(all)}, omega);
}

std::size_t Partition::max_block_extent(const DiscreteMeasureSpace& omega) const {
  const auto& g = require_grid(omega, "max_block_extent");
  std::size_t extent = 0;
  for (const auto& block : blocks_) {
    std::vector<std::size_t> lo(g.dims.size(), SIZE_MAX);
    std::vector<std::size_t> hi(g.dims.size(), 0);
    for (std::size_t c : block) {
      const auto xy = coordinates(g, c);
      for (std::size_t a = 0; a < xy.size(); ++a) {
        lo[a] = std::min(lo[a], xy[a]);
        hi[a] = std::max(hi[a], xy[a]);
      }
    }
    for (std::size_t a = 0; a < lo.size(); ++a) extent = std::max(extent, hi[a] - lo[a] + 1);
  }
  return extent;
}

XReal rho(std::span<const double> f, const Integrand& phi, const DiscreteMeasureSpace& omega) {
  require_size(f.size(), omega.size(), "rho");
  XReal total;
  for (std::size_t i = 0; i < f.size(); ++i) {
    total += XReal(phi(i, std::abs(f[i]))) * XReal(omega.mass(i));
  }
  return total;
}

XReal rho_scaled(std::span<const double> f, double lambda, const Integrand& phi,
                 const DiscreteMeasureSpace& omega) {
  if (!(lambda > 0.0)) throw std::domain_error("rho_scaled: lambda must be positive");
  require_size(f.size(), omega.size(), "rho");
  XReal total;
  for (std::size_t i = 0; i < f.size(); ++i) {
    total += XReal(phi(i, std::abs(f[i]) / lambda)) * XReal(omega.mass(i));
  }
  return total;
}

OrliczModular::OrliczModular(Integrand phi, DiscreteMeasureSpace omega)
    : phi_(std::move(phi)), omega_(std::move(omega)) {}

ModularFamily induced_modular(const OrliczModular& rho, const FunctionFamily& vectors,
                              std::vector<std::string> labels) {
  require_size(vectors.cols(), rho.measure().size(), "induced_modular");
  if (labels.empty()) labels = default_labels(vectors.rows(), "u");
  if (labels.size() != vectors.rows()) {
    throw std::invalid_argument("induced_modular: label count does not match the family");
  }
  ModularClaims claims;
  claims.convex = rho.integrand().tags.convex_in_t;
  claims.delta2_expected = rho.integrand().tags.delta2_at_infinity;
  claims.strict = true;
  for (std::size_t a = 0; a < vectors.rows() && claims.strict; ++a) {
    for (std::size_t b = a + 1; b < vectors.rows(); ++b) {
      if (std::ranges::equal(vectors.row(a), vectors.row(b))) {
        claims.strict = false;
        break;
      }
    }
  }
  auto data = std::make_shared<const FunctionFamily>(vectors);
  auto modular = std::make_shared<const OrliczModular>(rho);
  auto eval = [data, modular](double lambda, std::size_t i, std::size_t j) -> XReal {
    if (i == j) return XReal::zero();
    std::vector<double> diff(data->cols());
    for (std::size_t c = 0; c < diff.size(); ++c) diff[c] = (*data)(i, c) - (*data)(j, c);
    return modular->scaled(diff, lambda);
  };
  return ModularFamily(PointSpace(std::move(labels)), std::move(eval), claims,
                       "orlicz[" + rho.integrand().name + "]");
}

std::vector<double> averaging(std::span<const double> u, const Partition& partition,
                              const DiscreteMeasureSpace& omega) {
  require_size(u.size(), omega.size(), "averaging");
  std::vector<double> out(u.size());
  for (std::size_t b = 0; b < partition.blocks().size(); ++b) {
    const auto& block = partition.blocks()[b];
    double sum = 0.0;
    for (std::size_t c : block) sum += u[c] * omega.mass(c);
    const double mean = sum / partition.block_mass(b);
    for (std::size_t c : block) out[c] = mean;
  }
  return out;
}

JensenGap jensen_gap(std::span<const double> u, const Partition& partition, const Integrand& phi,
                     const DiscreteMeasureSpace& omega, double lambda) {
  if (!phi.tags.convex_in_t) {
    throw PreconditionError("jensen_gap: integrand " + phi.name + " is not tagged convex",
                            Witness{"integrand_not_convex", {}, {}, phi.name});
  }
  const auto pu = averaging(u, partition, omega);
  std::vector<double> residual(u.size());
  for (std::size_t c = 0; c < u.size(); ++c) residual[c] = u[c] - pu[c];

  JensenGap gap;
  gap.lhs = rho_scaled(residual, lambda, phi, omega);
  XReal rhs;
  for (std::size_t b = 0; b < partition.blocks().size(); ++b) {
    const auto& block = partition.blocks()[b];
    XReal inner;
    for (std::size_t x : block) {
      for (std::size_t z : block) {
        inner += XReal(phi(x, std::abs(u[x] - u[z]) / lambda)) *
                 XReal(omega.mass(z) * omega.mass(x));
      }
    }
    rhs += inner * XReal(1.0 / partition.block_mass(b));
  }
  gap.rhs = rhs;
  return gap;
}

TranslationModulus translation_modulus(std::span<const double> u,
                                       const DiscreteMeasureSpace& omega,
                                       const std::vector<long>& shift, double lambda,
                                       const Integrand& phi) {
  const auto& g = require_grid(omega, "translation_modulus");
  require_size(u.size(), omega.size(), "translation_modulus");
  if (shift.size() != g.dims.size()) {
    throw std::invalid_argument("translation_modulus: shift needs one entry per grid axis");
  }
  if (!(lambda > 0.0)) throw std::domain_error("translation_modulus: lambda must be positive");

  TranslationModulus out;
  out.all_boundary = true;
  XReal total;
  for (std::size_t x = 0; x < u.size(); ++x) {
    const auto c = coordinates(g, x);
    bool inside = true;
    std::size_t target = 0;
    for (std::size_t a = 0; a < c.size(); ++a) {
      const long moved = static_cast<long>(c[a]) + shift[a];
      if (moved < 0 || moved >= static_cast<long>(g.dims[a])) {
        inside = false;
        break;
      }
      target = target * g.dims[a] + static_cast<std::size_t>(moved);
    }
    out.all_boundary = out.all_boundary && !inside;
    const double shifted = inside ? u[target] : 0.0;
    total += XReal(phi(x, std::abs(u[x] - shifted) / lambda)) * XReal(omega.mass(x));
  }
  out.value = total;
  return out;
}

TightnessResult tightness_check(const FunctionFamily& family, const Integrand& phi,
                                const DiscreteMeasureSpace& omega, double eps,
                                const LambdaGrid& lambda_grid) {
  require_size(family.cols(), omega.size(), "tightness_check");
  if (!(eps > 0.0 && eps < omega.total_mass())) {
    throw std::invalid_argument("tightness_check: eps must lie in (0, total mass)");
  }
  const std::size_t n = omega.size();
  std::vector<double> density(n, 0.0);
  for (std::size_t r = 0; r < family.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      density[c] = std::max(density[c], phi(c, std::abs(family(r, c))));
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return density[a] < density[b]; });

  TightnessResult out;
  std::vector<bool> dropped(n, false);
  for (std::size_t c : order) {
    if (out.discarded_mass + omega.mass(c) >= eps) break;
    out.discarded_mass += omega.mass(c);
    dropped[c] = true;
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (!dropped[c]) out.kept.push_back(c);
  }

  std::vector<std::vector<double>> tails(family.rows(), std::vector<double>(n, 0.0));
  for (std::size_t r = 0; r < family.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (dropped[c]) tails[r][c] = family(r, c);
    }
  }
  auto worst_at = [&](double lambda) {
    std::pair<double, std::size_t> worst{0.0, 0};
    for (std::size_t r = 0; r < tails.size(); ++r) {
      const double v = finite_or_inf(rho_scaled(tails[r], lambda, phi, omega));
      if (v > worst.first) worst = {v, r};
    }
    return worst;
  };
  const auto k = first_lambda(lambda_grid, phi.tags.convex_in_t,
                              [&](double l) { return worst_at(l).first <= eps; });
  const double lambda = k ? lambda_grid.values()[*k] : lambda_grid.values().back();
  const auto [value, arg] = worst_at(lambda);
  out.ok = k.has_value();
  out.lambda = lambda;
  out.modular = value;
  out.worst_function = arg;
  return out;
}

EmcResult emc_check(const FunctionFamily& family, const Integrand& phi,
                    const DiscreteMeasureSpace& omega, double eps, double delta,
                    const LambdaGrid& lambda_grid) {
  require_size(family.cols(), omega.size(), "emc_check");
  if (!(delta > 0.0 && delta < omega.total_mass())) {
    throw std::invalid_argument("emc_check: delta must lie in (0, total mass)");
  }
  if (!(eps > 0.0)) throw std::invalid_argument("emc_check: eps must be positive");
  const std::size_t n = omega.size();

  struct Worst {
    double value = 0.0;
    std::size_t function = 0;
    std::vector<std::size_t> set;
    double mass = 0.0;
  };
  auto worst_at = [&](double lambda) {
    Worst worst;
    std::vector<std::size_t> order(n);
    std::vector<double> density(n);
    for (std::size_t r = 0; r < family.rows(); ++r) {
      for (std::size_t c = 0; c < n; ++c) density[c] = phi(c, std::abs(family(r, c)) / lambda);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return density[a] > density[b]; });
      std::vector<std::size_t> set;
      double mass = 0.0;
      XReal value;
      for (std::size_t c : order) {
        if (density[c] == 0.0) break;
        if (mass + omega.mass(c) >= delta) continue;
        mass += omega.mass(c);
        value += XReal(density[c]) * XReal(omega.mass(c));
        set.push_back(c);
      }
      if (value.value() > worst.value || (r == 0 && worst.set.empty())) {
        std::sort(set.begin(), set.end());
        worst = {value.value(), r, std::move(set), mass};
      }
    }
    return worst;
  };

  const auto k = first_lambda(lambda_grid, phi.tags.convex_in_t,
                              [&](double l) { return worst_at(l).value <= eps; });
  const double lambda = k ? lambda_grid.values()[*k] : lambda_grid.values().back();
  Worst worst = worst_at(lambda);
  EmcResult out;
  out.ok = k.has_value();
  out.lambda = lambda;
  out.modular = worst.value;
  out.worst_function = worst.function;
  out.worst_set = std::move(worst.set);
  out.worst_set_mass = worst.mass;
  out.approximate = !omega.equal_masses();
  return out;
}

DiagnosticReport modular_convergence_check(const FunctionFamily& sequence,
                                           std::span<const double> limit, const Integrand& phi,
                                           const DiscreteMeasureSpace& omega, double tol,
                                           std::size_t horizon, const ConvergenceOptions& opts) {
  require_size(limit.size(), omega.size(), "modular_convergence_check");
  require_size(sequence.cols(), omega.size(), "modular_convergence_check");
  if (horizon == 0 || horizon > sequence.rows()) {
    throw std::invalid_argument("modular_convergence_check: horizon must lie in [1, length]");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("modular_convergence_check: tol must be positive");
  if (opts.n_max == 0) throw std::invalid_argument("modular_convergence_check: n_max must be >= 1");

  const std::size_t len = sequence.rows();
  std::vector<std::vector<double>> diffs(len, std::vector<double>(limit.size()));
  for (std::size_t k = 0; k < len; ++k) {
    for (std::size_t c = 0; c < limit.size(); ++c) diffs[k][c] = sequence(k, c) - limit[c];
  }
  // A tail starting at some K < horizon qualifies iff the last failing index
  // lies before horizon - 1.
  auto eventually = [&](auto&& holds) {
    std::size_t last_bad = 0;
    bool any_bad = false;
    for (std::size_t k = 0; k < len; ++k) {
      if (!holds(k)) {
        any_bad = true;
        last_bad = k;
      }
    }
    return !any_bad || last_bad + 1 < horizon;
  };

  SearchOptions search;
  search.tol = tol;
  const OrliczModular modular(phi, omega);
  std::vector<double> dstar(len);
  std::vector<double> dzero(len);
  const bool with_d0 = phi.tags.delta2_at_infinity;
  for (std::size_t k = 0; k < len; ++k) {
    dstar[k] = luxemburg(modular, diffs[k], search).value.value();
    if (with_d0) {
      const auto& f = diffs[k];
      auto pred = [&](double l) { return modular.scaled(f, l) <= XReal(l); };
      dzero[k] = modular.scaled(f, search.floor).is_zero() ? 0.0
                                                            : infimum_monotone(pred, search).value.value();
    }
  }

  bool uniform = true;
  bool modular_ok = true;
  bool gauge = true;
  bool d0_ok = true;
  std::optional<std::size_t> first_fail[4];
  for (std::size_t n = 1; n <= opts.n_max; ++n) {
    const double inv = 1.0 / static_cast<double>(n);
    const bool c1 = eventually([&](std::size_t k) {
      return modular.scaled(diffs[k], inv) < XReal(inv);
    });
    bool c2 = false;
    for (double l : opts.lambda_grid.values()) {
      if (l > inv) break;
      if (eventually([&](std::size_t k) { return modular.scaled(diffs[k], l) < XReal(inv); })) {
        c2 = true;
        break;
      }
    }
    const bool c3 = eventually([&](std::size_t k) { return dstar[k] < inv; });
    const bool c0 = !with_d0 || eventually([&](std::size_t k) { return dzero[k] < inv; });
    const bool flags[4] = {c1, c2, c3, c0};
    for (int f = 0; f < 4; ++f) {
      if (!flags[f] && !first_fail[f]) first_fail[f] = n;
    }
    uniform = uniform && c1;
    modular_ok = modular_ok && c2;
    gauge = gauge && c3;
    d0_ok = d0_ok && c0;
  }

  DiagnosticReport report;
  report.check = "modular_convergence";
  report.metric("uniform", uniform ? 1.0 : 0.0);
  report.metric("modular", modular_ok ? 1.0 : 0.0);
  report.metric("gauge", gauge ? 1.0 : 0.0);
  if (with_d0) report.metric("d0", d0_ok ? 1.0 : 0.0);
  report.metric("final_dstar", dstar.back());
  const bool agree = uniform == modular_ok && modular_ok == gauge && (!with_d0 || gauge == d0_ok);
  if (!agree) {
    Witness w{"disagreement", {}, {}, "convergence notions disagree"};
    const char* names[4] = {"uniform", "modular", "gauge", "d0"};
    for (int f = 0; f < 4; ++f) {
      if (first_fail[f]) w.with(std::string(names[f]) + "_first_failing_n", static_cast<double>(*first_fail[f]));
    }
    report.fail(std::move(w), "convergence notions disagree up to n_max");
  } else {
    report.summary = uniform ? "all convergence notions hold up to n_max"
                             : "no convergence notion holds up to n_max";
  }
  if (!phi.tags.delta2_at_infinity) {
    report.notes.push_back(
        "integrand fails Delta_2 at infinity; d0 agreement is not asserted, and this does not "
        "affect sequences whose differences tend to 0");
  }
  return report;
}

}  // namespace modspace::orlicz
