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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modspace/modular.hpp"
#include "modspace/report.hpp"
#include "modspace/xreal.hpp"

namespace modspace::orlicz {

/// Regular grid layout of the cells (row-major for 2-D), with mesh size eta.
struct GridLayout {
  std::vector<std::size_t> dims;
  double mesh = 1.0;

  std::size_t cell_count() const;
};

/// Finitely many cells with positive masses.
class DiscreteMeasureSpace {
 public:
  explicit DiscreteMeasureSpace(std::vector<double> masses,
                                std::optional<GridLayout> grid = std::nullopt);

  /// n equal cells tiling [0, length].
  static DiscreteMeasureSpace uniform_1d(std::size_t n, double length = 1.0);
  /// nx * ny equal square cells tiling [0, length]^2 (length along x).
  static DiscreteMeasureSpace uniform_2d(std::size_t nx, std::size_t ny, double length = 1.0);

  std::size_t size() const { return masses_.size(); }
  double mass(std::size_t i) const { return masses_[i]; }
  const std::vector<double>& masses() const { return masses_; }
  double total_mass() const { return total_; }
  const std::optional<GridLayout>& grid() const { return grid_; }
  bool equal_masses() const;

  /// Center of cell i along each grid axis (requires a grid).
  std::vector<double> position(std::size_t i) const;

 private:
  std::vector<double> masses_;
  std::optional<GridLayout> grid_;
  double total_ = 0.0;
};

struct IntegrandTags {
  bool convex_in_t = false;
  bool delta2_at_infinity = false;
};

/// Caratheodory integrand Phi(cell, t) >= 0 with Phi(cell, 0) = 0,
/// nondecreasing in t.
struct Integrand {
  std::function<double(std::size_t cell, double t)> eval;
  IntegrandTags tags;
  std::string name;

  double operator()(std::size_t cell, double t) const { return eval(cell, t); }
};

/// Phi(t) = t^p, p >= 1.
Integrand lp(double p);
/// Phi(t) = exp(t^2) - 1; Delta_2 fails at infinity.
Integrand exp_squared();
/// Phi(x, t) = t^{p(x)}, exponents in (1, inf).
Integrand variable_exponent(std::vector<double> exponents);

/// Sampled validation of the integrand contract on every cell: Phi(x,0) = 0,
/// monotone in t, and midpoint convexity when tagged convex.
DiagnosticReport validate_integrand(const Integrand& phi, const DiscreteMeasureSpace& omega);

/// m functions sampled on n cells, row-major.
class FunctionFamily {
 public:
  FunctionFamily(std::size_t rows, std::size_t cols);
  static FunctionFamily from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::vector<double> row_vector(std::size_t r) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

/// Disjoint blocks of cell indices covering every cell.
class Partition {
 public:
  Partition(std::vector<std::vector<std::size_t>> blocks, const DiscreteMeasureSpace& omega);

  /// Contiguous blocks of `block_cells` cells along a 1-D grid, or square
  /// blocks of side `block_cells` on a 2-D grid.
  static Partition dyadic_blocks(const DiscreteMeasureSpace& omega, std::size_t block_cells);
  static Partition singletons(const DiscreteMeasureSpace& omega);
  static Partition whole(const DiscreteMeasureSpace& omega);

  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
  double block_mass(std::size_t b) const { return block_mass_[b]; }
  /// Largest block extent along any grid axis, in cells.
  std::size_t max_block_extent(const DiscreteMeasureSpace& omega) const;

 private:
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<double> block_mass_;
};

/// rho(f) = sum_i Phi(x_i, |f_i|) mu_i.
XReal rho(std::span<const double> f, const Integrand& phi, const DiscreteMeasureSpace& omega);
/// rho(f / lambda).
XReal rho_scaled(std::span<const double> f, double lambda, const Integrand& phi,
                 const DiscreteMeasureSpace& omega);

/// The modular functional rho bound to an integrand and a measure space.
class OrliczModular {
 public:
  OrliczModular(Integrand phi, DiscreteMeasureSpace omega);

  XReal operator()(std::span<const double> f) const { return rho(f, phi_, omega_); }
  XReal scaled(std::span<const double> f, double lambda) const {
    return rho_scaled(f, lambda, phi_, omega_);
  }
  const Integrand& integrand() const { return phi_; }
  const DiscreteMeasureSpace& measure() const { return omega_; }

 private:
  Integrand phi_;
  DiscreteMeasureSpace omega_;
};

/// w_lambda(u, v) = rho((u - v) / lambda) over the registered function
/// vectors (rows of the family). Claims convex when Phi is tagged convex.
ModularFamily induced_modular(const OrliczModular& rho, const FunctionFamily& vectors,
                              std::vector<std::string> labels = {});

/// Block-wise mu-weighted mean projection.
std::vector<double> averaging(std::span<const double> u, const Partition& partition,
                              const DiscreteMeasureSpace& omega);

struct JensenGap {
  XReal lhs;
  XReal rhs;
};

/// lhs = rho((u - Pu)/lambda), rhs = the double-average bound
///   sum_i 1/mu(Q_i) sum_{x,z in Q_i} Phi(x, |u(x)-u(z)|/lambda) mu(z) mu(x).
/// Requires Phi tagged convex.
JensenGap jensen_gap(std::span<const double> u, const Partition& partition, const Integrand& phi,
                     const DiscreteMeasureSpace& omega, double lambda);

struct TranslationModulus {
  XReal value;
  /// The shift moves every cell off the grid.
  bool all_boundary = false;
};

/// sum_x Phi(x, |u(x) - u(x+y)|/lambda) mu(x) with u extended by zero outside
/// the grid. `shift` has one entry per grid axis (in cells).
TranslationModulus translation_modulus(std::span<const double> u,
                                       const DiscreteMeasureSpace& omega,
                                       const std::vector<long>& shift, double lambda,
                                       const Integrand& phi);

struct TightnessResult {
  bool ok = false;
  std::vector<std::size_t> kept;  // E
  double discarded_mass = 0.0;    // mu(Omega \ E)
  double lambda = 0.0;            // lambda_T
  double modular = 0.0;           // max_u rho((u - u chi_E)/lambda_T)
  std::size_t worst_function = 0;
};

/// Tightness (T): drops the cells with the smallest max-over-family Phi
/// density while mu(Omega \ E) < eps, then scans lambda_grid ascending for
/// the first lambda with max_u rho((u - u chi_E)/lambda) <= eps.
TightnessResult tightness_check(const FunctionFamily& family, const Integrand& phi,
                                const DiscreteMeasureSpace& omega, double eps,
                                const LambdaGrid& lambda_grid);

struct EmcResult {
  bool ok = false;
  double lambda = 0.0;  // lambda_C
  double modular = 0.0;
  std::size_t worst_function = 0;
  std::vector<std::size_t> worst_set;  // B for the worst function
  double worst_set_mass = 0.0;
  /// Greedy B is exact only for equal cell masses.
  bool approximate = false;
};

/// Equi-modular continuity (EMC): for each candidate lambda and each u the
/// worst B with mu(B) < delta is filled greedily by descending
/// Phi(x, |u|/lambda); returns the smallest grid lambda with
/// sup_u rho(u chi_B / lambda) <= eps. Convex Phi uses binary search over
/// the grid since the predicate is then monotone.
EmcResult emc_check(const FunctionFamily& family, const Integrand& phi,
                    const DiscreteMeasureSpace& omega, double eps, double delta,
                    const LambdaGrid& lambda_grid);

struct ConvergenceOptions {
  std::size_t n_max = 8;
  LambdaGrid lambda_grid = LambdaGrid::log_spaced(1e-4, 1e4, 48);
};

/// Finite-resolution check that, for the rows u_k of `sequence` and the
/// limit u, three convergence notions agree:
///   (1) uniform: for each n <= n_max the tail from some K <= horizon lies
///       in V_n, i.e. rho(n (u_k - u)) < 1/n;
///   (2) modular: for each eps = 1/n some grid lambda <= 1/n gives
///       rho((u_k - u)/lambda) < eps on a tail from K <= horizon;
///   (3) gauge: d*(u_k, u) < 1/n on such a tail for each n.
/// When Phi is tagged Delta_2 at infinity, d0-convergence is checked too.
/// tol is the bisection tolerance of the gauges.
DiagnosticReport modular_convergence_check(const FunctionFamily& sequence,
                                           std::span<const double> limit, const Integrand& phi,
                                           const DiscreteMeasureSpace& omega, double tol,
                                           std::size_t horizon,
                                           const ConvergenceOptions& opts = {});

}  // namespace modspace::orlicz
