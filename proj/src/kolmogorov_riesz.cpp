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

#include "modspace/kolmogorov_riesz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "modspace/gauges.hpp"

namespace modspace::orlicz {
namespace {

std::vector<double> difference(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) out[c] = a[c] - b[c];
  return out;
}

bool refines(const Partition& fine, const Partition& coarse, std::size_t cells) {
  std::vector<std::size_t> block_of(cells);
  for (std::size_t b = 0; b < coarse.blocks().size(); ++b) {
    for (std::size_t c : coarse.blocks()[b]) block_of[c] = b;
  }
  return std::all_of(fine.blocks().begin(), fine.blocks().end(), [&](const auto& block) {
    return std::all_of(block.begin(), block.end(),
                       [&](std::size_t c) { return block_of[c] == block_of[block.front()]; });
  });
}

double norm(const OrliczModular& rho, std::span<const double> f, const SearchOptions& search) {
  return luxemburg(rho, f, search).value.value();
}

std::string eps_key(const char* name, double eps) {
  return std::string(name) + "[eps=" + format_double(eps) + "]";
}

}  // namespace

DistanceMatrix dstar_matrix(const FunctionFamily& family, const OrliczModular& rho,
                            const SearchOptions& search) {
  DistanceMatrix d;
  d.values = SquareMatrix(family.rows(), 0.0);
  d.provenance = "dstar(orlicz[" + rho.integrand().name + "])";
  for (std::size_t a = 0; a < family.rows(); ++a) {
    for (std::size_t b = a + 1; b < family.rows(); ++b) {
      const double v = norm(rho, difference(family.row(a), family.row(b)), search);
      d.values(a, b) = v;
      d.values(b, a) = v;
    }
  }
  return d;
}

KrResult kr_compactness(const FunctionFamily& family, const Integrand& phi,
                        const DiscreteMeasureSpace& omega, const KrOptions& opts) {
  if (family.cols() != omega.size()) {
    throw std::invalid_argument("kr_compactness: family width does not match the cell count");
  }
  if (opts.eps_ladder.empty()) throw std::invalid_argument("kr_compactness: empty eps ladder");
  for (std::size_t k = 0; k < opts.eps_ladder.size(); ++k) {
    if (!(opts.eps_ladder[k] > 0.0) || (k > 0 && !(opts.eps_ladder[k] < opts.eps_ladder[k - 1]))) {
      throw std::invalid_argument("kr_compactness: eps ladder must be positive and decreasing");
    }
  }
  if (opts.partitions.empty()) throw std::invalid_argument("kr_compactness: no partitions");
  for (std::size_t k = 1; k < opts.partitions.size(); ++k) {
    if (!refines(opts.partitions[k], opts.partitions[k - 1], omega.size())) {
      throw std::invalid_argument("kr_compactness: partition " + std::to_string(k) +
                                  " does not refine partition " + std::to_string(k - 1));
    }
  }
  if (!phi.tags.convex_in_t) {
    throw PreconditionError("kr_compactness: integrand " + phi.name + " is not tagged convex",
                            Witness{"integrand_not_convex", {}, {}, phi.name});
  }

  KrResult out;
  DiagnosticReport& report = out.report;
  report.check = "kolmogorov_riesz";
  report.notes.push_back("translations extend functions by zero outside the grid");
  const OrliczModular rho(phi, omega);
  const double eps = opts.eps_ladder.front();

  auto stage_fail = [&](const std::string& stage, Witness w, const std::string& why) {
    w.detail = stage;
    report.fail(std::move(w), "stage " + stage + " failed: " + why);
  };

  // Boundedness: some grid lambda with sup_u rho(u / lambda) finite.
  for (double l : opts.lambda_grid.values()) {
    bool finite = true;
    for (std::size_t r = 0; r < family.rows() && finite; ++r) {
      finite = rho.scaled(family.row(r), l).is_finite();
    }
    if (finite) {
      out.bounded_lambda = l;
      break;
    }
  }
  if (!out.bounded_lambda) {
    stage_fail("bounded", Witness{"unbounded", {}, {{"lambda_cap", opts.lambda_grid.cap()}}, ""},
               "sup_u rho(u/lambda) is infinite at every grid lambda");
    return out;
  }
  report.metric("bounded_lambda", *out.bounded_lambda);

  out.tightness = tightness_check(family, phi, omega, eps, opts.lambda_grid);
  report.metric("lambda_T", out.tightness.lambda);
  report.metric("tightness_modular", out.tightness.modular);
  report.metric("tightness_discarded_mass", out.tightness.discarded_mass);
  if (!out.tightness.ok) {
    stage_fail("tightness",
               Witness{"tightness", {out.tightness.worst_function},
                       {{"eps", eps}, {"lambda", out.tightness.lambda}, {"modular", out.tightness.modular}}, ""},
               "no grid lambda makes the tail modular <= eps");
    return out;
  }

  const double delta =
      opts.emc_delta.value_or(std::min(eps * omega.total_mass(), 0.5 * omega.total_mass()));
  out.emc = emc_check(family, phi, omega, eps, delta, opts.lambda_grid);
  report.metric("emc_delta", delta);
  report.metric("lambda_C", out.emc.lambda);
  report.metric("emc_modular", out.emc.modular);
  if (out.emc.approximate) report.notes.push_back("EMC worst sets are greedy approximations (unequal masses)");
  if (!out.emc.ok) {
    stage_fail("emc",
               Witness{"emc", {out.emc.worst_function},
                       {{"eps", eps}, {"delta", delta}, {"lambda", out.emc.lambda}, {"modular", out.emc.modular}}, ""},
               "no grid lambda makes the small-set modular <= eps");
    return out;
  }

  out.lambda_total = out.tightness.lambda + out.emc.lambda;
  const double big_lambda = out.lambda_total;
  report.metric("Lambda", big_lambda);

  for (std::size_t p = 0; p < opts.partitions.size(); ++p) {
    const Partition& part = opts.partitions[p];
    PartitionStage st;
    st.blocks = part.blocks().size();
    if (omega.grid()) st.max_extent = part.max_block_extent(omega);
    for (std::size_t r = 0; r < family.rows(); ++r) {
      const auto u = family.row(r);
      const JensenGap gap = jensen_gap(u, part, phi, omega, big_lambda);
      st.jensen_lhs = std::max(st.jensen_lhs, gap.lhs.value());
      st.jensen_rhs = std::max(st.jensen_rhs, gap.rhs.value());
      if (gap.lhs > gap.rhs + XReal(opts.contract_tol * std::max(1.0, gap.rhs.value()))) {
        st.jensen_ok = false;
      }
      const auto pu = averaging(u, part, omega);
      st.projection_error = std::max(st.projection_error, norm(rho, difference(u, pu), opts.search));
      if (omega.grid()) {
        std::vector<long> shift(omega.grid()->dims.size(), 0);
        shift[0] = static_cast<long>(st.max_extent);
        st.translation = std::max(
            st.translation, translation_modulus(u, omega, shift, big_lambda, phi).value.value());
      }
    }
    const std::string tag = "[partition=" + std::to_string(p) + "]";
    report.metric("jensen_lhs" + tag, st.jensen_lhs);
    report.metric("jensen_rhs" + tag, st.jensen_rhs);
    report.metric("c1_ratio" + tag, st.jensen_lhs / eps);
    report.metric("c2_ratio" + tag, st.translation / eps);
    report.metric("projection_error" + tag, st.projection_error);
    out.partitions.push_back(st);
    if (!st.jensen_ok) {
      stage_fail("jensen",
                 Witness{"jensen", {}, {{"partition", static_cast<double>(p)},
                                        {"lhs", st.jensen_lhs}, {"rhs", st.jensen_rhs}}, ""},
                 "rho((u - Pu)/Lambda) exceeds the double-average bound");
      return out;
    }
  }

  // Split-scale subadditivity on pairs of rows at (lambda_T, lambda_C).
  for (std::size_t a = 0; a < family.rows(); ++a) {
    for (std::size_t b = 0; b < family.rows(); ++b) {
      std::vector<double> sum(family.cols());
      for (std::size_t c = 0; c < sum.size(); ++c) sum[c] = family(a, c) + family(b, c);
      const XReal lhs = rho.scaled(sum, big_lambda);
      const XReal rhs = rho.scaled(family.row(a), out.tightness.lambda) +
                        rho.scaled(family.row(b), out.emc.lambda);
      if (rhs.is_finite() && lhs.value() > rhs.value() + opts.contract_tol * std::max(1.0, rhs.value())) {
        stage_fail("subadditivity",
                   Witness{"subadditivity", {a, b}, {{"lhs", lhs.value()}, {"rhs", rhs.value()}}, ""},
                   "rho((a+b)/(l1+l2)) > rho(a/l1) + rho(b/l2) on sampled rows");
        return out;
      }
    }
  }

  const Partition& finest = opts.partitions.back();
  FunctionFamily projected(family.rows(), family.cols());
  for (std::size_t r = 0; r < family.rows(); ++r) {
    const auto pu = averaging(family.row(r), finest, omega);
    std::copy(pu.begin(), pu.end(), projected.row(r).begin());
  }
  const DistanceMatrix d_projected = dstar_matrix(projected, rho, opts.search);
  const DistanceMatrix d_family = dstar_matrix(family, rho, opts.search);
  const double projection_error = out.partitions.back().projection_error;

  for (double e : opts.eps_ladder) {
    NetStage ns;
    ns.epsilon = e;
    ns.projected = epsilon_net(d_projected, e);
    for (std::size_t r = 0; r < family.rows(); ++r) {
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t c : ns.projected.centers) {
        best = std::min(best, norm(rho, difference(family.row(r), projected.row(c)), opts.search));
      }
      ns.cover_radius = std::max(ns.cover_radius, best);
    }
    ns.family = epsilon_net(d_family, e);
    ns.saturated = family.rows() > 1 && ns.family.centers.size() == family.rows();
    ns.ok = projection_error <= e;
    report.metric(eps_key("net_size_projected", e), static_cast<double>(ns.projected.centers.size()));
    report.metric(eps_key("cover_radius", e), ns.cover_radius);
    report.metric(eps_key("net_size_family", e), static_cast<double>(ns.family.centers.size()));
    out.nets.push_back(ns);
    if (!ns.ok && !report.failed()) {
      Witness w{"net", {}, {{"eps", e}, {"projection_error", projection_error},
                            {"family_net_size", static_cast<double>(ns.family.centers.size())}}, ""};
      stage_fail("net", std::move(w),
                 ns.saturated ? "non-compact evidence: every member needs its own center at eps=" +
                                    format_double(e)
                              : "projection error exceeds eps=" + format_double(e));
    }
  }
  if (!report.failed()) report.summary = "relatively compact evidence (desk-scale)";
  return out;
}

}  // namespace modspace::orlicz
