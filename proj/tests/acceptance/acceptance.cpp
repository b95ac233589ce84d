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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Oracles are computed here independently of the library
// wherever a closed form or brute force exists.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "modspace/builders.hpp"
#include "modspace/cli.hpp"
#include "modspace/compactness.hpp"
#include "modspace/gauges.hpp"
#include "modspace/kolmogorov_riesz.hpp"
#include "modspace/orlicz.hpp"
#include "modspace/random.hpp"
#include "modspace/topology.hpp"

namespace {

using namespace modspace;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

PointSpace pair_space(double d) {
  return PointSpace({"x", "y"}, SquareMatrix::from_rows({{0, d}, {d, 0}}));
}

PointSpace line(const std::vector<double>& xs) {
  SquareMatrix d(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) d(i, j) = std::abs(xs[i] - xs[j]);
  }
  return PointSpace(default_labels(xs.size()), std::move(d));
}

double lp_norm(const std::vector<double>& f, const std::vector<double>& masses, double p) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += std::pow(std::abs(f[i]), p) * masses[i];
  return std::pow(s, 1.0 / p);
}

std::vector<double> dyadic_radii() {
  std::vector<double> out;
  for (int k = 0; k <= 24; ++k) out.push_back(std::ldexp(1.0, -k));
  return out;
}

// Shared corpus for criteria 2 and 3: 50 random 8-point spaces with convex
// scaled modulars (power scale p >= 1).
std::vector<ModularFamily> sandwich_corpus() {
  gen::Rng rng(2002);
  std::vector<ModularFamily> out;
  for (int s = 0; s < 50; ++s) {
    const double side = rng.uniform(0.5, 10.0);
    const auto space = gen::random_metric_space(rng, 8, side, 0.01 * side);
    out.push_back(from_scaled_metric(space, power_scale(rng.uniform(1.0, 3.0))));
  }
  return out;
}

Outcome closed_form_gauge() {
  gen::Rng rng(1001);
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double d = 100.0 - rng.uniform(0.0, 100.0);  // (0, 100]
    for (double p : {0.0, 1.0, 2.0, 3.0}) {
      const auto w = from_scaled_metric(pair_space(d), power_scale(p));
      worst = std::max(worst, std::abs(d0(w, 0, 1).value.value() - std::pow(d, 1.0 / (p + 1.0))));
    }
  }
  return {worst <= 1e-8, "max |d0 - d^(1/(p+1))| = " + fmt(worst) + " over 800 cases"};
}

Outcome sandwich() {
  double worst = -1e300;
  for (const auto& w : sandwich_corpus()) {
    const auto a = gauge_matrix(w, GaugeKind::kD0).matrix;
    const auto b = gauge_matrix(w, GaugeKind::kDstar).matrix;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        const double s = b(i, j), r = std::sqrt(s);
        worst = std::max({worst, std::min(s, r) - a(i, j), a(i, j) - std::max(s, r)});
      }
    }
  }
  return {worst <= 1e-8, "max excess outside [min(d*,sqrt d*), max(d*,sqrt d*)] = " + fmt(std::max(worst, 0.0))};
}

Outcome phi_sandwich() {
  double worst = -1e300;
  for (const auto& w : sandwich_corpus()) {
    for (const auto& phi : {phi_identity(), phi_power(2.0)}) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
          const double lo = d0_phi(w, phi, i, j).value.value();
          const double hi = d1_phi(w, phi, i, j).value.value();
          worst = std::max({worst, lo - hi, hi - 2.0 * lo});
        }
      }
    }
  }
  return {worst <= 1e-8, "max violation of d0_phi <= d1_phi <= 2 d0_phi = " + fmt(std::max(worst, 0.0))};
}

Outcome lp_equivalence() {
  gen::Rng rng(4004);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = 1 + rng.index(16);
    std::vector<double> masses(n), u(n), v(n), diff(n);
    for (std::size_t i = 0; i < n; ++i) {
      masses[i] = rng.uniform(0.05, 1.0);
      u[i] = rng.uniform(-5.0, 5.0);
      v[i] = rng.uniform(-5.0, 5.0);
      diff[i] = u[i] - v[i];
    }
    const double p = std::vector<double>{1.0, 2.0, 4.0}[k % 3];
    const orlicz::OrliczModular rho(orlicz::lp(p), orlicz::DiscreteMeasureSpace(masses));
    const auto w = orlicz::induced_modular(rho, orlicz::FunctionFamily::from_rows({u, v}));
    const double oracle = lp_norm(diff, masses, p);
    worst = std::max(worst, std::abs(dstar(w, 0, 1).value.value() - oracle) / oracle);
  }
  return {worst <= 1e-8, "max relative error vs closed-form Lp norm = " + fmt(worst) + " over 100 pairs"};
}

Outcome delta2() {
  std::vector<double> xs{0.0};
  for (int k = 2; k <= 41; ++k) xs.push_back(1.0 - 1.0 / k);
  Delta2Sequence step_seq{{}, 0};
  for (std::size_t i = 1; i < xs.size(); ++i) step_seq.points.push_back(i);
  const auto step = delta2_diagnostic(step_modular(line(xs)), {step_seq}, {1.0}, 10, 0.05);
  const bool step_ok = step.failed() && !step.witnesses.empty() && step.witnesses.front().kind == "delta2";

  gen::Rng rng(5005);
  std::size_t clean = 0;
  for (int s = 0; s < 20; ++s) {
    const auto seq = gen::power_sequence(rng.uniform(0.5, 2.0), rng.uniform(1.0, 2.0), 400);
    const auto r = delta2_diagnostic(from_scaled_metric(seq.space, power_scale(1.0)), {seq.sequence},
                                     {0.5, 1.0, 2.0}, 50, 0.05);
    if (r.passed() && r.summary == "no violation found") ++clean;
  }
  return {step_ok && clean == 20, std::string("step fixture ") + (step_ok ? "violates" : "does NOT violate") +
                                      "; scaled: " + std::to_string(clean) + "/20 sequences without violation"};
}

Outcome topology() {
  gen::Rng rng(6006);
  std::size_t mutual = 0;
  for (int s = 0; s < 20; ++s) {
    const auto w = from_scaled_metric(gen::random_metric_space(rng, 6), power_scale(rng.uniform(1.0, 3.0)));
    const auto v = refinement_compare(metrize_uniformity(w, 16).chained, gauge_matrix(w, GaugeKind::kD0).matrix,
                                      dyadic_radii());
    if (v.direction == Direction::kMutual) ++mutual;
  }
  const auto ws = step_modular(line({0.0, 0.03, 0.3, 0.7, 1.6}));
  const auto v = refinement_compare(metrize_uniformity(ws, 16).chained, gauge_matrix(ws, GaugeKind::kD0).matrix,
                                    dyadic_radii());
  const bool step_ok = v.direction != Direction::kMutual && !v.witnesses.empty();
  return {mutual == 20 && step_ok, std::to_string(mutual) + "/20 scaled spaces mutual; step fixture " +
                                       to_string(v.direction) + " with " + std::to_string(v.witnesses.size()) +
                                       " witnesses"};
}

// Classes of random traces: geometric convergence, eventually constant, and
// alternation between separated points.
SequenceTrace random_trace(gen::Rng& rng, std::vector<double>& xs) {
  const std::size_t len = 40 + rng.index(20);
  SequenceTrace t;
  const double anchor = rng.uniform(-1.0, 1.0);
  const std::size_t cls = rng.index(3);
  const double r = rng.uniform(0.2, 0.6);
  double step = rng.uniform(0.5, 2.0);
  const std::size_t settle = rng.index(len / 2);
  const double gap = rng.uniform(0.5, 3.0);
  for (std::size_t k = 0; k < len; ++k, step *= r) {
    t.points.push_back(xs.size());
    if (cls == 0) {
      xs.push_back(anchor + (k % 2 == 0 ? step : -step));
    } else if (cls == 1) {
      xs.push_back(k >= settle ? anchor : rng.uniform(-3.0, 3.0));
    } else {
      xs.push_back(anchor + (k % 2 == 0 ? 0.0 : gap));
    }
  }
  return t;
}

Outcome cauchy() {
  gen::Rng rng(7007);
  std::size_t agree = 0, cauchy_count = 0;
  for (int k = 0; k < 100; ++k) {
    std::vector<double> xs;
    const auto t = random_trace(rng, xs);
    const auto w = from_scaled_metric(line(xs), power_scale(rng.uniform(1.0, 3.0)));
    const auto r = cauchy_equivalence(t, w, {6, 0});
    if (r.passed()) ++agree;
    if (*r.get_metric("v_cauchy") == 1.0) ++cauchy_count;
  }
  return {agree == 100, std::to_string(agree) + "/100 traces classified identically (" + std::to_string(cauchy_count) +
                            " Cauchy)"};
}

Outcome composition() {
  gen::Rng rng(8008);
  std::size_t checks = 0, failures = 0;
  for (int s = 0; s < 5; ++s) {
    const auto space = gen::random_metric_space(rng, 6);
    std::vector<std::vector<std::vector<double>>> traj(6);
    for (auto& p : traj) {
      for (int t = 0; t < 3; ++t) p.push_back({rng.uniform(-1, 1)});
    }
    std::vector<std::vector<double>> rows;
    for (int r = 0; r < 6; ++r) rows.push_back({rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)});
    const std::vector<ModularFamily> ws{
        from_scaled_metric(space, power_scale(rng.uniform(0.0, 3.0))),
        from_saturating_metric(space, power_growth(rng.uniform(0.5, 2.0), rng.uniform(0.0, 2.0))),
        step_modular(space),
        from_exponential_family({0.0, 0.5, 1.0}, traj),
        orlicz::induced_modular(orlicz::OrliczModular(orlicz::lp(2.0), orlicz::DiscreteMeasureSpace::uniform_1d(3)),
                                orlicz::FunctionFamily::from_rows(rows))};
    for (const auto& w : ws) {
      for (std::size_t n = 1; n <= 16; ++n) {
        ++checks;
        if (!composition_check(w, n).passed()) ++failures;
      }
    }
  }
  return {failures == 0, std::to_string(checks - failures) + "/" + std::to_string(checks) +
                             " (builder, n) pairs satisfy V_2n o V_2n in V_n"};
}

// Exact minimum number of open radius-r balls centered at rows covering the
// family, by subset enumeration over directly computed Lp distances.
std::size_t min_cover(const orlicz::FunctionFamily& f, const std::vector<double>& masses, double p, double r) {
  const std::size_t m = f.rows();
  std::vector<std::vector<double>> d(m, std::vector<double>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<double> diff(f.cols());
      for (std::size_t i = 0; i < f.cols(); ++i) diff[i] = f(a, i) - f(b, i);
      d[a][b] = lp_norm(diff, masses, p);
    }
  }
  std::size_t best = m;
  for (unsigned long mask = 1; mask < (1ul << m); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountl(mask));
    if (size >= best) continue;
    bool covers = true;
    for (std::size_t a = 0; a < m && covers; ++a) {
      bool hit = false;
      for (std::size_t c = 0; c < m && !hit; ++c) hit = ((mask >> c) & 1ul) && d[a][c] < r;
      covers = hit;
    }
    if (covers) best = size;
  }
  return best;
}

Outcome kr_positive() {
  std::vector<double> slopes;
  for (int k = 0; k <= 10; ++k) slopes.push_back(k / 10.0);
  std::size_t sizes[2] = {0, 0};
  bool stages = true, oracle = true;
  const std::size_t cells[2] = {64, 128};
  for (int g = 0; g < 2; ++g) {
    const auto omega = orlicz::DiscreteMeasureSpace::uniform_1d(cells[g]);
    const auto fam = gen::lipschitz_family(slopes, cells[g]);
    orlicz::KrOptions o;
    o.eps_ladder = {0.5, 0.2, 0.1};
    o.partitions = {orlicz::Partition::dyadic_blocks(omega, cells[g] / 8),
                    orlicz::Partition::dyadic_blocks(omega, cells[g] / 16)};
    const auto res = orlicz::kr_compactness(fam, orlicz::lp(2.0), omega, o);
    stages = stages && res.report.passed() && res.tightness.ok && res.emc.ok;
    for (const auto& st : res.partitions) stages = stages && st.jensen_ok;
    for (const auto& ns : res.nets) stages = stages && ns.ok;
    sizes[g] = res.nets.back().family.centers.size();
    oracle = oracle && sizes[g] >= min_cover(fam, omega.masses(), 2.0, 0.1) &&
             sizes[g] <= min_cover(fam, omega.masses(), 2.0, 0.05);
  }
  const bool pass = stages && oracle && sizes[0] <= 11 && sizes[0] == sizes[1];
  return {pass, std::string("stages ") + (stages ? "pass" : "FAIL") + "; net size at eps=0.1: " +
                    std::to_string(sizes[0]) + " (64 cells), " + std::to_string(sizes[1]) +
                    " (128 cells); oracle bounds " + (oracle ? "hold" : "VIOLATED")};
}

Outcome kr_negative() {
  const auto omega = orlicz::DiscreteMeasureSpace::uniform_1d(64);
  const auto fam = gen::rademacher_family(16, 64);
  const auto d = orlicz::dstar_matrix(fam, orlicz::OrliczModular(orlicz::lp(1.0), omega));
  double worst = 0.0;
  for (std::size_t i = 0; i < 16; ++i) {
    for (std::size_t j = 0; j < 16; ++j) {
      std::vector<double> diff(64);
      for (std::size_t c = 0; c < 64; ++c) diff[c] = fam(i, c) - fam(j, c);
      const double exact = lp_norm(diff, omega.masses(), 1.0);
      worst = std::max({worst, std::abs(d(i, j) - exact), i == j ? 0.0 : std::abs(exact - 1.0)});
    }
  }
  orlicz::KrOptions o;
  o.eps_ladder = {0.5};
  o.partitions = {orlicz::Partition::dyadic_blocks(omega, 8), orlicz::Partition::dyadic_blocks(omega, 4)};
  const auto res = orlicz::kr_compactness(fam, orlicz::lp(1.0), omega, o);
  const std::size_t centers = res.nets.empty() ? 0 : res.nets[0].family.centers.size();
  const bool non_compact = res.report.failed() && res.report.summary.find("non-compact evidence") != std::string::npos;
  return {worst <= 1e-9 && centers == 16 && non_compact,
          "max |d* - 1| off-diagonal = " + fmt(worst) + "; eps=1/2 net has " + std::to_string(centers) +
              " centers; verdict: " + res.report.summary};
}

Outcome jensen() {
  gen::Rng rng(1111);
  double worst = -1e300;
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = 1 + rng.index(16);
    std::vector<double> masses(n), u(n);
    for (std::size_t i = 0; i < n; ++i) {
      masses[i] = rng.uniform(0.05, 1.0);
      u[i] = rng.uniform(-3.0, 3.0);
    }
    const orlicz::DiscreteMeasureSpace omega(masses);
    std::vector<std::vector<std::size_t>> blocks(1 + rng.index(n));
    for (std::size_t i = 0; i < n; ++i) blocks[i < blocks.size() ? i : rng.index(blocks.size())].push_back(i);
    std::vector<double> exps(n);
    for (double& e : exps) e = rng.uniform(1.1, 3.0);
    const orlicz::Integrand phis[3] = {orlicz::lp(rng.uniform(1.0, 4.0)), orlicz::exp_squared(),
                                       orlicz::variable_exponent(exps)};
    const auto g = orlicz::jensen_gap(u, orlicz::Partition(blocks, omega), phis[k % 3], omega, rng.uniform(0.5, 4.0));
    worst = std::max(worst, g.lhs.value() - g.rhs.value());
  }
  return {worst <= 1e-9, "max (lhs - rhs) = " + fmt(worst) + " over 200 triples"};
}

Outcome fuzzy() {
  gen::Rng rng(1212);
  std::size_t mutual = 0, mismatches = 0;
  const std::vector<double> ts{0.25, 0.5, 1.0, 2.0, 4.0}, rs{0.1, 0.25, 0.5, 0.75, 0.9};
  for (int s = 0; s < 20; ++s) {
    const auto space = gen::random_metric_space(rng, 6);
    const DistanceMatrix d{space.distance_matrix(), "d", 0.0};
    const auto c = fuzzy_refinement(d, ts, rs);
    if (c.verdict.direction == Direction::kMutual) ++mutual;
    mismatches += c.identity_mismatches;
    // Independent restatement of B(x, r, t) = {y : d(x, y) < t r / (1 - r)}.
    for (double t : ts) {
      const auto m = fuzzy_from_metric(d, t);
      for (double r : rs) {
        for (std::size_t x = 0; x < 6; ++x) {
          std::vector<std::size_t> metric;
          for (std::size_t y = 0; y < 6; ++y) {
            if (d(x, y) < t * r / (1.0 - r)) metric.push_back(y);
          }
          if (fuzzy_ball(m, x, r) != metric) ++mismatches;
        }
      }
    }
  }
  return {mutual == 20 && mismatches == 0,
          std::to_string(mutual) + "/20 mutual; " + std::to_string(mismatches) + " ball identity mismatches"};
}

Outcome adequacy() {
  std::vector<SquareMatrix> spaces;
  for (const auto& e : fs::directory_iterator(fs::path(MODSPACE_FIXTURES) / "spaces")) {
    const auto j = io::read_json(e.path());
    spaces.push_back(io::point_space_from_json(j, e.path().string()).distance_matrix());
  }
  gen::Rng rng(1313);
  for (int s = 0; s < 20; ++s) spaces.push_back(gen::random_metric_space(rng, 2 + rng.index(8)).distance_matrix());
  double worst = 0.0;
  for (const auto& m : spaces) {
    std::vector<std::size_t> all(m.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    worst = std::max(worst, adequacy_defect({m, "d", 0.0}, all).defect);
  }
  const SquareMatrix tri = SquareMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  double oracle = 0.0;
  for (std::size_t x1 = 0; x1 < 3; ++x1) {
    for (std::size_t x2 = 0; x2 < 3; ++x2) oracle = std::max(oracle, tri(x1, x2) - (tri(0, x2) - tri(0, x1)));
  }
  const double got = adequacy_defect({tri, "d", 0.0}, {0}).defect;
  return {worst <= 1e-12 && got == oracle, "max defect with full anchors = " + fmt(worst) + " over " +
                                               std::to_string(spaces.size()) + " spaces; equilateral single anchor " +
                                               fmt(got) + " vs oracle " + fmt(oracle)};
}

Outcome determinism() {
  const fs::path out = fs::temp_directory_path() / "modspace_acceptance";
  fs::remove_all(out);
  std::size_t runs = 0, identical = 0;
  std::ostringstream log, err;
  std::vector<std::string> kinds;
  for (const auto& e : fs::directory_iterator(MODSPACE_FIXTURES)) {
    if (e.path().extension() != ".json") continue;
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      cli::RunOptions o;
      o.config = e.path();
      o.out = out / (e.path().stem().string() + "_" + std::to_string(rep));
      o.seed = 20261016;
      o.quiet = true;
      if (cli::run(o, log, err) == cli::kExitUsage) return {false, "usage error on " + e.path().string() + ": " + err.str()};
      const std::string text = io::read_text(o.out / "report.json");
      if (rep == 0) {
        first = text;
        kinds.push_back(io::ordered_json::parse(text)["experiment"]);
      } else if (text == first) {
        ++identical;
      }
    }
    ++runs;
  }
  std::sort(kinds.begin(), kinds.end());
  kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());
  const bool all_kinds = kinds.size() == cli::experiment_kinds().size();
  return {identical == runs && all_kinds, std::to_string(identical) + "/" + std::to_string(runs) +
                                              " fixture configs byte-identical across two runs; " +
                                              std::to_string(kinds.size()) + "/" +
                                              std::to_string(cli::experiment_kinds().size()) + " experiment kinds"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"closed-form gauge", closed_form_gauge},
      {"sandwich inequality", sandwich},
      {"phi-gauge sandwich", phi_sandwich},
      {"Lp equivalence", lp_equivalence},
      {"Delta_2 diagnostic", delta2},
      {"topology refinement", topology},
      {"Cauchy equivalence", cauchy},
      {"entourage composition", composition},
      {"compactness positive case", kr_positive},
      {"compactness negative case", kr_negative},
      {"Jensen contract", jensen},
      {"fuzzy correspondence", fuzzy},
      {"adequacy", adequacy},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, o.detail.c_str());
    if (!o.pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
