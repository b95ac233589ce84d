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

#include "modspace/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace modspace {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::size_t> metric_ball(const DistanceMatrix& d, std::size_t x, double r) {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < d.size(); ++y) {
    if (d.effective(x, y) < r) out.push_back(y);
  }
  return out;
}

bool subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Failing (x, r_target) pairs for "source refines target".
std::vector<RefinementWitness> refine(const DistanceMatrix& source, const DistanceMatrix& target,
                                      const std::vector<double>& radii, const char* inclusion) {
  std::vector<RefinementWitness> out;
  for (std::size_t x = 0; x < source.size(); ++x) {
    std::vector<std::vector<std::size_t>> source_balls;
    for (double r : radii) {
      if (r > source.resolution) source_balls.push_back(metric_ball(source, x, r));
    }
    for (double r : radii) {
      if (!(r > target.resolution)) continue;
      const auto goal = metric_ball(target, x, r);
      const bool found = std::any_of(source_balls.begin(), source_balls.end(),
                                     [&](const auto& s) { return subset(s, goal); });
      if (!found) out.push_back({inclusion, x, r});
    }
  }
  return out;
}

Direction direction_of(bool a_refines_b, bool b_refines_a) {
  if (a_refines_b && b_refines_a) return Direction::kMutual;
  if (a_refines_b) return Direction::kARefinesB;
  if (b_refines_a) return Direction::kBRefinesA;
  return Direction::kNeither;
}

}  // namespace

Ball ball(const ModularFamily& w, double lambda, double mu, std::size_t x) {
  if (!(lambda > 0.0) || !(mu > 0.0)) throw std::domain_error("ball: lambda and mu must be positive");
  w.space().check_index(x);
  Ball b{x, lambda, mu, {}};
  for (std::size_t z = 0; z < w.size(); ++z) {
    if (w(lambda, x, z) < XReal(mu)) {
      b.members.push_back(z);
    }
  }
  return b;
}

std::size_t Entourage::pair_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), true));
}

Entourage entourage(const ModularFamily& w, std::size_t n) {
  if (n == 0) throw std::invalid_argument("entourage: n must be >= 1");
  const double s = 1.0 / static_cast<double>(n);
  Entourage v(n, w.size());
  for (std::size_t x = 0; x < w.size(); ++x) {
    v.set(x, x, true);
    for (std::size_t y = x + 1; y < w.size(); ++y) {
      const bool in = w(s, x, y) < XReal(s);
      v.set(x, y, in);
      v.set(y, x, in);
    }
  }
  return v;
}

DiagnosticReport composition_check(const ModularFamily& w, std::size_t n) {
  DiagnosticReport report;
  report.check = "entourage_composition";
  const Entourage fine = entourage(w, 2 * n);
  const Entourage coarse = entourage(w, n);
  for (std::size_t x = 0; x < w.size(); ++x) {
    for (std::size_t y = 0; y < w.size(); ++y) {
      if (coarse.contains(x, y)) continue;
      for (std::size_t z = 0; z < w.size(); ++z) {
        if (fine.contains(x, z) && fine.contains(z, y)) {
          report.fail(Witness{"composition", {x, z, y}, {{"n", static_cast<double>(n)}},
                              "(x,z), (z,y) in V_2n but (x,y) not in V_n"},
                      "V_2n o V_2n is not contained in V_n for n=" + std::to_string(n));
          return report;
        }
      }
    }
  }
  report.summary = "V_2n o V_2n subset V_n holds for n=" + std::to_string(n);
  return report;
}

Metrization metrize_uniformity(const ModularFamily& w, std::size_t n_max) {
  if (n_max == 0) throw std::invalid_argument("metrize_uniformity: n_max must be >= 1");
  if (n_max > 60) throw std::invalid_argument("metrize_uniformity: n_max must be <= 60");
  const std::size_t size = w.size();
  const double floor_value = std::ldexp(1.0, -static_cast<int>(n_max));

  Metrization out;
  out.n_max = n_max;
  out.raw.values = SquareMatrix(size, 1.0);
  out.raw.resolution = floor_value;
  out.raw.provenance = "metrize_raw(" + w.name() + ",n_max=" + std::to_string(n_max) + ")";
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Entourage v = entourage(w, n);
    const double value = std::ldexp(1.0, -static_cast<int>(n));
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t y = 0; y < size; ++y) {
        if (v.contains(x, y)) out.raw.values(x, y) = std::min(out.raw.values(x, y), value);
      }
    }
  }
  for (std::size_t x = 0; x < size; ++x) out.raw.values(x, x) = floor_value;

  SquareMatrix c = out.raw.values;
  for (std::size_t x = 0; x < size; ++x) c(x, x) = 0.0;
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = 0; j < size; ++j) c(i, j) = std::min(c(i, j), c(i, k) + c(k, j));
    }
  }
  out.chained.values = std::move(c);
  out.chained.resolution = floor_value;
  out.chained.provenance = "metrize_chained(" + w.name() + ",n_max=" + std::to_string(n_max) + ")";
  return out;
}

std::string to_string(Direction d) {
  switch (d) {
    case Direction::kARefinesB:
      return "A_refines_B";
    case Direction::kBRefinesA:
      return "B_refines_A";
    case Direction::kMutual:
      return "mutual";
    case Direction::kNeither:
      return "neither";
  }
  return "unknown";
}

RefinementVerdict refinement_compare(const DistanceMatrix& a, const DistanceMatrix& b,
                                     const std::vector<double>& radii) {
  if (a.size() != b.size()) throw std::invalid_argument("refinement_compare: size mismatch");
  if (radii.empty()) throw std::invalid_argument("refinement_compare: no radii");
  for (double r : radii) {
    if (!(r > 0.0)) throw std::invalid_argument("refinement_compare: radii must be positive");
  }
  RefinementVerdict v;
  auto ab = refine(a, b, radii, "A_refines_B");
  auto ba = refine(b, a, radii, "B_refines_A");
  v.direction = direction_of(ab.empty(), ba.empty());
  v.witnesses = std::move(ab);
  v.witnesses.insert(v.witnesses.end(), ba.begin(), ba.end());
  return v;
}

DiagnosticReport delta2_diagnostic(const ModularFamily& w,
                                   const std::vector<Delta2Sequence>& sequences,
                                   const std::vector<double>& lambdas, std::size_t horizon,
                                   double tol) {
  if (lambdas.empty()) throw std::invalid_argument("delta2_diagnostic: empty lambda set");
  if (horizon < 3) throw std::invalid_argument("delta2_diagnostic: horizon must be >= 3");
  if (!(tol >= 0.0)) throw std::invalid_argument("delta2_diagnostic: tol must be nonnegative");
  for (std::size_t s = 0; s < sequences.size(); ++s) {
    if (sequences[s].points.size() < 2 * horizon) {
      throw std::invalid_argument("delta2_diagnostic: sequence " + std::to_string(s) +
                                  " is shorter than 2 * horizon");
    }
    w.space().check_index(sequences[s].limit);
    for (std::size_t p : sequences[s].points) w.space().check_index(p);
  }

  DiagnosticReport report;
  report.check = "delta2";
  std::size_t premises = 0;
  for (std::size_t s = 0; s < sequences.size(); ++s) {
    const auto& seq = sequences[s];
    const std::size_t len = seq.points.size();
    for (double lambda : lambdas) {
      if (!(lambda > 0.0)) throw std::invalid_argument("delta2_diagnostic: lambda must be positive");
      // Index one past the last violation of each inequality.
      std::size_t premise_start = 0;
      std::size_t conclusion_start = 0;
      for (std::size_t k = 0; k < len; ++k) {
        if (w(lambda, seq.points[k], seq.limit) > XReal(tol)) premise_start = k + 1;
        if (w(lambda / 2.0, seq.points[k], seq.limit) > XReal(tol)) conclusion_start = k + 1;
      }
      if (premise_start >= horizon) continue;
      ++premises;
      if (conclusion_start > len - horizon) {
        const std::size_t k = conclusion_start - 1;
        const XReal half = w(lambda / 2.0, seq.points[k], seq.limit);
        report.fail(Witness{"delta2",
                            {seq.points[k], seq.limit},
                            {{"sequence", static_cast<double>(s)},
                             {"lambda", lambda},
                             {"k", static_cast<double>(k)},
                             {"w_half", half.value()}},
                            "w(lambda, x_k, x) -> 0 but w(lambda/2, x_k, x) stays above tol"},
                    "Delta_2 violation: sequence " + std::to_string(s) +
                        " at lambda=" + format_double(lambda));
      }
    }
  }
  report.metric("premises_satisfied", static_cast<double>(premises));
  if (!report.failed()) {
    report.summary = "no violation found";
    if (premises == 0) {
      report.verdict = Verdict::kInconclusive;
      report.notes.push_back("no premise was satisfied within the horizon");
    }
  }
  return report;
}

SquareMatrix fuzzy_from_metric(const DistanceMatrix& d, double t) {
  if (!(t > 0.0)) throw std::domain_error("fuzzy_from_metric: t must be positive");
  SquareMatrix m(d.size());
  for (std::size_t x = 0; x < d.size(); ++x) {
    for (std::size_t y = 0; y < d.size(); ++y) {
      const double dist = d(x, y);
      m(x, y) = std::isinf(dist) ? 0.0 : t / (t + dist);
    }
  }
  return m;
}

std::vector<std::size_t> fuzzy_ball(const SquareMatrix& m, std::size_t x, double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::domain_error("fuzzy_ball: r must lie in (0, 1)");
  if (x >= m.size()) throw std::out_of_range("fuzzy_ball: point out of range");
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < m.size(); ++y) {
    if (m(x, y) > 1.0 - r) out.push_back(y);
  }
  return out;
}

FuzzyComparison fuzzy_refinement(const DistanceMatrix& d, const std::vector<double>& ts,
                                 const std::vector<double>& rs) {
  if (ts.empty() || rs.empty()) throw std::invalid_argument("fuzzy_refinement: empty t or r list");
  FuzzyComparison out;
  std::vector<SquareMatrix> ms;
  for (double t : ts) ms.push_back(fuzzy_from_metric(d, t));
  std::vector<double> radii;
  for (double t : ts) {
    for (double r : rs) {
      if (!(r > 0.0 && r < 1.0)) throw std::domain_error("fuzzy_refinement: r must lie in (0, 1)");
      radii.push_back(t * r / (1.0 - r));
    }
  }

  bool fuzzy_refines_metric = true;
  bool metric_refines_fuzzy = true;
  for (std::size_t x = 0; x < d.size(); ++x) {
    std::vector<std::vector<std::size_t>> fuzzy_balls;
    std::vector<std::vector<std::size_t>> metric_balls;
    for (std::size_t a = 0; a < ts.size(); ++a) {
      for (std::size_t b = 0; b < rs.size(); ++b) {
        fuzzy_balls.push_back(fuzzy_ball(ms[a], x, rs[b]));
        metric_balls.push_back(metric_ball(d, x, radii[a * rs.size() + b]));
        ++out.balls_checked;
        if (fuzzy_balls.back() != metric_balls.back()) ++out.identity_mismatches;
      }
    }
    for (std::size_t k = 0; k < metric_balls.size(); ++k) {
      const bool ok = std::any_of(fuzzy_balls.begin(), fuzzy_balls.end(),
                                  [&](const auto& f) { return subset(f, metric_balls[k]); });
      if (!ok) {
        fuzzy_refines_metric = false;
        out.verdict.witnesses.push_back({"A_refines_B", x, radii[k]});
      }
    }
    for (std::size_t k = 0; k < fuzzy_balls.size(); ++k) {
      const bool ok = std::any_of(metric_balls.begin(), metric_balls.end(),
                                  [&](const auto& m) { return subset(m, fuzzy_balls[k]); });
      if (!ok) {
        metric_refines_fuzzy = false;
        out.verdict.witnesses.push_back({"B_refines_A", x, radii[k]});
      }
    }
  }
  // A = fuzzy topology, B = metric topology.
  out.verdict.direction = direction_of(fuzzy_refines_metric, metric_refines_fuzzy);
  return out;
}

AdequacyDefect adequacy_defect(const DistanceMatrix& d, const std::vector<std::size_t>& anchors) {
  if (anchors.empty()) throw std::invalid_argument("adequacy_defect: anchor set is empty");
  for (std::size_t a : anchors) {
    if (a >= d.size()) throw std::out_of_range("adequacy_defect: anchor out of range");
  }
  for (double v : d.values.data()) {
    if (std::isinf(v)) throw std::invalid_argument("adequacy_defect: distances must be finite");
  }
  AdequacyDefect out;
  out.defect = -kInf;
  for (std::size_t x1 = 0; x1 < d.size(); ++x1) {
    for (std::size_t x2 = 0; x2 < d.size(); ++x2) {
      double best = -kInf;
      for (std::size_t a : anchors) best = std::max(best, d(a, x2) - d(a, x1));
      const double gap = d(x1, x2) - best;
      if (gap > out.defect) out = {gap, x1, x2};
    }
  }
  out.defect = std::max(out.defect, 0.0);
  return out;
}

}  // namespace modspace
