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

#include "modspace/compactness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "modspace/gauges.hpp"

namespace modspace {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t resolve_min_tail(std::size_t len, std::size_t min_tail) {
  const std::size_t tail = min_tail == 0 ? (len + 1) / 2 : min_tail;
  if (tail > len) throw std::invalid_argument("min_tail exceeds the trace length");
  return tail;
}

void validate_trace(const SequenceTrace& seq, std::size_t space_size) {
  if (seq.points.size() < 2) throw std::invalid_argument("trace must have at least 2 points");
  for (std::size_t p : seq.points) {
    if (p >= space_size) throw std::out_of_range("trace point " + std::to_string(p) + " out of range");
  }
  if (seq.claimed_limit && *seq.claimed_limit >= space_size) {
    throw std::out_of_range("claimed limit out of range");
  }
}

struct TailStart {
  std::size_t start = 0;  // smallest N with every pair k, l >= N good
  std::size_t k = 0;      // latest bad pair when start > 0
  std::size_t l = 0;
};

// `bad(k, l)` for k < l over trace positions.
template <typename Bad>
TailStart tail_start(std::size_t len, Bad bad) {
  TailStart t;
  for (std::size_t k = 0; k < len; ++k) {
    for (std::size_t l = k + 1; l < len; ++l) {
      if (k + 1 > t.start && bad(k, l)) {
        t = {k + 1, k, l};
        break;
      }
    }
  }
  return t;
}

// Smallest n <= n_max at which the Cauchy condition fails (0 if none).
template <typename BadAt>
std::size_t first_failing_level(std::size_t len, std::size_t latest_start, std::size_t n_max,
                                BadAt bad_at) {
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto t = tail_start(len, [&](std::size_t k, std::size_t l) { return bad_at(n, k, l); });
    if (t.start > latest_start) return n;
  }
  return 0;
}

}  // namespace

DiagnosticReport is_v_cauchy(const SequenceTrace& seq, const ModularFamily& w,
                             const CauchyOptions& opts) {
  if (opts.n_max == 0) throw std::invalid_argument("is_v_cauchy: n_max must be >= 1");
  validate_trace(seq, w.size());
  const std::size_t len = seq.points.size();
  const std::size_t latest = len - resolve_min_tail(len, opts.min_tail);

  DiagnosticReport report;
  report.check = "v_cauchy";
  for (std::size_t n = 1; n <= opts.n_max; ++n) {
    const double s = 1.0 / static_cast<double>(n);
    const auto t = tail_start(len, [&](std::size_t k, std::size_t l) {
      return !(w(s, seq.points[k], seq.points[l]) < XReal(s));
    });
    report.metric("N_" + std::to_string(n), static_cast<double>(t.start));
    if (t.start > latest) {
      const XReal v = w(s, seq.points[t.k], seq.points[t.l]);
      report.fail(Witness{"v_cauchy",
                          {seq.points[t.k], seq.points[t.l]},
                          {{"n", static_cast<double>(n)},
                           {"k", static_cast<double>(t.k)},
                           {"l", static_cast<double>(t.l)},
                           {"w", v.value()}},
                          "w(1/n, x_k, x_l) >= 1/n too late in the trace"},
                  "not V-Cauchy at n=" + std::to_string(n) + " within the trace");
      return report;
    }
  }
  report.summary = "V-Cauchy up to n_max=" + std::to_string(opts.n_max) +
                   " (trace length " + std::to_string(len) + ")";
  return report;
}

DiagnosticReport cauchy_equivalence(const SequenceTrace& seq, const ModularFamily& w,
                                    const CauchyOptions& opts, const SearchOptions& search) {
  if (!w.claims().convex) {
    throw PreconditionError("cauchy_equivalence: modular " + w.name() + " does not claim convexity",
                            Witness{"not_convex", {}, {}, w.name()});
  }
  if (opts.n_max == 0) throw std::invalid_argument("cauchy_equivalence: n_max must be >= 1");
  validate_trace(seq, w.size());
  const std::size_t len = seq.points.size();
  const std::size_t latest = len - resolve_min_tail(len, opts.min_tail);

  std::map<std::pair<std::size_t, std::size_t>, std::pair<double, double>> gauges;
  auto gauge = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    auto it = gauges.find({a, b});
    if (it == gauges.end()) {
      const double z = a == b ? 0.0 : d0(w, a, b, search).value.value();
      const double s = a == b ? 0.0 : dstar(w, a, b, search).value.value();
      it = gauges.emplace(std::pair{a, b}, std::pair{z, s}).first;
    }
    return it->second;
  };

  const auto& p = seq.points;
  const std::size_t v_fail = first_failing_level(len, latest, opts.n_max, [&](std::size_t n, std::size_t k, std::size_t l) {
    const double s = 1.0 / static_cast<double>(n);
    return !(w(s, p[k], p[l]) < XReal(s));
  });
  const std::size_t d0_fail = first_failing_level(len, latest, opts.n_max, [&](std::size_t n, std::size_t k, std::size_t l) {
    return !(gauge(p[k], p[l]).first < 1.0 / static_cast<double>(n));
  });
  const std::size_t ds_fail = first_failing_level(len, latest, opts.n_max, [&](std::size_t n, std::size_t k, std::size_t l) {
    return !(gauge(p[k], p[l]).second < 1.0 / static_cast<double>(n));
  });

  DiagnosticReport report;
  report.check = "cauchy_equivalence";
  const bool v = v_fail == 0;
  const bool z = d0_fail == 0;
  const bool s = ds_fail == 0;
  report.metric("v_cauchy", v ? 1.0 : 0.0);
  report.metric("d0_cauchy", z ? 1.0 : 0.0);
  report.metric("dstar_cauchy", s ? 1.0 : 0.0);
  if (v == z && z == s) {
    report.summary = v ? "V-, d0- and d*-Cauchy up to n_max" : "not Cauchy under any notion";
  } else {
    report.fail(Witness{"cauchy_disagreement", {},
                        {{"v_first_failing_n", static_cast<double>(v_fail)},
                         {"d0_first_failing_n", static_cast<double>(d0_fail)},
                         {"dstar_first_failing_n", static_cast<double>(ds_fail)}},
                        "0 means the notion holds up to n_max"},
                "Cauchy notions disagree");
  }
  return report;
}

NetCover epsilon_net(const DistanceMatrix& metric, double epsilon,
                     const std::vector<std::size_t>& subset) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon_net: epsilon must be positive");
  std::vector<std::size_t> pts = subset;
  if (pts.empty()) {
    pts.resize(metric.size());
    std::iota(pts.begin(), pts.end(), std::size_t{0});
  }
  for (std::size_t p : pts) {
    if (p >= metric.size()) throw std::out_of_range("epsilon_net: point out of range");
  }
  NetCover net;
  net.epsilon = epsilon;
  if (pts.empty()) return net;

  std::vector<double> nearest(pts.size(), kInf);
  std::vector<std::size_t> owner(pts.size(), 0);
  auto add_center = [&](std::size_t c) {
    net.centers.push_back(c);
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const double d = metric(pts[k], c);
      if (d < nearest[k]) {
        nearest[k] = d;
        owner[k] = c;
      }
    }
  };
  add_center(pts.front());
  while (true) {
    std::size_t far = 0;
    for (std::size_t k = 1; k < pts.size(); ++k) {
      if (nearest[k] > nearest[far] || (nearest[k] == nearest[far] && pts[k] < pts[far])) far = k;
    }
    if (nearest[far] < epsilon) break;
    add_center(pts[far]);
  }
  for (std::size_t k = 0; k < pts.size(); ++k) net.assignment.emplace_back(pts[k], owner[k]);
  std::sort(net.assignment.begin(), net.assignment.end());
  return net;
}

Subsequence cauchy_subsequence(const SequenceTrace& seq, const DistanceMatrix& metric,
                               const std::vector<double>& levels) {
  validate_trace(seq, metric.size());
  if (levels.empty()) throw std::invalid_argument("cauchy_subsequence: no levels");
  for (std::size_t k = 0; k < levels.size(); ++k) {
    if (!(levels[k] > 0.0) || (k > 0 && !(levels[k] < levels[k - 1]))) {
      throw std::invalid_argument("cauchy_subsequence: levels must be positive and strictly decreasing");
    }
  }
  Subsequence out;
  out.positions.resize(seq.points.size());
  std::iota(out.positions.begin(), out.positions.end(), std::size_t{0});

  for (double eps : levels) {
    std::vector<std::size_t> pts;
    for (std::size_t pos : out.positions) pts.push_back(seq.points[pos]);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    // Start the net from the point the retained trace visits first.
    const auto first = std::find(pts.begin(), pts.end(), seq.points[out.positions.front()]);
    std::rotate(pts.begin(), first, first + 1);
    const NetCover net = epsilon_net(metric, eps / 2.0, pts);

    std::map<std::size_t, std::size_t> center_of(net.assignment.begin(), net.assignment.end());
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t pos : out.positions) groups[center_of.at(seq.points[pos])].push_back(pos);
    const std::vector<std::size_t>* best = nullptr;
    for (const auto& [center, group] : groups) {
      if (!best || group.size() > best->size() ||
          (group.size() == best->size() && group.front() < best->front())) {
        best = &group;
      }
    }
    if (best->size() < 2) {
      out.partial = true;
      return out;
    }
    out.positions = *best;
    ++out.levels_completed;
  }
  return out;
}

DiagnosticReport compactness_verdict(const DistanceMatrix& metric,
                                     const std::vector<double>& epsilons,
                                     const std::vector<SequenceTrace>& traces,
                                     const CompactnessOptions& opts) {
  if (epsilons.empty()) throw std::invalid_argument("compactness_verdict: no epsilons");
  std::vector<std::size_t> space = opts.subset;
  if (space.empty()) {
    space.resize(metric.size());
    std::iota(space.begin(), space.end(), std::size_t{0});
  }
  for (std::size_t s : opts.sample_sizes) {
    if (s == 0 || s > space.size()) {
      throw std::invalid_argument("compactness_verdict: sample size out of range");
    }
  }

  DiagnosticReport report;
  report.check = "compactness";
  report.notes.push_back("desk-scale evidence: finite nets and limit search within the trace");

  for (double eps : epsilons) {
    const NetCover net = epsilon_net(metric, eps, space);
    report.metric("net_size[eps=" + format_double(eps) + "]", static_cast<double>(net.centers.size()));
    if (opts.sample_sizes.size() < 2) continue;
    bool saturated = true;
    for (std::size_t s : opts.sample_sizes) {
      const std::vector<std::size_t> prefix(space.begin(), space.begin() + static_cast<long>(s));
      const std::size_t size = epsilon_net(metric, eps, prefix).centers.size();
      report.metric("net_size[eps=" + format_double(eps) + ",n=" + std::to_string(s) + "]",
                    static_cast<double>(size));
      saturated = saturated && size == s;
    }
    if (saturated && !report.failed()) {
      report.fail(Witness{"net_growth", {},
                          {{"epsilon", eps}, {"largest_sample", static_cast<double>(opts.sample_sizes.back())}},
                          "every sampled point needs its own center"},
                  "non-precompact evidence: net size grows with the sample at eps=" +
                      format_double(eps));
    }
  }

  for (std::size_t t = 0; t < traces.size(); ++t) {
    const auto& seq = traces[t];
    validate_trace(seq, metric.size());
    const std::size_t len = seq.points.size();
    const std::size_t from = len - resolve_min_tail(len, opts.min_tail);
    double best = kInf;
    std::size_t best_point = space.front();
    for (std::size_t c : space) {
      double sup = 0.0;
      for (std::size_t k = from; k < len; ++k) sup = std::max(sup, metric(seq.points[k], c));
      if (sup < best) {
        best = sup;
        best_point = c;
      }
    }
    report.metric("limit_sup_distance[trace=" + std::to_string(t) + "]", best);
    if (best > opts.limit_tol) {
      Witness w{"missing_limit", {best_point},
                {{"trace", static_cast<double>(t)}, {"best_sup_distance", best}},
                "no point of the space is within tolerance of the trace tail"};
      if (seq.claimed_limit) w.with("claimed_limit", static_cast<double>(*seq.claimed_limit));
      report.fail(std::move(w), "completeness failure: trace " + std::to_string(t) + " has no limit in the space");
    }
  }
  if (!report.failed()) report.summary = "compact evidence (desk-scale): nets finite, limits found";
  return report;
}

}  // namespace modspace
