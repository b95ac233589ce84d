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

#include "modspace/cli.hpp"

#include <algorithm>
#include <cmath>
#include <ctime>
#include <ostream>

#include "modspace/axioms.hpp"
#include "modspace/builders.hpp"
#include "modspace/compactness.hpp"
#include "modspace/gauges.hpp"
#include "modspace/kolmogorov_riesz.hpp"
#include "modspace/random.hpp"
#include "modspace/topology.hpp"

namespace modspace::cli {
namespace {

using io::ordered_json;
using io::SchemaError;
namespace fs = std::filesystem;

// Read-only view of a config node that remembers its field path.
class Node {
 public:
  Node(const ordered_json& j, std::string path) : j_(&j), path_(std::move(path)) {}

  const ordered_json& json() const { return *j_; }
  const std::string& path() const { return path_; }
  bool has(const char* key) const { return j_->is_object() && j_->contains(key); }

  Node at(const char* key) const {
    if (!j_->is_object()) throw SchemaError(path_, "expected an object");
    auto it = j_->find(key);
    if (it == j_->end()) throw SchemaError(child(key), "missing required field");
    return {*it, child(key)};
  }
  Node at(std::size_t i) const { return {(*j_)[i], path_ + "[" + std::to_string(i) + "]"}; }
  std::size_t size() const {
    if (!j_->is_array()) throw SchemaError(path_, "expected an array");
    return j_->size();
  }

  double number() const { return io::parse_number(*j_, path_); }
  double positive() const {
    const double v = number();
    if (!(v > 0.0)) throw SchemaError(path_, "must be positive");
    return v;
  }
  std::size_t count() const {
    if (!j_->is_number_unsigned()) throw SchemaError(path_, "expected a nonnegative integer");
    return j_->get<std::size_t>();
  }
  std::string string() const {
    if (!j_->is_string()) throw SchemaError(path_, "expected a string");
    return j_->get<std::string>();
  }
  std::vector<double> numbers() const {
    std::vector<double> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).number());
    return out;
  }
  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i).count());
    return out;
  }

  double number_or(const char* key, double fallback) const {
    return has(key) ? at(key).number() : fallback;
  }
  double positive_or(const char* key, double fallback) const {
    return has(key) ? at(key).positive() : fallback;
  }
  std::size_t count_or(const char* key, std::size_t fallback) const {
    return has(key) ? at(key).count() : fallback;
  }

 private:
  std::string child(const char* key) const { return path_ + "." + key; }
  const ordered_json* j_;
  std::string path_;
};

// Everything an experiment needs to resolve its inputs.
struct Context {
  Node root;
  fs::path base;
  gen::Rng rng;
};

Verdict combine(Verdict a, Verdict b) {
  if (a == Verdict::kFail || b == Verdict::kFail) return Verdict::kFail;
  if (a == Verdict::kInconclusive || b == Verdict::kInconclusive) return Verdict::kInconclusive;
  return Verdict::kPass;
}

fs::path resolve(const Context& ctx, const Node& n) {
  const fs::path p = n.string();
  const fs::path full = p.is_absolute() ? p : ctx.base / p;
  if (!fs::exists(full)) throw std::runtime_error(n.path() + ": file not found: " + full.string());
  return full;
}

PointSpace load_space(Context& ctx, const Node& n, TriangleCheck triangle) {
  if (n.has("path")) {
    const fs::path p = resolve(ctx, n.at("path"));
    return io::point_space_from_json(io::read_json(p), p.string(), triangle);
  }
  if (n.has("distance")) return io::point_space_from_json(n.json(), n.path(), triangle);
  if (n.has("line")) {
    const auto xs = n.at("line").numbers();
    if (xs.empty()) throw SchemaError(n.path() + ".line", "expected at least one position");
    SquareMatrix d(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      for (std::size_t k = 0; k < xs.size(); ++k) d(i, k) = std::abs(xs[i] - xs[k]);
    }
    return PointSpace(default_labels(xs.size(), "x"), std::move(d));
  }
  if (n.has("random")) {
    const Node r = n.at("random");
    return gen::random_metric_space(ctx.rng, r.at("n").count(), r.positive_or("side", 1.0),
                                    r.number_or("min_separation", 0.05));
  }
  throw SchemaError(n.path(), "expected one of path, distance, line, random");
}

orlicz::Integrand load_integrand(const Node& n) {
  const std::string kind = n.at("kind").string();
  if (kind == "lp") return orlicz::lp(n.number_or("p", 2.0));
  if (kind == "exp_squared") return orlicz::exp_squared();
  if (kind == "variable_exponent") return orlicz::variable_exponent(n.at("exponents").numbers());
  throw SchemaError(n.path() + ".kind", "unknown integrand '" + kind + "'");
}

orlicz::DiscreteMeasureSpace load_measure(Context& ctx, const Node& n) {
  if (n.has("path")) {
    const fs::path p = resolve(ctx, n.at("path"));
    return io::measure_from_json(io::read_json(p), p.string());
  }
  if (n.has("uniform_1d")) {
    const Node u = n.at("uniform_1d");
    return orlicz::DiscreteMeasureSpace::uniform_1d(u.at("n").count(), u.positive_or("length", 1.0));
  }
  if (n.has("uniform_2d")) {
    const Node u = n.at("uniform_2d");
    return orlicz::DiscreteMeasureSpace::uniform_2d(u.at("nx").count(), u.at("ny").count(),
                                                    u.positive_or("length", 1.0));
  }
  if (n.has("masses")) return io::measure_from_json(n.json(), n.path());
  throw SchemaError(n.path(), "expected one of path, uniform_1d, uniform_2d, masses");
}

orlicz::FunctionFamily load_family(Context& ctx, const Node& n, std::size_t cells) {
  if (n.has("path")) {
    const fs::path p = resolve(ctx, n.at("path"));
    return io::family_from_csv(io::read_text(p), p.string());
  }
  if (n.has("rows")) {
    std::vector<std::vector<double>> rows;
    const Node r = n.at("rows");
    for (std::size_t i = 0; i < r.size(); ++i) rows.push_back(r.at(i).numbers());
    return orlicz::FunctionFamily::from_rows(rows);
  }
  if (n.has("lipschitz")) {
    const Node l = n.at("lipschitz");
    std::vector<double> slopes;
    if (l.has("slopes")) {
      slopes = l.at("slopes").numbers();
    } else {
      const std::size_t count = l.at("count").count();
      if (count < 2) throw SchemaError(l.path() + ".count", "need at least 2 slopes");
      for (std::size_t k = 0; k < count; ++k) {
        slopes.push_back(static_cast<double>(k) / static_cast<double>(count - 1));
      }
    }
    return gen::lipschitz_family(slopes, cells);
  }
  if (n.has("rademacher")) return gen::rademacher_family(n.at("rademacher").at("m").count(), cells);
  if (n.has("random")) {
    const Node r = n.at("random");
    return gen::random_family(ctx.rng, r.at("m").count(), cells, r.number_or("lo", -1.0),
                              r.number_or("hi", 1.0));
  }
  throw SchemaError(n.path(), "expected one of path, rows, lipschitz, rademacher, random");
}

LambdaGrid load_grid(const Node& parent, const char* key, const LambdaGrid& fallback) {
  if (!parent.has(key)) return fallback;
  const Node g = parent.at(key);
  try {
    if (g.has("values")) return LambdaGrid::from_values(g.at("values").numbers());
    return LambdaGrid::log_spaced(g.at("lo").positive(), g.at("hi").positive(),
                                  g.count_or("per_decade", 8));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(g.path(), e.what());
  }
}

PhiFunction load_phi(const Node& n) {
  if (n.json().is_string()) {
    if (n.string() == "identity") return phi_identity();
    throw SchemaError(n.path(), "unknown phi '" + n.string() + "'");
  }
  if (n.has("power")) return phi_power(n.at("power").number());
  throw SchemaError(n.path(), "expected \"identity\" or {\"power\": q}");
}

ModularFamily load_modular(Context& ctx) {
  const Node m = ctx.root.at("modular");
  const std::string kind = m.at("kind").string();
  if (kind == "exponential") {
    std::vector<std::vector<std::vector<double>>> traj;
    const Node t = m.at("trajectories");
    for (std::size_t p = 0; p < t.size(); ++p) {
      std::vector<std::vector<double>> per_time;
      for (std::size_t s = 0; s < t.at(p).size(); ++s) per_time.push_back(t.at(p).at(s).numbers());
      traj.push_back(std::move(per_time));
    }
    return from_exponential_family(m.at("times").numbers(), std::move(traj));
  }
  if (kind == "orlicz") {
    const auto omega = load_measure(ctx, m.at("measure"));
    const auto family = load_family(ctx, m.at("family"), omega.size());
    return orlicz::induced_modular(orlicz::OrliczModular(load_integrand(m.at("integrand")), omega),
                                   family);
  }
  const TriangleCheck triangle = kind == "constant" ? TriangleCheck::kSkip : TriangleCheck::kEnforce;
  const PointSpace space = load_space(ctx, ctx.root.at("space"), triangle);
  if (kind == "scaled") return from_scaled_metric(space, power_scale(m.number_or("p", 1.0)));
  if (kind == "saturating") {
    return from_saturating_metric(space, power_growth(m.positive_or("c", 1.0), m.number_or("q", 1.0)));
  }
  if (kind == "step") return step_modular(space);
  if (kind == "constant") {
    // w(lambda, x, y) = d(x, y): a probe for broken base distances.
    auto shared = std::make_shared<const PointSpace>(space);
    return ModularFamily(shared,
                         [shared](double, std::size_t i, std::size_t j) { return shared->distance(i, j); },
                         ModularClaims{}, "constant");
  }
  throw SchemaError(m.path() + ".kind", "unknown modular '" + kind + "'");
}

ordered_json report_entry(const DiagnosticReport& r) { return io::to_json(r); }

std::vector<std::size_t> load_points(const Node& n) {
  if (n.json().is_array()) return n.counts();
  const std::size_t from = n.at("from").count();
  const std::size_t to = n.at("to").count();
  if (to < from) throw SchemaError(n.path(), "to < from");
  std::vector<std::size_t> out;
  for (std::size_t k = from; k <= to; ++k) out.push_back(k);
  return out;
}

std::vector<SequenceTrace> load_traces(const Node& parent) {
  std::vector<SequenceTrace> out;
  if (!parent.has("traces")) return out;
  const Node ts = parent.at("traces");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    SequenceTrace t;
    t.points = load_points(ts.at(i).at("points"));
    if (ts.at(i).has("claimed_limit")) t.claimed_limit = ts.at(i).at("claimed_limit").count();
    out.push_back(std::move(t));
  }
  return out;
}

SearchOptions load_search(const Node& root) {
  SearchOptions s;
  if (!root.has("search")) return s;
  const Node n = root.at("search");
  s.floor = n.positive_or("floor", s.floor);
  s.cap = n.positive_or("cap", s.cap);
  s.tol = n.positive_or("tol", s.tol);
  return s;
}

// ---- experiments ---------------------------------------------------------

Outcome axioms(Context& ctx) {
  const ModularFamily w = load_modular(ctx);
  const LambdaGrid grid = load_grid(ctx.root, "grid", LambdaGrid::log_spaced(0.1, 10.0, 4));
  const double tol = ctx.root.positive_or("tol", kTolMetric);
  Outcome o;
  const DiagnosticReport r = check_modular_axioms(w, grid, tol);
  o.verdict = r.verdict;
  o.report["modular"] = w.name();
  o.report["reports"] = ordered_json::array({report_entry(r)});
  if (ctx.root.has("phi")) {
    const DiagnosticReport p = check_phi_convexity(w, load_phi(ctx.root.at("phi")), grid, tol);
    o.verdict = combine(o.verdict, p.verdict);
    o.report["reports"].push_back(report_entry(p));
  }
  return o;
}

Outcome gauges(Context& ctx) {
  const ModularFamily w = load_modular(ctx);
  GaugeParams params;
  params.search = load_search(ctx.root);
  if (ctx.root.has("phi")) params.phi = load_phi(ctx.root.at("phi"));
  std::vector<std::string> kinds{"d0", "dstar"};
  if (ctx.root.has("gauges")) {
    kinds.clear();
    const Node g = ctx.root.at("gauges");
    for (std::size_t i = 0; i < g.size(); ++i) kinds.push_back(g.at(i).string());
  }
  const double tol = ctx.root.positive_or("tol", 1e-8);

  Outcome o;
  o.report["modular"] = w.name();
  o.report["reports"] = ordered_json::array();
  std::map<GaugeKind, DistanceMatrix> mats;
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    GaugeKind kind;
    try {
      kind = gauge_kind_from_string(kinds[i]);
    } catch (const std::invalid_argument& e) {
      throw SchemaError("config.gauges[" + std::to_string(i) + "]", e.what());
    }
    GaugeMatrix gm = gauge_matrix(w, kind, params);
    // Only d0 is a pseudometric for every modular; the others need convexity.
    if (kind == GaugeKind::kD0 || w.claims().convex) o.verdict = combine(o.verdict, gm.validation.verdict);
    gm.validation.check = "pseudometric[" + to_string(kind) + "]";
    o.report["reports"].push_back(report_entry(gm.validation));
    o.report["matrices"][to_string(kind)] = io::to_json(gm.matrix);
    o.files.emplace_back(to_string(kind) + ".csv", io::to_csv(gm.matrix.values));
    mats.emplace(kind, std::move(gm.matrix));
  }
  const bool convex = w.claims().convex;
  if (!convex) o.report["note"] = "modular does not claim convexity; sandwich checks skipped and only d0 is required to be a pseudometric";
  if (convex && mats.contains(GaugeKind::kD0) && mats.contains(GaugeKind::kDstar)) {
    const auto r = check_sandwich(mats.at(GaugeKind::kD0), mats.at(GaugeKind::kDstar), tol);
    o.verdict = combine(o.verdict, r.verdict);
    o.report["reports"].push_back(report_entry(r));
  }
  if (convex && mats.contains(GaugeKind::kD0Phi) && mats.contains(GaugeKind::kD1Phi)) {
    DiagnosticReport r;
    r.check = "phi_sandwich";
    const auto& lo = mats.at(GaugeKind::kD0Phi);
    const auto& hi = mats.at(GaugeKind::kD1Phi);
    for (std::size_t i = 0; i < lo.size() && !r.failed(); ++i) {
      for (std::size_t j = 0; j < lo.size(); ++j) {
        if (lo(i, j) > hi(i, j) + tol || hi(i, j) > 2.0 * lo(i, j) + tol) {
          r.fail(Witness{"phi_sandwich", {i, j}, {{"d0_phi", lo(i, j)}, {"d1_phi", hi(i, j)}}, ""},
                 "d0_phi <= d1_phi <= 2 d0_phi violated");
          break;
        }
      }
    }
    if (!r.failed()) r.summary = "d0_phi <= d1_phi <= 2 d0_phi entrywise";
    o.verdict = combine(o.verdict, r.verdict);
    o.report["reports"].push_back(report_entry(r));
  }
  return o;
}

std::vector<double> load_radii(const Node& root) {
  if (root.has("radii")) return root.at("radii").numbers();
  std::vector<double> out;
  for (int k = 0; k <= 24; ++k) out.push_back(std::ldexp(1.0, -k));
  return out;
}

Outcome topology_compare(Context& ctx) {
  const ModularFamily w = load_modular(ctx);
  const std::size_t n_max = ctx.root.count_or("n_max", 16);
  const auto radii = load_radii(ctx.root);
  GaugeParams params;
  params.search = load_search(ctx.root);

  const Metrization m = metrize_uniformity(w, n_max);
  const GaugeMatrix d0m = gauge_matrix(w, GaugeKind::kD0, params);
  const RefinementVerdict v = refinement_compare(m.chained, d0m.matrix, radii);

  Outcome o;
  o.report["modular"] = w.name();
  o.report["comparison"] = io::to_json(v);
  o.report["comparison"]["A"] = m.chained.provenance;
  o.report["comparison"]["B"] = d0m.matrix.provenance;
  o.verdict = v.direction == Direction::kMutual ? Verdict::kPass : Verdict::kFail;
  o.report["reports"] = ordered_json::array({report_entry(validate_pseudometric(m.chained.values))});
  for (std::size_t n = 1; 2 * n <= n_max; ++n) {
    const DiagnosticReport r = composition_check(w, n);
    if (r.failed()) {
      o.verdict = Verdict::kFail;
      o.report["reports"].push_back(report_entry(r));
    }
  }
  o.files.emplace_back("metrization_raw.csv", io::to_csv(m.raw.values));
  o.files.emplace_back("metrization_chained.csv", io::to_csv(m.chained.values));
  o.files.emplace_back("d0.csv", io::to_csv(d0m.matrix.values));
  o.files.emplace_back("entourage_1.csv", io::to_csv(entourage(w, 1)));
  return o;
}

Outcome delta2(Context& ctx) {
  const ModularFamily w = load_modular(ctx);
  std::vector<Delta2Sequence> seqs;
  const Node s = ctx.root.at("sequences");
  for (std::size_t i = 0; i < s.size(); ++i) {
    seqs.push_back({load_points(s.at(i).at("points")), s.at(i).at("limit").count()});
  }
  const DiagnosticReport r = delta2_diagnostic(w, seqs, ctx.root.at("lambdas").numbers(),
                                               ctx.root.at("horizon").count(),
                                               ctx.root.number_or("tol", 1e-6));
  Outcome o;
  o.verdict = r.verdict;
  o.report["modular"] = w.name();
  o.report["reports"] = ordered_json::array({report_entry(r)});
  return o;
}

Outcome cauchy(Context& ctx) {
  const ModularFamily w = load_modular(ctx);
  CauchyOptions opts;
  opts.n_max = ctx.root.count_or("n_max", opts.n_max);
  opts.min_tail = ctx.root.count_or("min_tail", 0);
  const SearchOptions search = load_search(ctx.root);
  const auto traces = load_traces(ctx.root);
  if (traces.empty()) throw SchemaError("config.traces", "at least one trace is required");

  Outcome o;
  o.report["modular"] = w.name();
  o.report["reports"] = ordered_json::array();
  for (const auto& t : traces) {
    const DiagnosticReport v = is_v_cauchy(t, w, opts);
    o.report["reports"].push_back(report_entry(v));
    if (w.claims().convex) {
      const DiagnosticReport e = cauchy_equivalence(t, w, opts, search);
      o.verdict = combine(o.verdict, e.verdict);
      o.report["reports"].push_back(report_entry(e));
    }
  }
  if (!w.claims().convex) o.report["note"] = "modular does not claim convexity; only V-Cauchy is classified";
  return o;
}

Outcome nets(Context& ctx) {
  DistanceMatrix metric;
  const std::string source = ctx.root.has("metric") ? ctx.root.at("metric").string() : "base";
  if (source == "base") {
    const PointSpace space = load_space(ctx, ctx.root.at("space"), TriangleCheck::kEnforce);
    metric.values = space.distance_matrix();
    metric.provenance = "base";
  } else {
    GaugeParams params;
    params.search = load_search(ctx.root);
    GaugeKind kind;
    try {
      kind = gauge_kind_from_string(source);
    } catch (const std::invalid_argument& e) {
      throw SchemaError("config.metric", e.what());
    }
    metric = gauge_matrix(load_modular(ctx), kind, params).matrix;
  }
  const auto eps = ctx.root.at("epsilons").numbers();
  CompactnessOptions opts;
  if (ctx.root.has("subset")) opts.subset = ctx.root.at("subset").counts();
  if (ctx.root.has("sample_sizes")) opts.sample_sizes = ctx.root.at("sample_sizes").counts();
  opts.min_tail = ctx.root.count_or("min_tail", 0);
  const auto traces = load_traces(ctx.root);
  const DiagnosticReport r = compactness_verdict(metric, eps, traces, opts);

  Outcome o;
  o.verdict = r.verdict;
  o.report["metric"] = metric.provenance;
  o.report["reports"] = ordered_json::array({report_entry(r)});
  std::string table = "epsilon,net_size\n";
  o.report["nets"] = ordered_json::array();
  for (double e : eps) {
    const NetCover net = epsilon_net(metric, e, opts.subset);
    o.report["nets"].push_back(io::to_json(net));
    table += format_double(e) + "," + std::to_string(net.centers.size()) + "\n";
  }
  if (ctx.root.has("levels")) {
    const auto levels = ctx.root.at("levels").numbers();
    o.report["subsequences"] = ordered_json::array();
    for (const auto& t : traces) {
      const Subsequence s = cauchy_subsequence(t, metric, levels);
      o.report["subsequences"].push_back({{"positions", s.positions},
                                          {"levels_completed", s.levels_completed},
                                          {"partial", s.partial}});
    }
  }
  o.files.emplace_back("net_sizes.csv", std::move(table));
  return o;
}

orlicz::Partition load_partition(const Node& n, const orlicz::DiscreteMeasureSpace& omega) {
  if (n.json().is_string()) {
    if (n.string() == "whole") return orlicz::Partition::whole(omega);
    if (n.string() == "singletons") return orlicz::Partition::singletons(omega);
    throw SchemaError(n.path(), "unknown partition '" + n.string() + "'");
  }
  return orlicz::Partition::dyadic_blocks(omega, n.at("dyadic").count());
}

Outcome kr(Context& ctx) {
  const auto omega = load_measure(ctx, ctx.root.at("measure"));
  const auto family = load_family(ctx, ctx.root.at("family"), omega.size());
  const auto phi = load_integrand(ctx.root.at("integrand"));
  orlicz::KrOptions opts;
  opts.eps_ladder = ctx.root.at("eps_ladder").numbers();
  const Node parts = ctx.root.at("partitions");
  for (std::size_t i = 0; i < parts.size(); ++i) opts.partitions.push_back(load_partition(parts.at(i), omega));
  opts.lambda_grid = load_grid(ctx.root, "lambda_grid", opts.lambda_grid);
  if (ctx.root.has("emc_delta")) opts.emc_delta = ctx.root.at("emc_delta").positive();
  opts.search = load_search(ctx.root);
  const orlicz::KrResult res = orlicz::kr_compactness(family, phi, omega, opts);

  Outcome o;
  o.verdict = res.report.verdict;
  o.report["integrand"] = phi.name;
  o.report["family_size"] = family.rows();
  o.report["cells"] = omega.size();
  o.report["reports"] = ordered_json::array({report_entry(res.report)});
  ordered_json stages = ordered_json::array();
  std::string table = "epsilon,net,center_row\n";
  for (const auto& ns : res.nets) {
    stages.push_back({{"epsilon", ns.epsilon},
                      {"ok", ns.ok},
                      {"projected_net", io::to_json(ns.projected)},
                      {"family_net_size", ns.family.centers.size()},
                      {"cover_radius", ns.cover_radius},
                      {"saturated", ns.saturated}});
    for (std::size_t c : ns.projected.centers) {
      table += format_double(ns.epsilon) + ",projected," + std::to_string(c) + "\n";
    }
    for (std::size_t c : ns.family.centers) {
      table += format_double(ns.epsilon) + ",family," + std::to_string(c) + "\n";
    }
  }
  o.report["net_stages"] = std::move(stages);
  o.files.emplace_back("kr_nets.csv", std::move(table));
  return o;
}

Outcome fuzzy(Context& ctx) {
  const PointSpace space = load_space(ctx, ctx.root.at("space"), TriangleCheck::kEnforce);
  DistanceMatrix d{space.distance_matrix(), "base", 0.0};
  const auto ts = ctx.root.has("ts") ? ctx.root.at("ts").numbers() : std::vector<double>{0.5, 1.0, 2.0};
  const auto rs = ctx.root.has("rs") ? ctx.root.at("rs").numbers() : std::vector<double>{0.1, 0.3, 0.5, 0.7, 0.9};
  const FuzzyComparison c = fuzzy_refinement(d, ts, rs);
  Outcome o;
  o.report["comparison"] = io::to_json(c.verdict);
  o.report["comparison"]["A"] = "fuzzy";
  o.report["comparison"]["B"] = "metric";
  o.report["balls_checked"] = c.balls_checked;
  o.report["identity_mismatches"] = c.identity_mismatches;
  o.verdict = c.verdict.direction == Direction::kMutual && c.identity_mismatches == 0
                  ? Verdict::kPass
                  : Verdict::kFail;
  if (o.verdict == Verdict::kFail && c.verdict.witnesses.empty()) {
    o.report["comparison"]["witnesses"].push_back(
        {{"inclusion", "ball_identity"}, {"mismatches", c.identity_mismatches}});
  }
  o.files.emplace_back("fuzzy_t" + format_double(ts.front()) + ".csv",
                       io::to_csv(fuzzy_from_metric(d, ts.front())));
  return o;
}

Outcome adequacy(Context& ctx) {
  const PointSpace space = load_space(ctx, ctx.root.at("space"), TriangleCheck::kEnforce);
  DistanceMatrix d{space.distance_matrix(), "base", 0.0};
  std::vector<std::size_t> anchors;
  if (ctx.root.has("anchors")) {
    anchors = ctx.root.at("anchors").counts();
  } else {
    for (std::size_t i = 0; i < space.size(); ++i) anchors.push_back(i);
  }
  const double tol = ctx.root.number_or("tol", 1e-12);
  const AdequacyDefect a = adequacy_defect(d, anchors);
  DiagnosticReport r;
  r.check = "adequacy";
  r.metric("defect", a.defect);
  if (a.defect > tol) {
    r.fail(Witness{"adequacy", {a.x1, a.x2}, {{"defect", a.defect}}, ""},
           "anchor set does not recover d(x1, x2)");
  } else {
    r.summary = "anchor set is adequate at this resolution";
  }
  Outcome o;
  o.verdict = r.verdict;
  o.report["anchors"] = anchors;
  o.report["reports"] = ordered_json::array({report_entry(r)});
  return o;
}

std::string timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return kExitPass;
    case Verdict::kFail:
      return kExitFail;
    case Verdict::kInconclusive:
      return kExitInconclusive;
  }
  return kExitUsage;
}

const std::vector<std::string>& experiment_kinds() {
  static const std::vector<std::string> kinds{"axioms", "gauges",   "topology_compare",
                                              "delta2", "cauchy",   "nets",
                                              "kr",     "fuzzy",    "adequacy"};
  return kinds;
}

Outcome run_experiment(const ordered_json& config, const fs::path& base_dir, std::uint64_t seed) {
  Context ctx{Node(config, "config"), base_dir, gen::Rng(seed)};
  const std::string kind = ctx.root.at("experiment").string();
  Outcome o;
  try {
    if (kind == "axioms") {
      o = axioms(ctx);
    } else if (kind == "gauges") {
      o = gauges(ctx);
    } else if (kind == "topology_compare") {
      o = topology_compare(ctx);
    } else if (kind == "delta2") {
      o = delta2(ctx);
    } else if (kind == "cauchy") {
      o = cauchy(ctx);
    } else if (kind == "nets") {
      o = nets(ctx);
    } else if (kind == "kr") {
      o = kr(ctx);
    } else if (kind == "fuzzy") {
      o = fuzzy(ctx);
    } else if (kind == "adequacy") {
      o = adequacy(ctx);
    } else {
      throw SchemaError("config.experiment", "unknown experiment '" + kind + "'");
    }
  } catch (const PreconditionError& e) {
    // Violated preconditions are findings about the input, reported with
    // their witness rather than as usage errors.
    DiagnosticReport r;
    r.check = "precondition";
    r.fail(e.witness(), e.what());
    o = Outcome{};
    o.verdict = Verdict::kFail;
    o.report["reports"] = ordered_json::array({report_entry(r)});
  }
  ordered_json full;
  full["experiment"] = kind;
  full["seed"] = seed;
  full["verdict"] = to_string(o.verdict);
  for (auto& [k, v] : o.report.items()) full[k] = v;
  o.report = std::move(full);
  return o;
}

int run(const RunOptions& opts, std::ostream& log, std::ostream& err) {
  try {
    ordered_json config = io::read_json(opts.config);
    if (!config.is_object()) throw SchemaError("config", "expected an object");
    if (opts.experiment) config["experiment"] = *opts.experiment;
    std::uint64_t seed = 0;
    if (opts.seed) {
      seed = *opts.seed;
    } else if (config.contains("seed")) {
      seed = Node(config["seed"], "config.seed").count();
    }
    const Outcome o = run_experiment(config, opts.config.parent_path(), seed);

    fs::create_directories(opts.out);
    io::write_text(opts.out / "report.json", o.report.dump(2) + "\n");
    for (const auto& [name, text] : o.files) io::write_text(opts.out / name, text);
    ordered_json meta;
    meta["generated_at"] = timestamp();
    meta["config"] = fs::absolute(opts.config).string();
    meta["seed"] = seed;
    io::write_text(opts.out / "metadata.json", meta.dump(2) + "\n");
    if (!opts.quiet) {
      log << o.report["experiment"].get<std::string>() << ": " << to_string(o.verdict) << " ("
          << (opts.out / "report.json").string() << ")\n";
    }
    return exit_code(o.verdict);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int generate(const GenerateOptions& opts, std::ostream& log, std::ostream& err) {
  try {
    gen::Rng rng(opts.seed);
    if (opts.out.has_parent_path()) fs::create_directories(opts.out.parent_path());
    if (opts.kind == "metric_space") {
      const PointSpace s = gen::random_metric_space(rng, opts.n, opts.side, opts.min_separation);
      io::write_text(opts.out, io::to_json(s).dump(2) + "\n");
    } else if (opts.kind == "rademacher" || opts.kind == "lipschitz") {
      orlicz::FunctionFamily f =
          opts.kind == "rademacher"
              ? gen::rademacher_family(opts.m, opts.n)
              : gen::lipschitz_family(
                    [&] {
                      if (opts.m < 2) throw std::invalid_argument("lipschitz: need m >= 2 slopes");
                      std::vector<double> slopes;
                      for (std::size_t k = 0; k < opts.m; ++k) {
                        slopes.push_back(static_cast<double>(k) / static_cast<double>(opts.m - 1));
                      }
                      return slopes;
                    }(),
                    opts.n);
      io::write_text(opts.out, io::to_csv(f));
      const auto omega = orlicz::DiscreteMeasureSpace::uniform_1d(opts.n);
      io::write_text(opts.out.string() + ".measure.json", io::to_json(omega).dump(2) + "\n");
    } else {
      throw std::invalid_argument("unknown fixture kind '" + opts.kind +
                                  "' (expected metric_space, rademacher, lipschitz)");
    }
    log << "wrote " << opts.out.string() << "\n";
    return kExitPass;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace modspace::cli
