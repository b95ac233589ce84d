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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "modspace/builders.hpp"
#include "modspace/gauges.hpp"
#include "modspace/topology.hpp"
#include "property.hpp"

namespace modspace {
namespace {

PointSpace line(const std::vector<double>& xs) {
  SquareMatrix d(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < xs.size(); ++j) d(i, j) = std::abs(xs[i] - xs[j]);
  }
  return PointSpace(default_labels(xs.size()), std::move(d));
}

bool contains(const std::vector<std::size_t>& v, std::size_t x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::all_of(a.begin(), a.end(), [&](std::size_t x) { return contains(b, x); });
}

TEST(BallTest, Membership) {
  const auto w = from_scaled_metric(line({0.0, 2.0, 0.5}), power_scale(1.0));
  const Ball b = ball(w, 1.0, 1.0, 0);
  EXPECT_TRUE(contains(b.members, 0));
  EXPECT_FALSE(contains(b.members, 1));  // w = 2 >= 1
  EXPECT_TRUE(contains(b.members, 2));
  EXPECT_EQ(ball(w, 1.0, 1e300, 0).members.size(), 3u);
}

TEST(BallProperty, MonotoneInMuAndLambda) {
  testing::for_all_seeds(20, 1, [](gen::Rng& rng, std::uint64_t) {
    const auto w = from_scaled_metric(gen::random_metric_space(rng, 7), power_scale(rng.uniform(0.0, 3.0)));
    const std::size_t x = rng.index(7);
    const double l1 = rng.uniform(0.05, 2.0), l2 = l1 + rng.uniform(0.0, 2.0);
    const double m1 = rng.uniform(0.05, 2.0), m2 = m1 + rng.uniform(0.0, 2.0);
    EXPECT_TRUE(is_subset(ball(w, l1, m1, x).members, ball(w, l1, m2, x).members));
    EXPECT_TRUE(is_subset(ball(w, l1, m1, x).members, ball(w, l2, m1, x).members));
  });
}

TEST(EntourageTest, DiagonalAndExclusion) {
  const auto w = from_scaled_metric(line({0.0, 0.05}), power_scale(1.0));
  const Entourage v = entourage(w, 10);
  EXPECT_TRUE(v.contains(0, 0));
  EXPECT_TRUE(v.contains(1, 1));
  EXPECT_FALSE(v.contains(0, 1));  // w(0.1) = 0.5 >= 0.1
  EXPECT_EQ(v.pair_count(), 2u);
}

TEST(EntourageProperty, CompositionOnAllBuilders) {
  testing::for_all_seeds(8, 40, [](gen::Rng& rng, std::uint64_t) {
    const auto space = gen::random_metric_space(rng, 6);
    const std::vector<ModularFamily> ws{
        from_scaled_metric(space, power_scale(rng.uniform(0.0, 3.0))),
        from_saturating_metric(space, power_growth(1.0, rng.uniform(0.0, 2.0))), step_modular(space)};
    for (const auto& w : ws) {
      for (std::size_t n = 1; n <= 16; ++n) EXPECT_TRUE(composition_check(w, n).passed()) << w.name() << " n=" << n;
    }
  });
}

TEST(EntourageTest, CompositionDetectsBrokenModular) {
  const auto space = PointSpace({"a", "b", "c"}, SquareMatrix::from_rows({{0, 0.1, 5}, {0.1, 0, 0.1}, {5, 0.1, 0}}),
                                TriangleCheck::kSkip);
  const ModularFamily w(space, [space](double, std::size_t i, std::size_t j) { return space.distance(i, j); },
                        ModularClaims{}, "constant");
  const auto r = composition_check(w, 1);
  ASSERT_TRUE(r.failed());
  EXPECT_EQ(r.witnesses.front().points.size(), 3u);
}

TEST(MetrizationTest, DefinitionalEntries) {
  // w = d / lambda: (x,y) in V_n iff d < 1/n^2.
  const double d = 1.0 / 12.0;  // in V_3 (1/9), not in V_4 (1/16)
  const auto w = from_scaled_metric(line({0.0, d, 10.0}), power_scale(1.0));
  const Metrization m = metrize_uniformity(w, 12);
  EXPECT_DOUBLE_EQ(m.raw(0, 1), 0.125);
  EXPECT_DOUBLE_EQ(m.raw(0, 2), 1.0);
  EXPECT_DOUBLE_EQ(m.raw(0, 0), std::ldexp(1.0, -12));
  EXPECT_DOUBLE_EQ(m.raw.resolution, std::ldexp(1.0, -12));
  EXPECT_EQ(m.chained(0, 0), 0.0);
}

TEST(MetrizationProperty, ChainedIsPseudometric) {
  testing::for_all_seeds(20, 70, [](gen::Rng& rng, std::uint64_t) {
    const auto w = from_scaled_metric(gen::random_metric_space(rng, 6), power_scale(rng.uniform(0.0, 3.0)));
    EXPECT_TRUE(validate_pseudometric(metrize_uniformity(w, 16).chained.values).passed());
  });
}

TEST(RefinementTest, ReflexiveAndScaleInvariant) {
  testing::for_all_seeds(15, 80, [](gen::Rng& rng, std::uint64_t) {
    const auto space = gen::random_metric_space(rng, 6);
    DistanceMatrix a{space.distance_matrix(), "a", 0.0};
    const auto w = from_scaled_metric(space, power_scale(1.0));
    const auto b = gauge_matrix(w, GaugeKind::kD0).matrix;
    std::vector<double> radii{0.05, 0.1, 0.2, 0.4, 0.8};
    EXPECT_EQ(refinement_compare(a, a, radii).direction, Direction::kMutual);
    const double c = rng.uniform(0.2, 5.0);
    std::vector<double> scaled;
    for (double r : radii) scaled.push_back(c * r);
    EXPECT_EQ(refinement_compare(a, b, radii).direction,
              refinement_compare(a.scaled(c), b.scaled(c), scaled).direction);
  });
}

std::vector<double> dyadic_radii() {
  std::vector<double> out;
  for (int k = 0; k <= 24; ++k) out.push_back(std::ldexp(1.0, -k));
  return out;
}

TEST(RefinementTest, ScaledModularIsMutual) {
  testing::for_all_seeds(20, 120, [](gen::Rng& rng, std::uint64_t) {
    const auto w = from_scaled_metric(gen::random_metric_space(rng, 6), power_scale(1.0));
    const auto v = refinement_compare(metrize_uniformity(w, 16).chained, gauge_matrix(w, GaugeKind::kD0).matrix,
                                      dyadic_radii());
    EXPECT_EQ(v.direction, Direction::kMutual);
  });
}

TEST(RefinementTest, StepModularIsNotMutual) {
  const auto w = step_modular(line({0.0, 0.03, 0.3, 0.7, 1.6}));
  const auto v = refinement_compare(metrize_uniformity(w, 16).chained, gauge_matrix(w, GaugeKind::kD0).matrix,
                                    dyadic_radii());
  EXPECT_NE(v.direction, Direction::kMutual);
  EXPECT_FALSE(v.witnesses.empty());
  EXPECT_EQ(to_string(v.direction), "B_refines_A");
}

TEST(Delta2Test, ScaledConvergentSequenceHasNoViolation) {
  const auto seq = gen::power_sequence(1.0, 1.0, 400);
  const auto w = from_scaled_metric(seq.space, power_scale(1.0));
  const auto r = delta2_diagnostic(w, {seq.sequence}, {0.5, 1.0, 2.0}, 50, 0.05);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.summary, "no violation found");
  EXPECT_GT(*r.get_metric("premises_satisfied"), 0.0);
}

TEST(Delta2Test, ConstantSequence) {
  const auto w = from_scaled_metric(line({0.0, 1.0}), power_scale(1.0));
  const Delta2Sequence s{std::vector<std::size_t>(20, 0), 0};
  EXPECT_TRUE(delta2_diagnostic(w, {s}, {1.0}, 5, 0.0).passed());
}

TEST(Delta2Test, StepModularViolation) {
  std::vector<double> xs{0.0};
  for (int k = 2; k <= 41; ++k) xs.push_back(1.0 - 1.0 / k);
  const auto w = step_modular(line(xs));
  Delta2Sequence s{{}, 0};
  for (std::size_t i = 1; i < xs.size(); ++i) s.points.push_back(i);
  const auto r = delta2_diagnostic(w, {s}, {1.0}, 10, 0.05);
  ASSERT_TRUE(r.failed());
  const auto& wit = r.witnesses.front();
  EXPECT_EQ(wit.kind, "delta2");
  EXPECT_TRUE(std::isinf(*wit.get("w_half")));
}

TEST(Delta2Test, InconclusiveWithoutPremise) {
  const auto w = step_modular(line({0.0, 5.0}));
  const Delta2Sequence s{std::vector<std::size_t>(20, 1), 0};
  EXPECT_EQ(delta2_diagnostic(w, {s}, {1.0}, 5, 0.0).verdict, Verdict::kInconclusive);
}

TEST(Delta2Test, ShortTraceRejected) {
  const auto w = step_modular(line({0.0, 5.0}));
  EXPECT_THROW(delta2_diagnostic(w, {{{1, 1, 1}, 0}}, {1.0}, 5, 0.0), std::invalid_argument);
}

TEST(FuzzyTest, ArithmeticAndDiagonal) {
  DistanceMatrix d{SquareMatrix::from_rows({{0, 3}, {3, 0}}), "d", 0.0};
  EXPECT_DOUBLE_EQ(fuzzy_from_metric(d, 1.0)(0, 1), 0.25);
  for (double t : {0.1, 1.0, 7.0}) EXPECT_DOUBLE_EQ(fuzzy_from_metric(d, t)(1, 1), 1.0);
}

TEST(FuzzyProperty, MutualWithExactBallIdentity) {
  testing::for_all_seeds(20, 160, [](gen::Rng& rng, std::uint64_t) {
    const auto space = gen::random_metric_space(rng, 6);
    DistanceMatrix d{space.distance_matrix(), "d", 0.0};
    const auto c = fuzzy_refinement(d, {0.5, 1.0, 2.0}, {0.1, 0.3, 0.5, 0.7, 0.9});
    EXPECT_EQ(c.verdict.direction, Direction::kMutual);
    EXPECT_EQ(c.identity_mismatches, 0u);
    // Independent restatement of the identity for one (t, r).
    const double t = 1.0, r = 0.3;
    const auto m = fuzzy_from_metric(d, t);
    for (std::size_t x = 0; x < 6; ++x) {
      std::vector<std::size_t> metric;
      for (std::size_t y = 0; y < 6; ++y) {
        if (d(x, y) < t * r / (1.0 - r)) metric.push_back(y);
      }
      EXPECT_EQ(fuzzy_ball(m, x, r), metric);
    }
  });
}

// Brute force over ordered pairs, written independently of the library loop.
double defect_oracle(const SquareMatrix& d, const std::vector<std::size_t>& anchors) {
  double worst = 0.0;
  for (std::size_t x1 = 0; x1 < d.size(); ++x1) {
    for (std::size_t x2 = 0; x2 < d.size(); ++x2) {
      std::vector<double> diffs;
      for (std::size_t a : anchors) diffs.push_back(d(a, x2) - d(a, x1));
      worst = std::max(worst, d(x1, x2) - *std::max_element(diffs.begin(), diffs.end()));
    }
  }
  return worst;
}

TEST(AdequacyTest, SmallSpacesMatchOracle) {
  DistanceMatrix two{SquareMatrix::from_rows({{0, 1.5}, {1.5, 0}}), "d", 0.0};
  EXPECT_DOUBLE_EQ(adequacy_defect(two, {0}).defect, defect_oracle(two.values, {0}));
  EXPECT_DOUBLE_EQ(adequacy_defect(two, {0}).defect, 3.0);

  DistanceMatrix tri{SquareMatrix::from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}), "d", 0.0};
  const auto a = adequacy_defect(tri, {0});
  EXPECT_EQ(a.defect, defect_oracle(tri.values, {0}));
  EXPECT_EQ(a.defect, 2.0);
}

TEST(AdequacyProperty, FullAnchorSetIsExactlyZero) {
  testing::for_all_seeds(30, 180, [](gen::Rng& rng, std::uint64_t) {
    const std::size_t n = 2 + rng.index(7);
    const auto space = gen::random_metric_space(rng, n);
    DistanceMatrix d{space.distance_matrix(), "d", 0.0};
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    EXPECT_EQ(adequacy_defect(d, all).defect, 0.0);
    const std::vector<std::size_t> some{rng.index(n)};
    EXPECT_EQ(adequacy_defect(d, some).defect, defect_oracle(d.values, some));
  });
}

}  // namespace
}  // namespace modspace
