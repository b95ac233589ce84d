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

#include <cmath>

#include "modspace/builders.hpp"
#include "modspace/gauges.hpp"
#include "modspace/monotone_search.hpp"
#include "modspace/orlicz.hpp"
#include "property.hpp"

namespace modspace {
namespace {

PointSpace pair_space(double d) {
  return PointSpace({"x", "y"}, SquareMatrix::from_rows({{0, d}, {d, 0}}));
}

TEST(InfimumMonotone, ClosedFormAndFlags) {
  SearchOptions opts{1e-6, 1e6, 1e-10, 60};
  const auto r = infimum_monotone([](double l) { return 4.0 / l <= l; }, opts);
  EXPECT_NEAR(r.value.value(), 2.0, 1e-9);
  EXPECT_LE(r.bracket_low, r.value.value());
  EXPECT_GE(r.bracket_high, r.value.value());
  EXPECT_LE(r.bracket_high - r.bracket_low, opts.tol);

  const auto t = infimum_monotone([](double) { return true; }, opts);
  EXPECT_TRUE(t.flags.at_floor);
  EXPECT_DOUBLE_EQ(t.value.value(), opts.floor);

  const auto f = infimum_monotone([](double) { return false; }, opts);
  EXPECT_TRUE(f.flags.at_cap);
  EXPECT_TRUE(f.value.is_infinite());
}

TEST(InfimumMonotone, CapDoublesForLateThresholds) {
  SearchOptions opts{1e-3, 10.0, 1e-8, 60};
  const auto r = infimum_monotone([](double l) { return l >= 1000.0; }, opts);
  EXPECT_NEAR(r.value.value(), 1000.0, 1e-6);
}

TEST(InfimumMonotone, NonMonotonePredicateThrows) {
  // True at the first quartile probe, false at the middle one, true at the cap.
  const auto pred = [](double l) { return (l >= 1e-7 && l < 0.5) || l >= 1e11; };
  EXPECT_THROW(infimum_monotone(pred), PreconditionError);
}

TEST(InfimumMonotone, AgreesWithDenseScanOracle) {
  testing::for_all_seeds(50, 10, [](gen::Rng& rng, std::uint64_t) {
    const double threshold = std::exp(rng.uniform(std::log(1e-4), std::log(1e4)));
    const auto pred = [threshold](double l) { return l >= threshold; };
    SearchOptions opts{1e-6, 1e6, 1e-10, 60};
    const double engine = infimum_monotone(pred, opts).value.value();
    const double oracle = testing::scan_infimum(pred, 1e-6, 1e6, 1 << 14);
    // The oracle's grid spacing bounds how far it can sit above the truth.
    const double spacing = oracle * (std::exp(std::log(1e12) / ((1 << 14) - 1)) - 1.0);
    EXPECT_LE(engine, oracle + 10 * opts.tol);
    EXPECT_GE(engine, oracle - spacing - 10 * opts.tol);
  });
}

TEST(D0Test, ClosedFormInstances) {
  const auto w = from_scaled_metric(pair_space(16.0), power_scale(1.0));
  EXPECT_NEAR(d0(w, 0, 1).value.value(), 4.0, 1e-9);
  const auto diag = d0(w, 1, 1);
  EXPECT_EQ(diag.value.value(), 0.0);
  EXPECT_TRUE(diag.flags.at_floor);
  EXPECT_TRUE(diag.flags.exact);

  // Oracle: solve 1/(l+1) <= l, i.e. l^2 + l - 1 >= 0.
  const auto sat = from_saturating_metric(pair_space(1.0), power_growth(1.0, 1.0));
  EXPECT_NEAR(d0(sat, 0, 1).value.value(), (std::sqrt(5.0) - 1.0) / 2.0, 1e-9);
  const double scan = testing::scan_infimum([](double l) { return 1.0 / (l + 1.0) <= l; }, 0.1, 10.0, 1 << 16);
  EXPECT_NEAR(d0(sat, 0, 1).value.value(), scan, 1e-4);
}

TEST(DstarTest, ClosedFormInstances) {
  const auto w = from_scaled_metric(pair_space(16.0), power_scale(1.0));
  EXPECT_NEAR(dstar(w, 0, 1).value.value(), 16.0, 1e-8);
  EXPECT_EQ(dstar(w, 0, 0).value.value(), 0.0);

  const orlicz::OrliczModular rho(orlicz::lp(2.0), orlicz::DiscreteMeasureSpace({0.5, 0.5}));
  const auto fam = orlicz::FunctionFamily::from_rows({{2.0, 2.0}, {0.0, 0.0}});
  EXPECT_NEAR(dstar(orlicz::induced_modular(rho, fam), 0, 1).value.value(), 2.0, 1e-9);
}

TEST(D0Property, ClosedFormForPowerScales) {
  testing::for_all_seeds(40, 500, [](gen::Rng& rng, std::uint64_t) {
    const double d = rng.uniform(1e-3, 100.0);
    for (double p : {0.0, 1.0, 2.0, 3.0}) {
      const auto w = from_scaled_metric(pair_space(d), power_scale(p));
      EXPECT_NEAR(d0(w, 0, 1).value.value(), std::pow(d, 1.0 / (p + 1.0)), 1e-8) << "p=" << p;
    }
  });
}

TEST(PhiGauges, IdentityCoincidesWithD0) {
  testing::for_all_seeds(10, 40, [](gen::Rng& rng, std::uint64_t) {
    const auto w = from_scaled_metric(pair_space(rng.uniform(0.1, 50.0)), power_scale(rng.uniform(0.0, 3.0)));
    EXPECT_EQ(d0_phi(w, phi_identity(), 0, 1).value.value(), d0(w, 0, 1).value.value());
  });
}

TEST(PhiGauges, D1PhiCalculusOracle) {
  const auto w = from_scaled_metric(pair_space(4.0), power_scale(1.0));
  const double lo = d0_phi(w, phi_identity(), 0, 1).value.value();
  const double hi = d1_phi(w, phi_identity(), 0, 1).value.value();
  EXPECT_NEAR(lo, 2.0, 1e-9);
  EXPECT_NEAR(hi, 4.0, 1e-9);
  EXPECT_LE(lo, hi);
  EXPECT_LE(hi, 2.0 * lo + 1e-8);
}

TEST(PhiGauges, SandwichOnRandomSpaces) {
  testing::for_all_seeds(10, 60, [](gen::Rng& rng, std::uint64_t) {
    const auto w = from_scaled_metric(gen::random_metric_space(rng, 5), power_scale(rng.uniform(1.0, 3.0)));
    for (const auto& phi : {phi_identity(), phi_power(2.0)}) {
      for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
          const double lo = d0_phi(w, phi, i, j).value.value();
          const double hi = d1_phi(w, phi, i, j).value.value();
          EXPECT_LE(lo, hi + 1e-8);
          EXPECT_LE(hi, 2.0 * lo + 1e-8);
        }
      }
    }
  });
}

TEST(LuxemburgTest, ClosedForms) {
  const orlicz::OrliczModular l1(orlicz::lp(1.0), orlicz::DiscreteMeasureSpace({0.5, 0.5}));
  const std::vector<double> u{3.0, 1.0};
  EXPECT_NEAR(luxemburg(l1, u).value.value(), 2.0, 1e-9);
  const std::vector<double> zero{0.0, 0.0};
  const auto z = luxemburg(l1, zero);
  EXPECT_EQ(z.value.value(), 0.0);
  EXPECT_TRUE(z.flags.at_floor);

  const orlicz::OrliczModular ex(orlicz::exp_squared(), orlicz::DiscreteMeasureSpace({1.0}));
  const std::vector<double> v{std::sqrt(std::log(2.0))};
  EXPECT_NEAR(luxemburg(ex, v).value.value(), 1.0, 1e-9);
}

TEST(LuxemburgProperty, HomogeneousAndMatchesLpNorm) {
  testing::for_all_seeds(30, 70, [](gen::Rng& rng, std::uint64_t) {
    const std::size_t n = 1 + rng.index(8);
    const auto masses = testing::random_vector(rng, n, 0.1, 1.0);
    const double p = std::vector<double>{1.0, 1.5, 2.0, 3.0, 4.0}[rng.index(5)];
    const orlicz::OrliczModular rho(orlicz::lp(p), orlicz::DiscreteMeasureSpace(masses));
    const auto u = testing::random_vector(rng, n, -5.0, 5.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += std::pow(std::abs(u[i]), p) * masses[i];
    const double norm = std::pow(sum, 1.0 / p);
    const double got = luxemburg(rho, u).value.value();
    EXPECT_NEAR(got, norm, 1e-8 * std::max(1.0, norm));
    const double c = rng.uniform(-4.0, 4.0);
    std::vector<double> cu(u);
    for (double& x : cu) x *= c;
    EXPECT_NEAR(luxemburg(rho, cu).value.value(), std::abs(c) * got, 1e-8 * std::max(1.0, std::abs(c) * got));
  });
}

TEST(GaugeMatrixTest, ScaledGivesSquareRootMetric) {
  const auto space = PointSpace::from_distance(SquareMatrix::from_rows({{0, 1, 4}, {1, 0, 3}, {4, 3, 0}}));
  const auto gm = gauge_matrix(from_scaled_metric(space, power_scale(1.0)), GaugeKind::kD0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_NEAR(gm.matrix(i, j), std::sqrt(space.distance(i, j).value()), 1e-9);
    }
  }
  EXPECT_TRUE(gm.validation.passed());
  EXPECT_EQ(gm.matrix.provenance.rfind("d0(", 0), 0u);
}

TEST(GaugeMatrixTest, OnePointSpace) {
  const auto gm = gauge_matrix(from_scaled_metric(PointSpace::from_distance(SquareMatrix(1)), power_scale(1.0)),
                               GaugeKind::kDstar);
  ASSERT_EQ(gm.matrix.size(), 1u);
  EXPECT_EQ(gm.matrix(0, 0), 0.0);
}

TEST(GaugeMatrixTest, KindNamesRoundTrip) {
  for (auto k : {GaugeKind::kD0, GaugeKind::kDstar, GaugeKind::kD0Phi, GaugeKind::kD1Phi}) {
    EXPECT_EQ(gauge_kind_from_string(to_string(k)), k);
  }
  EXPECT_EQ(gauge_kind_from_string("dw"), GaugeKind::kD0);
  EXPECT_THROW(gauge_kind_from_string("d2"), std::invalid_argument);
}

TEST(GaugeMatrixProperty, SandwichAndPseudometric) {
  testing::for_all_seeds(20, 900, [](gen::Rng& rng, std::uint64_t) {
    const double side = rng.uniform(0.5, 20.0);
    const auto space = gen::random_metric_space(rng, 6, side);
    // d0 is a pseudometric for every modular; d* and the sandwich need
    // convexity, which the power scale has exactly when p >= 1.
    const auto any = from_scaled_metric(space, power_scale(rng.uniform(0.0, 3.0)));
    EXPECT_TRUE(gauge_matrix(any, GaugeKind::kD0).validation.passed());
    const auto w = from_scaled_metric(space, power_scale(rng.uniform(1.0, 3.0)));
    ASSERT_TRUE(w.claims().convex);
    const auto a = gauge_matrix(w, GaugeKind::kD0);
    const auto b = gauge_matrix(w, GaugeKind::kDstar);
    EXPECT_TRUE(a.validation.passed());
    EXPECT_TRUE(b.validation.passed());
    EXPECT_TRUE(check_sandwich(a.matrix, b.matrix, 1e-8).passed());
  });
}

TEST(SandwichTest, DetectsViolation) {
  DistanceMatrix a{SquareMatrix::from_rows({{0, 5}, {5, 0}}), "a", 0.0};
  DistanceMatrix b{SquareMatrix::from_rows({{0, 1}, {1, 0}}), "b", 0.0};
  const auto r = check_sandwich(a, b, 1e-8);
  ASSERT_TRUE(r.failed());
  EXPECT_EQ(r.witnesses.front().kind, "sandwich");
}

TEST(D0Test, RejectsIncreasingFamily) {
  const ModularFamily up(pair_space(1.0),
                         [](double l, std::size_t i, std::size_t j) { return i == j ? XReal(0.0) : XReal(l); },
                         ModularClaims{}, "increasing");
  EXPECT_THROW(d0(up, 0, 1), PreconditionError);
}

}  // namespace
}  // namespace modspace
