/*
 * Copyright 2026 The bsenergy Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bsenergy/fluctuation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

namespace bsenergy::fluctuation {
namespace {

const ModelContext kCtx{};

McConfig config(std::size_t samples, std::uint64_t seed, unsigned threads = 1) {
  McConfig mc;
  mc.n_samples = samples;
  mc.seed = seed;
  mc.threads = threads;
  return mc;
}

TEST(DrawTransmitted, DegenerateChannels) {
  auto rng = CounterRng::stream(7, 0);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_EQ(draw_transmitted(29, 1.0, rng), 29);
    EXPECT_EQ(draw_transmitted(29, 0.0, rng), 0);
  }
  EXPECT_THROW(draw_transmitted(29, 1.5, rng), std::invalid_argument);
}

TEST(DrawTransmitted, BinomialMoments) {
  const double eta = 17.0 / 29.0;
  double sum = 0.0, sum_sq = 0.0;
  const int draws = 1000000;
  for (int i = 0; i < draws; ++i) {
    auto rng = CounterRng::stream(2024, static_cast<std::uint64_t>(i));
    const int t = draw_transmitted(29, eta, rng);
    ASSERT_GE(t, 0);
    ASSERT_LE(t, 29);
    sum += t;
    sum_sq += static_cast<double>(t) * t;
  }
  const double mean = sum / draws;
  const double var = sum_sq / draws - mean * mean;
  EXPECT_NEAR(mean, 17.0, 0.02);
  EXPECT_NEAR(std::sqrt(var), std::sqrt(29.0 * eta * (1.0 - eta)), 0.05);
  EXPECT_NEAR(std::sqrt(var), 2.65, 0.05);
}

TEST(RunFluctuation, ExperimentA) {
  const auto r = run_fluctuation(29, 61, 0.60, 3.0, config(10000, 1), kCtx);
  EXPECT_NEAR(r.mean_e_c.watt_hour(), 1.3e-7, 0.4 * 1.3e-7);
  EXPECT_NEAR(r.e_q.watt_hour(), 1.44e-8, 0.0144e-8);
  EXPECT_GT(r.mean_e_c.joule / r.e_q.joule, 5.0);
}

TEST(RunFluctuation, ExperimentB) {
  const auto r = run_fluctuation(24, 51, 0.60, 3.0, config(10000, 1), kCtx);
  EXPECT_NEAR(r.mean_metric, 15.0, 1.0);
  const double ratio = r.mean_e_c.joule / r.e_q.joule;
  EXPECT_GT(ratio, 1.0 / 1.6);
  EXPECT_LT(ratio, 1.6);
}

TEST(RunFluctuation, PerfectChannelIsDegenerate) {
  const auto r = run_fluctuation(24, 51, 1.0, 3.0, config(500, 3), kCtx);
  const auto expected = metric::evaluate_metric_at(
      photon::effective_indistinguishability(3.0, kCtx.distinguishability),
      metric::SamplingInstance{24, 51, 0.0}, kCtx.tolerances);
  ASSERT_EQ(r.metric_histogram.size(), 1u);
  EXPECT_EQ(r.metric_histogram.begin()->second, 500u);
  EXPECT_DOUBLE_EQ(r.mean_metric, expected.value);
  EXPECT_DOUBLE_EQ(r.mean_e_c.joule,
                   classical::classical_energy_per_sample(51, expected.value, kCtx.platform).joule);
  EXPECT_EQ(r.min_lost, 0);
}

TEST(RunFluctuation, HistogramAccountsForEverySample) {
  for (int n : {24, 29}) {
    const auto r = run_fluctuation(n, metric::mode_count(n), 0.6, 3.0, config(10000, 9), kCtx);
    std::size_t total = 0;
    for (const auto& [bin, count] : r.metric_histogram) {
      total += count;
      EXPECT_GE(bin, 0);
      EXPECT_LE(bin, n - r.min_lost);
    }
    EXPECT_EQ(total, r.n_samples);
    EXPECT_GE(r.mean_e_c.joule, 0.0);
  }
}

TEST(RunFluctuation, JensenLowerBound) {
  for (int n : {24, 29}) {
    const int m = metric::mode_count(n);
    const auto r = run_fluctuation(n, m, 0.6, 3.0, config(10000, 5), kCtx);
    EXPECT_GE(r.mean_e_c.joule,
              classical::classical_energy_per_sample(m, r.mean_metric, kCtx.platform).joule);
  }
}

TEST(RunFluctuation, AllPhotonsLostCostsNothing) {
  // eta tiny: nearly every sample loses everything and contributes zero.
  const auto r = run_fluctuation(3, 7, 1e-9, 3.0, config(1000, 1), kCtx);
  EXPECT_EQ(r.mean_metric, 0.0);
  EXPECT_EQ(r.mean_e_c.joule, 0.0);
  EXPECT_EQ(r.metric_histogram.at(0), 1000u);
}

TEST(RunFluctuation, BitIdenticalAcrossThreadCounts) {
  const auto reference = run_fluctuation(29, 61, 0.6, 3.0, config(20000, 42, 1), kCtx);
  for (unsigned threads : {2u, 3u, 8u}) {
    const auto r = run_fluctuation(29, 61, 0.6, 3.0, config(20000, 42, threads), kCtx);
    EXPECT_EQ(r.mean_metric, reference.mean_metric);
    EXPECT_EQ(r.mean_e_c, reference.mean_e_c);
    EXPECT_EQ(r.mean_t_c_s, reference.mean_t_c_s);
    EXPECT_EQ(r.metric_histogram, reference.metric_histogram);
  }
}

TEST(RunFluctuation, SeedsChangeTheDrawsButNotTheScale) {
  for (int n : {24, 29}) {
    double lo = INFINITY, hi = 0.0, sum = 0.0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const auto r =
          run_fluctuation(n, metric::mode_count(n), 0.6, 3.0, config(10000, seed), kCtx);
      lo = std::min(lo, r.mean_e_c.joule);
      hi = std::max(hi, r.mean_e_c.joule);
      sum += r.mean_e_c.joule;
    }
    EXPECT_GT(hi, lo);
    EXPECT_LT((hi - lo) / (sum / 10.0), 0.5) << n;
  }
}

TEST(LocateCrossing, InterpolatesLogRatio) {
  // ln(c/q) goes from ln(0.5) to ln(2): the crossing is halfway in <M>.
  const auto x = locate_crossing({10.0, 12.0}, {2.0, 1.0}, {1.0, 2.0});
  ASSERT_TRUE(x.has_value());
  EXPECT_NEAR(*x, 11.0, 1e-12);
  const auto first = locate_crossing({10.0, 12.0}, {1.0, 1.0}, {2.0, 3.0});
  EXPECT_EQ(*first, 10.0);
  EXPECT_FALSE(locate_crossing({10.0, 12.0}, {2.0, 2.0}, {1.0, 1.5}).has_value());
  EXPECT_THROW(locate_crossing({1.0}, {1.0, 2.0}, {1.0}), std::invalid_argument);
}

TEST(AveragedThresholds, CheaperClassicalEnergyDelaysEnergyCrossing) {
  const auto targets = optimizer::integer_targets(1, 30);
  const auto base =
      averaged_thresholds(12.0, targets, optimizer::SearchSpace{}, config(2000, 1), kCtx);
  auto ctx = kCtx;
  // E^C scales as 2^M / eta_e: a factor 1e6 costs about log2(1e6) ~ 20 metric units,
  // less the slow growth of E^Q along the sweep.
  ctx.platform.eta_e_flops_per_joule *= 1e6;
  const auto cheap =
      averaged_thresholds(12.0, targets, optimizer::SearchSpace{}, config(2000, 1), ctx);
  ASSERT_TRUE(base.energy.has_value());
  ASSERT_TRUE(cheap.energy.has_value());
  EXPECT_GT(*cheap.energy, *base.energy + 10.0);
  ctx.platform.eta_e_flops_per_joule *= 1e3;
  const auto cheaper =
      averaged_thresholds(12.0, targets, optimizer::SearchSpace{}, config(2000, 1), ctx);
  EXPECT_FALSE(cheaper.energy.has_value());
}

TEST(AveragedThresholds, EnergyCrossingPrecedesComputational) {
  const auto avg = averaged_thresholds(12.0, optimizer::integer_targets(1, 30),
                                       optimizer::SearchSpace{}, config(10000, 1), kCtx);
  ASSERT_TRUE(avg.energy.has_value());
  ASSERT_TRUE(avg.computational.has_value());
  EXPECT_NEAR(*avg.energy, 15.0, 1.0);
  EXPECT_LT(*avg.energy, *avg.computational);
  for (const auto& row : avg.rows) {
    EXPECT_LT(row.mean_metric, row.point.metric_achieved + 1.0);
  }
}

TEST(McConfig, Validation) {
  McConfig mc;
  EXPECT_NO_THROW(mc.validate());
  mc.n_samples = 0;
  EXPECT_THROW(mc.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace bsenergy::fluctuation
