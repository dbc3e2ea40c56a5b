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

#include "bsenergy/classical_model.hpp"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

namespace bsenergy::classical {
namespace {

// (n - 1) 2^(n+1) + m (n (n + 1) / 2 - 1)
Uint128 closed_form(int m, int n) {
  const Uint128 nn = static_cast<Uint128>(n);
  return (nn - 1) * (static_cast<Uint128>(1) << (n + 1)) +
         static_cast<Uint128>(m) * (nn * (nn + 1) / 2 - 1);
}

const ClassicalPlatform kPlatform{};

TEST(FlopBound, Examples) {
  EXPECT_EQ(flop_lower_bound(61, 17.0), 4203576.0);
  EXPECT_EQ(flop_lower_bound(61, 17.0), 16.0 * 262144.0 + 61.0 * 152.0);
  EXPECT_EQ(flop_lower_bound(61, 1.9), 0.0);
  EXPECT_EQ(flop_lower_bound(5, 2.0), 18.0);
  EXPECT_EQ(flop_lower_bound(72, 21.0), 83902640.0);
}

TEST(FlopBound, ExactlyMatchesClosedForm) {
  for (int m : {1, 51, 61, 72}) {
    for (int n = 2; n <= 40; ++n) {
      const auto exact = flop_lower_bound_exact(m, n);
      ASSERT_TRUE(exact.has_value());
      EXPECT_TRUE(*exact == closed_form(m, n)) << m << " " << n;
      EXPECT_EQ(flop_lower_bound(m, n), static_cast<double>(closed_form(m, n)));
    }
  }
}

TEST(FlopBound, ExactIntegerRangeEndsAtLimit) {
  EXPECT_TRUE(flop_lower_bound_exact(61, kExactFlopLimit).has_value());
  EXPECT_FALSE(flop_lower_bound_exact(61, kExactFlopLimit + 1).has_value());
  EXPECT_TRUE(*flop_lower_bound_exact(61, kExactFlopLimit) == closed_form(61, kExactFlopLimit));
  // Floating-point continuation stays faithful to the closed form.
  for (int n = kExactFlopLimit + 1; n <= 120; ++n) {
    const double reference =
        (n - 1.0) * std::ldexp(1.0, n + 1) + 61.0 * (n * (n + 1.0) / 2.0 - 1.0);
    EXPECT_NEAR(flop_lower_bound(61, n), reference, 1e-14 * reference) << n;
  }
}

TEST(FlopBound, FloorsTheMetric) {
  EXPECT_EQ(flop_lower_bound(61, 16.99), flop_lower_bound(61, 16.0));
  EXPECT_EQ(flop_lower_bound(61, 17.5), flop_lower_bound(61, 17.0));
  EXPECT_THROW(flop_lower_bound(61, -1.0), std::invalid_argument);
  EXPECT_THROW(flop_lower_bound(0, 5.0), std::invalid_argument);
}

TEST(FlopBound, MonotoneInModesAndMetric) {
  for (int m = 1; m < 100; ++m) {
    EXPECT_LT(flop_lower_bound(m, 20.0), flop_lower_bound(m + 1, 20.0));
  }
  for (int n = 2; n < 80; ++n) {
    EXPECT_LT(flop_lower_bound(61, n), flop_lower_bound(61, n + 1));
  }
}

TEST(ClassicalEnergy, Examples) {
  const auto e17 = classical_energy_per_sample(61, 17.0, kPlatform);
  EXPECT_NEAR(e17.joule, 4203576.0 / 7.2733e10, 1e-18);
  EXPECT_NEAR(e17.joule, 5.78e-5, 5.78e-5 * 0.005);
  EXPECT_NEAR(e17.watt_hour(), 1.61e-8, 1.61e-8 * 0.005);
  EXPECT_EQ(classical_energy_per_sample(61, 1.5, kPlatform).joule, 0.0);
  const auto e21 = classical_energy_per_sample(72, 21.0, kPlatform);
  EXPECT_NEAR(e21.joule, 1.1536e-3, 1.1536e-3 * 0.005);
  EXPECT_NEAR(e21.watt_hour(), 3.20e-7, 3.20e-7 * 0.005);
}

TEST(ClassicalEnergy, RoughlyDoublesPerMetricUnit) {
  for (int m = 1; m <= 80; ++m) {
    for (int metric = 15; metric < 60; ++metric) {
      const double ratio = classical_energy_per_sample(m, metric + 1, kPlatform).joule /
                           classical_energy_per_sample(m, metric, kPlatform).joule;
      EXPECT_GE(ratio, 1.9);
      EXPECT_LE(ratio, 2.2);
    }
  }
}

TEST(ClassicalTime, Examples) {
  EXPECT_NEAR(classical_time_per_sample(72, 21.0, kPlatform), 1.865e-8, 1.865e-8 * 0.005);
  EXPECT_EQ(classical_time_per_sample(72, 1.0, kPlatform), 0.0);
  EXPECT_NEAR(classical_time_per_sample(61, 17.0, kPlatform), 9.34e-10, 9.34e-12);
}

TEST(Platform, GflopsConversion) {
  const auto p = ClassicalPlatform::from_gflops_per_watt(72.733, 4.5e15);
  EXPECT_DOUBLE_EQ(p.eta_e_flops_per_joule, 7.2733e10);
  EXPECT_DOUBLE_EQ(p.gflops_per_watt(), 72.733);
  EXPECT_DOUBLE_EQ(kPlatform.eta_e_flops_per_joule, 7.2733e10);
  ClassicalPlatform bad{0.0, 1.0};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(Rcs, ReferenceAndRatios) {
  const auto rcs = rcs_reference();
  EXPECT_DOUBLE_EQ(rcs.energy_per_sample_wh, 1e-3);
  EXPECT_DOUBLE_EQ(rcs.time_per_sample_s, 2e-4);
  EXPECT_NEAR(rcs_energy_ratio(rcs, Energy::from_watt_hour(1.26e-8)), 7.9e4, 0.05e4);
  EXPECT_DOUBLE_EQ(rcs_energy_ratio(rcs, Energy::from_watt_hour(1e-3)), 1.0);
  EXPECT_THROW(rcs_energy_ratio(rcs, Energy{0.0}), std::invalid_argument);
}

}  // namespace
}  // namespace bsenergy::classical
