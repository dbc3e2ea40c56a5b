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

#include "bsenergy/photon_model.hpp"

#include <cmath>
#include <stdexcept>

#include <gtest/gtest.h>

namespace bsenergy::photon {
namespace {

// Geometric-series form of the Bose-Einstein occupation.
double occupation_series(double temperature_k, const PhononCoupling& p) {
  const double q = std::exp(-p.epsilon_p_mev / (p.boltzmann_mev_per_k * temperature_k));
  double sum = 0.0, term = q;
  for (int k = 0; k < 200 && term > 1e-300; ++k) {
    sum += term;
    term *= q;
  }
  return sum;
}

DistinguishabilityModel fixed_zpl_model(double eta) {
  DistinguishabilityModel model;
  model.zpl.eta0 = eta;
  model.zpl.slope_per_k = 0.0;
  return model;
}

TEST(BoseEinstein, ThreeKelvinValue) {
  const PhononCoupling p;
  EXPECT_NEAR(bose_einstein_occupation(3.0, p), 0.02134, 1e-4);
  EXPECT_NEAR(bose_einstein_occupation(3.0, p), occupation_series(3.0, p), 1e-14);
}

TEST(BoseEinstein, MatchesSeriesOnGrid) {
  const PhononCoupling p;
  for (double t = 0.5; t <= 10.0; t += 0.5) {
    const double exact = bose_einstein_occupation(t, p);
    EXPECT_NEAR(exact, occupation_series(t, p), 1e-12 * std::max(1.0, exact)) << t;
  }
}

TEST(BoseEinstein, VanishesAtLowTemperature) {
  const PhononCoupling p;
  EXPECT_LT(bose_einstein_occupation(0.01, p), 1e-40);
  EXPECT_EQ(bose_einstein_occupation(1e-4, p), 0.0);
}

TEST(BoseEinstein, EqualsOneWhenExponentIsLnTwo) {
  const PhononCoupling p;
  const double t = p.epsilon_p_mev / (p.boltzmann_mev_per_k * std::log(2.0));
  EXPECT_NEAR(t, 16.74, 0.01);
  EXPECT_NEAR(bose_einstein_occupation(t, p), 1.0, 1e-12);
}

TEST(BoseEinstein, StrictlyIncreasing) {
  const PhononCoupling p;
  double previous = bose_einstein_occupation(0.5, p);
  for (int i = 6; i <= 500; ++i) {
    const double value = bose_einstein_occupation(0.1 * i, p);
    EXPECT_GT(value, previous) << 0.1 * i;
    previous = value;
  }
}

TEST(BoseEinstein, RejectsNonPositiveTemperature) {
  const PhononCoupling p;
  EXPECT_THROW(bose_einstein_occupation(0.0, p), std::invalid_argument);
  EXPECT_THROW(bose_einstein_occupation(-1.0, p), std::invalid_argument);
}

TEST(PureDephasing, ThreeKelvinValue) {
  const PhononCoupling p;
  const double n = occupation_series(3.0, p);
  EXPECT_NEAR(pure_dephasing_rate(3.0, p), 2.180e-3, 2.180e-5);
  EXPECT_NEAR(pure_dephasing_rate(3.0, p), 0.1 * n * (n + 1.0), 1e-15);
}

TEST(PureDephasing, LimitsAndLinearity) {
  PhononCoupling p;
  EXPECT_EQ(pure_dephasing_rate(1e-4, p), 0.0);
  PhononCoupling doubled = p;
  doubled.alpha_uev = 2.0 * p.alpha_uev;
  PhononCoupling zero = p;
  zero.alpha_uev = 0.0;
  for (double t : {0.5, 3.0, 20.0}) {
    EXPECT_DOUBLE_EQ(pure_dephasing_rate(t, doubled), 2.0 * pure_dephasing_rate(t, p));
    EXPECT_EQ(pure_dephasing_rate(t, zero), 0.0);
  }
  double previous = pure_dephasing_rate(0.5, p);
  for (int i = 6; i <= 500; ++i) {
    const double value = pure_dephasing_rate(0.1 * i, p);
    EXPECT_GT(value, previous);
    previous = value;
  }
}

TEST(EmissionRate, ThreeKelvinWithFixedZplFraction) {
  const auto model = fixed_zpl_model(0.9);
  const double purcell = cavity_enhanced_rate(3.0, model);
  EXPECT_NEAR(purcell, 178.69, 178.69e-3);
  EXPECT_NEAR(zpl_emission_rate(3.0, model), 161.48, 161.48e-3);
  const double g = 90.0 / std::sqrt(2.0);
  const double gamma_star = pure_dephasing_rate(3.0, model.phonon);
  EXPECT_NEAR(purcell, 4.0 * g * g / (90.0 + 0.658 + gamma_star), 1e-12);
}

TEST(EmissionRate, NoCavityOrNoZplGivesNaturalLinewidth) {
  auto no_cavity = fixed_zpl_model(0.9);
  no_cavity.cavity.g_uev = 0.0;
  EXPECT_DOUBLE_EQ(zpl_emission_rate(3.0, no_cavity), 0.658);
  auto no_zpl = DistinguishabilityModel{};
  no_zpl.zpl.eta0 = 0.0;
  EXPECT_DOUBLE_EQ(zpl_emission_rate(3.0, no_zpl), 0.658);
}

TEST(EmissionRate, ExceedsNaturalAndDecreasesInTemperature) {
  const DistinguishabilityModel model;
  double previous = zpl_emission_rate(1.0, model);
  for (double t = 1.1; t <= 50.0; t += 0.1) {
    const double value = zpl_emission_rate(t, model);
    EXPECT_GT(value, model.cavity.gamma0_uev);
    EXPECT_LT(value, previous) << t;
    previous = value;
  }
}

TEST(ZplFraction, LinearAndClamped) {
  const ZplFractionModel z;
  EXPECT_DOUBLE_EQ(z.at(0.0), 0.95);
  EXPECT_NEAR(z.at(3.0), 0.935, 1e-15);
  EXPECT_EQ(z.at(1000.0), 0.0);
  ZplFractionModel rising{0.95, 0.0};
  EXPECT_EQ(rising.at(50.0), 0.95);
}

TEST(IndistinguishabilityZpl, ThreeKelvinNearUnity) {
  const DistinguishabilityModel model;
  const double value = indistinguishability_zpl(3.0, model);
  EXPECT_NEAR(value, 0.99999, 1e-4);
  // Independent recomputation of numerator and denominator.
  const double n = occupation_series(3.0, model.phonon);
  const double gamma_star = 0.1 * n * (n + 1.0);
  const double g = 90.0 / std::sqrt(2.0);
  const double gamma = 0.658 + (0.95 - 0.005 * 3.0) * 4.0 * g * g / (90.0 + 0.658 + gamma_star);
  EXPECT_NEAR(value, gamma / (gamma + gamma_star), 1e-14);
}

TEST(IndistinguishabilityZpl, ForcedRates) {
  EXPECT_EQ(zpl_indistinguishability_from_rates(161.0, 0.0), 1.0);
  EXPECT_EQ(zpl_indistinguishability_from_rates(3.5, 3.5), 0.5);
  EXPECT_THROW(zpl_indistinguishability_from_rates(0.0, 1.0), std::invalid_argument);
}

TEST(IndistinguishabilityZpl, BoundedAndNonIncreasing) {
  const DistinguishabilityModel model;
  double previous = indistinguishability_zpl(1.0, model);
  for (int i = 11; i <= 500; ++i) {
    const double value = indistinguishability_zpl(0.1 * i, model);
    EXPECT_GT(value, 0.0);
    EXPECT_LT(value, 1.0);
    EXPECT_LE(value, previous);
    previous = value;
  }
}

TEST(EffectiveIndistinguishability, ThreeKelvin) {
  const DistinguishabilityModel model;
  EXPECT_NEAR(effective_indistinguishability(3.0, model), 0.95, 0.005);
}

TEST(EffectiveIndistinguishability, PenaltyGapAndClamp) {
  DistinguishabilityModel model;
  for (double t = 1.0; t <= 10.0; t += 0.25) {
    const double zpl = indistinguishability_zpl(t, model);
    EXPECT_NEAR(zpl - effective_indistinguishability(t, model), 0.05, 1e-15);
  }
  model.remote_penalty = 0.0;
  EXPECT_EQ(effective_indistinguishability(3.0, model), indistinguishability_zpl(3.0, model));
  EXPECT_EQ(apply_remote_penalty(0.03, 0.05), 0.0);
  EXPECT_EQ(apply_remote_penalty(1.2, 0.05), 1.0);
}

TEST(TwoSourceBound, IdenticalSourcesReduceToZplValue) {
  EXPECT_DOUBLE_EQ(two_source_bound(0.99, 0.99, 160.0, 160.0), 0.99);
  // Mismatched rates: the wavepacket overlap 4*1*3/16 = 0.75 binds.
  EXPECT_DOUBLE_EQ(two_source_bound(0.99, 0.99, 1.0, 3.0), 0.75);
}

TEST(Validation, RejectsOutOfRangeConstants) {
  DistinguishabilityModel model;
  EXPECT_NO_THROW(model.validate());
  model.remote_penalty = 1.0;
  EXPECT_THROW(model.validate(), std::invalid_argument);
  model = {};
  model.cavity.kappa_uev = 0.0;
  EXPECT_THROW(model.validate(), std::invalid_argument);
  model = {};
  model.zpl.eta0 = 1.5;
  EXPECT_THROW(model.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace bsenergy::photon
