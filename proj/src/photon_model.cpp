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

#include <algorithm>
#include <cmath>

#include "bsenergy/units.hpp"

namespace bsenergy::photon {

using detail::require;

void PhononCoupling::validate() const {
  require(alpha_uev > 0.0, "alpha_uev: must be positive");
  require(epsilon_p_mev > 0.0, "epsilon_p_mev: must be positive");
  require(boltzmann_mev_per_k > 0.0, "boltzmann_mev_per_k: must be positive");
}

void CavityParams::validate() const {
  require(gamma0_uev > 0.0, "gamma0_uev: must be positive");
  require(kappa_uev > 0.0, "kappa_uev: must be positive");
  require(g_uev > 0.0, "g_uev: must be positive");
}

double ZplFractionModel::at(double temperature_k) const {
  return std::clamp(eta0 - slope_per_k * temperature_k, 0.0, 1.0);
}

void ZplFractionModel::validate() const {
  require(eta0 > 0.0 && eta0 <= 1.0, "eta0: must lie in (0, 1]");
  require(slope_per_k >= 0.0, "slope_per_k: must be non-negative");
}

void DistinguishabilityModel::validate() const {
  phonon.validate();
  cavity.validate();
  zpl.validate();
  require(remote_penalty >= 0.0 && remote_penalty < 1.0,
          "remote_penalty: must lie in [0, 1)");
}

double bose_einstein_occupation(double temperature_k,
                                const PhononCoupling& phonon) {
  require(temperature_k > 0.0, "temperature must be positive");
  const double x =
      phonon.epsilon_p_mev / (phonon.boltzmann_mev_per_k * temperature_k);
  // expm1 overflows to inf for tiny T, giving the correct limit 0.
  return 1.0 / std::expm1(x);
}

double pure_dephasing_rate(double temperature_k, const PhononCoupling& phonon) {
  const double n = bose_einstein_occupation(temperature_k, phonon);
  return phonon.alpha_uev * n * (n + 1.0);
}

double cavity_enhanced_rate(double temperature_k,
                            const DistinguishabilityModel& model) {
  const auto& c = model.cavity;
  const double dephasing = pure_dephasing_rate(temperature_k, model.phonon);
  return 4.0 * c.g_uev * c.g_uev / (c.kappa_uev + c.gamma0_uev + dephasing);
}

double zpl_emission_rate(double temperature_k,
                         const DistinguishabilityModel& model) {
  // [1 + eta F_eff] gamma0 = gamma0 + eta (gamma0 F_eff)
  return model.cavity.gamma0_uev +
         model.zpl.at(temperature_k) *
             cavity_enhanced_rate(temperature_k, model);
}

double zpl_indistinguishability_from_rates(double emission_rate,
                                           double dephasing_rate) {
  require(emission_rate > 0.0, "emission rate must be positive");
  require(dephasing_rate >= 0.0, "dephasing rate must be non-negative");
  return emission_rate / (emission_rate + dephasing_rate);
}

double indistinguishability_zpl(double temperature_k,
                                const DistinguishabilityModel& model) {
  return zpl_indistinguishability_from_rates(
      zpl_emission_rate(temperature_k, model),
      pure_dephasing_rate(temperature_k, model.phonon));
}

double apply_remote_penalty(double i_zpl, double penalty) {
  return std::clamp(i_zpl - penalty, 0.0, 1.0);
}

double effective_indistinguishability(double temperature_k,
                                      const DistinguishabilityModel& model) {
  return apply_remote_penalty(indistinguishability_zpl(temperature_k, model),
                              model.remote_penalty);
}

double two_source_bound(double indist_a, double indist_b, double rate_a,
                        double rate_b) {
  require(indist_a >= 0.0 && indist_b >= 0.0, "indistinguishability < 0");
  require(rate_a > 0.0 && rate_b > 0.0, "rates must be positive");
  const double overlap =
      4.0 * rate_a * rate_b / ((rate_a + rate_b) * (rate_a + rate_b));
  return std::min(std::sqrt(indist_a * indist_b), overlap);
}

}  // namespace bsenergy::photon
