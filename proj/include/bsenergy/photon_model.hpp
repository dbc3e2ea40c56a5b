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

#pragma once

#include <numbers>

/// Temperature-dependent indistinguishability of quantum-dot single photons.
///
/// Units: rates in micro-eV, energies in milli-eV, temperatures in kelvin.
namespace bsenergy::photon {

struct PhononCoupling {
  double alpha_uev = 0.1;             ///< thermal-phonon scattering rate
  double epsilon_p_mev = 1.0;         ///< maximally coupled phonon energy
  double boltzmann_mev_per_k = 0.08617333;

  void validate() const;
};

struct CavityParams {
  double gamma0_uev = 0.658;  ///< natural linewidth without cavity
  double kappa_uev = 90.0;    ///< cavity linewidth
  double g_uev = 90.0 / std::numbers::sqrt2;

  void validate() const;
};

/// Linear ZPL emission fraction eta0 - slope*T, clamped to [0, 1].
struct ZplFractionModel {
  double eta0 = 0.95;
  double slope_per_k = 0.005;

  double at(double temperature_k) const;
  void validate() const;
};

struct DistinguishabilityModel {
  PhononCoupling phonon;
  CavityParams cavity;
  ZplFractionModel zpl;
  double remote_penalty = 0.05;  ///< subtraction for slow spectral wandering

  void validate() const;
};

double bose_einstein_occupation(double temperature_k,
                                const PhononCoupling& phonon);

/// gamma*(T) = alpha n(n+1).
double pure_dephasing_rate(double temperature_k, const PhononCoupling& phonon);

/// gamma0 * F_eff(T) = 4 g^2 / (kappa + gamma0 + gamma*(T)).
double cavity_enhanced_rate(double temperature_k,
                            const DistinguishabilityModel& model);

/// gamma(T) = [1 + eta_ZPL(T) F_eff(T)] gamma0.
double zpl_emission_rate(double temperature_k,
                         const DistinguishabilityModel& model);

/// gamma / (gamma + gamma*) for explicit rates.
double zpl_indistinguishability_from_rates(double emission_rate,
                                           double dephasing_rate);

double indistinguishability_zpl(double temperature_k,
                                const DistinguishabilityModel& model);

/// clamp(i_zpl - penalty, 0, 1).
double apply_remote_penalty(double i_zpl, double penalty);

/// clamp(I_ZPL(T) - remote_penalty, 0, 1); the value used by the metric.
double effective_indistinguishability(double temperature_k,
                                      const DistinguishabilityModel& model);

/// Upper bound for two remote sources: min(sqrt(I_a I_b),
/// 4 g_a g_b / (g_a + g_b)^2).
double two_source_bound(double indist_a, double indist_b, double rate_a,
                        double rate_b);

}  // namespace bsenergy::photon
