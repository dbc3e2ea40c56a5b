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

#include <optional>
#include <string_view>

#include "bsenergy/units.hpp"

/// Quantum-side power, sample rate, energy and time per sample, and the
/// end-to-end optical transmission budget.
namespace bsenergy::resource {

struct CryostatSpec {
  double p0_w = 0.05;              ///< cooling power
  double carnot_fraction = 0.004;  ///< fraction x of Carnot efficiency
  double t_ext_k = 300.0;
  int s_max = 26;                  ///< detectors per cryostat
  /// Fixed wall power per cryostat. When set it replaces P0 / eta_c(T).
  std::optional<double> power_override_w = 1396.0;

  void validate() const;
};

struct FacilityConfig {
  double p_fix_w = 1000.0;  ///< laser, electronics and classical overhead
  double r_sps_hz = 1e9;
  CryostatSpec cryostat;
  /// Demultiplexer capacity; when set, photons_per_source above it raises
  /// InfeasibleError.
  std::optional<int> dmx_capacity;

  void validate() const;
};

/// Per-component optical efficiencies and losses. Optical depth is d(m) = m.
struct NoiseBudget {
  double eta_of = 1.0;   ///< source brightness at the output fiber
  double eta_d = 1.0;    ///< detector efficiency
  double eta_dmx = 1.0;  ///< demultiplexer efficiency
  double c_mzi_db = 0.0;
  double c_coup_db = 0.0;

  void validate() const;
};

/// Noise budgets shipped as defaults ("sota", "energetic", "comp").
NoiseBudget state_of_the_art_budget();
NoiseBudget energetic_advantage_budget();
NoiseBudget computational_advantage_budget();

enum class PowerBranch { kOverride, kCarnotFormula };

std::string_view to_string(PowerBranch branch);

struct CryostatPower {
  double watt = 0.0;
  PowerBranch branch = PowerBranch::kOverride;
};

/// 1 + floor(m / s_max).
int cryostat_count(int m, const CryostatSpec& spec);

/// Override value if present, else P0 (T_ext - T) / (x T).
CryostatPower cryostat_power(double temperature_k, const CryostatSpec& spec);

/// P_fix + cryostat_count(mode_count(n)) * cryostat_power(T).
double total_power(double temperature_k, int n, const FacilityConfig& cfg);

/// ceil(n / cryostat_count(m)); one source per cryostat.
int photons_per_source(int n, int m, const CryostatSpec& spec,
                       std::optional<int> dmx_capacity = std::nullopt);

double sample_rate(int n, const FacilityConfig& cfg);

Energy quantum_energy_per_sample(double temperature_k, int n,
                                 const FacilityConfig& cfg);

double quantum_time_per_sample(int n, const FacilityConfig& cfg);

struct TransmissionBreakdown {
  double source = 1.0;
  double detector = 1.0;
  double demultiplexer = 1.0;
  double coupling = 1.0;     ///< two interfaces
  double propagation = 1.0;  ///< m MZIs deep
  double total = 1.0;
};

TransmissionBreakdown transmission_breakdown(int m, const NoiseBudget& budget);

double end_to_end_transmission(int m, const NoiseBudget& budget);

/// n (1 - eta(mode_count(n))).
double expected_losses(int n, const NoiseBudget& budget);

}  // namespace bsenergy::resource
