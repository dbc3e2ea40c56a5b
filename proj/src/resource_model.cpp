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

#include "bsenergy/resource_model.hpp"

#include <cmath>
#include <string>

#include "bsenergy/complexity_metric.hpp"

namespace bsenergy::resource {

using detail::require;

void CryostatSpec::validate() const {
  require(p0_w > 0.0, "p0_w: must be positive");
  require(carnot_fraction > 0.0 && carnot_fraction < 1.0,
          "carnot_fraction: must lie in (0, 1)");
  require(t_ext_k > 0.0, "t_ext_k: must be positive");
  require(s_max >= 1, "s_max: must be >= 1");
  require(!power_override_w || *power_override_w > 0.0,
          "power_override_w: must be positive when set");
}

void FacilityConfig::validate() const {
  require(p_fix_w >= 0.0, "p_fix_w: must be non-negative");
  require(r_sps_hz > 0.0, "r_sps_hz: must be positive");
  require(!dmx_capacity || *dmx_capacity >= 1,
          "dmx_capacity: must be >= 1 when set");
  cryostat.validate();
}

void NoiseBudget::validate() const {
  require(eta_of > 0.0 && eta_of <= 1.0, "eta_of: must lie in (0, 1]");
  require(eta_d > 0.0 && eta_d <= 1.0, "eta_d: must lie in (0, 1]");
  require(eta_dmx > 0.0 && eta_dmx <= 1.0, "eta_dmx: must lie in (0, 1]");
  require(c_mzi_db >= 0.0, "c_mzi_db: must be non-negative");
  require(c_coup_db >= 0.0, "c_coup_db: must be non-negative");
}

NoiseBudget state_of_the_art_budget() {
  return {.eta_of = 0.712, .eta_d = 0.98, .eta_dmx = 0.83, .c_mzi_db = 0.0035,
          .c_coup_db = 0.057};
}

NoiseBudget energetic_advantage_budget() {
  return {.eta_of = 0.75, .eta_d = 0.99, .eta_dmx = 0.92, .c_mzi_db = 0.0085,
          .c_coup_db = 0.06};
}

NoiseBudget computational_advantage_budget() {
  return {.eta_of = 0.80, .eta_d = 0.99, .eta_dmx = 0.95, .c_mzi_db = 0.009,
          .c_coup_db = 0.057};
}

std::string_view to_string(PowerBranch branch) {
  switch (branch) {
    case PowerBranch::kOverride:
      return "override";
    case PowerBranch::kCarnotFormula:
      return "carnot_formula";
  }
  return "unknown";
}

int cryostat_count(int m, const CryostatSpec& spec) {
  require(m >= 1, "cryostat_count: m must be >= 1");
  return 1 + m / spec.s_max;
}

CryostatPower cryostat_power(double temperature_k, const CryostatSpec& spec) {
  require(temperature_k > 0.0 && temperature_k < spec.t_ext_k,
          "cryostat_power: temperature must lie in (0, t_ext)");
  if (spec.power_override_w) {
    return {*spec.power_override_w, PowerBranch::kOverride};
  }
  // P0 / eta_c with eta_c = x T / (T_ext - T)
  const double watt = spec.p0_w * (spec.t_ext_k - temperature_k) /
                      (spec.carnot_fraction * temperature_k);
  return {watt, PowerBranch::kCarnotFormula};
}

double total_power(double temperature_k, int n, const FacilityConfig& cfg) {
  const int m = metric::mode_count(n);
  return cfg.p_fix_w + cryostat_count(m, cfg.cryostat) *
                           cryostat_power(temperature_k, cfg.cryostat).watt;
}

int photons_per_source(int n, int m, const CryostatSpec& spec,
                       std::optional<int> dmx_capacity) {
  require(n >= 1, "photons_per_source: n must be >= 1");
  const int sources = cryostat_count(m, spec);
  const int per_source = (n + sources - 1) / sources;
  if (dmx_capacity && per_source > *dmx_capacity) {
    throw InfeasibleError("photons_per_source: " + std::to_string(per_source) +
                          " photons per source exceed demultiplexer capacity " +
                          std::to_string(*dmx_capacity));
  }
  return per_source;
}

double sample_rate(int n, const FacilityConfig& cfg) {
  return cfg.r_sps_hz / photons_per_source(n, metric::mode_count(n),
                                           cfg.cryostat, cfg.dmx_capacity);
}

Energy quantum_energy_per_sample(double temperature_k, int n,
                                 const FacilityConfig& cfg) {
  return Energy{total_power(temperature_k, n, cfg) / sample_rate(n, cfg)};
}

double quantum_time_per_sample(int n, const FacilityConfig& cfg) {
  return 1.0 / sample_rate(n, cfg);
}

namespace {

double db_to_transmission(double db) { return std::pow(10.0, -db / 10.0); }

}  // namespace

TransmissionBreakdown transmission_breakdown(int m, const NoiseBudget& budget) {
  require(m >= 1, "transmission: m must be >= 1");
  TransmissionBreakdown out;
  out.source = budget.eta_of;
  out.detector = budget.eta_d;
  out.demultiplexer = budget.eta_dmx;
  out.coupling = db_to_transmission(2.0 * budget.c_coup_db);
  out.propagation = db_to_transmission(m * budget.c_mzi_db);
  out.total = out.source * out.detector * out.demultiplexer * out.coupling *
              out.propagation;
  return out;
}

double end_to_end_transmission(int m, const NoiseBudget& budget) {
  return transmission_breakdown(m, budget).total;
}

double expected_losses(int n, const NoiseBudget& budget) {
  require(n >= 1, "expected_losses: n must be >= 1");
  return n * (1.0 - end_to_end_transmission(metric::mode_count(n), budget));
}

}  // namespace bsenergy::resource
