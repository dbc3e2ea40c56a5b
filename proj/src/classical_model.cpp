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

namespace bsenergy::classical {

using detail::require;

ClassicalPlatform ClassicalPlatform::from_gflops_per_watt(
    double gflops_per_watt, double r_max_flops) {
  return ClassicalPlatform{gflops_per_watt * 1e9, r_max_flops};
}

void ClassicalPlatform::validate() const {
  require(eta_e_flops_per_joule > 0.0, "eta_e_gflops_per_watt: must be positive");
  require(r_max_flops > 0.0, "r_max_flops: must be positive");
}

void RcsReference::validate() const {
  require(energy_per_sample_wh > 0.0, "energy_per_sample_wh: must be positive");
  require(time_per_sample_s > 0.0, "time_per_sample_s: must be positive");
}

std::optional<Uint128> flop_lower_bound_exact(int m, int n) {
  require(m >= 1, "flop_lower_bound: m must be >= 1");
  if (n > kExactFlopLimit) return std::nullopt;
  Uint128 total = 0;
  for (int j = 2; j <= n; ++j) {
    total += static_cast<Uint128>(j) * (static_cast<Uint128>(1) << j) +
             static_cast<Uint128>(m) * static_cast<Uint128>(j);
  }
  return total;
}

double flop_lower_bound(int m, double n_eff) {
  require(m >= 1, "flop_lower_bound: m must be >= 1");
  require(n_eff >= 0.0, "flop_lower_bound: n_eff must be non-negative");
  const int n = static_cast<int>(std::floor(n_eff));
  if (n < 2) return 0.0;
  if (auto exact = flop_lower_bound_exact(m, n)) {
    return static_cast<double>(*exact);
  }
  double total = static_cast<double>(*flop_lower_bound_exact(m, kExactFlopLimit));
  for (int j = kExactFlopLimit + 1; j <= n; ++j) {
    total += j * std::ldexp(1.0, j) + static_cast<double>(m) * j;
  }
  return total;
}

Energy classical_energy_per_sample(int m, double metric,
                                   const ClassicalPlatform& platform) {
  return Energy{flop_lower_bound(m, metric) / platform.eta_e_flops_per_joule};
}

double classical_time_per_sample(int m, double metric,
                                 const ClassicalPlatform& platform) {
  return flop_lower_bound(m, metric) / platform.r_max_flops;
}

RcsReference rcs_reference() {
  // 10^6 samples for 1 kWh in 200 s.
  return RcsReference{1e3 / 1e6, 200.0 / 1e6};
}

double rcs_energy_ratio(const RcsReference& rcs, Energy quantum) {
  require(quantum.joule > 0.0, "rcs_energy_ratio: quantum energy must be positive");
  return rcs.energy_per_sample_wh / quantum.watt_hour();
}

}  // namespace bsenergy::classical
