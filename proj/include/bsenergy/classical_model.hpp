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

#include "bsenergy/units.hpp"

/// FLOP lower bound of exact classical Boson Sampling and the derived energy
/// and time per sample on a reference supercomputer.
namespace bsenergy::classical {

__extension__ typedef unsigned __int128 Uint128;

struct ClassicalPlatform {
  double eta_e_flops_per_joule = 72.733e9;  ///< 72.733 GFlops/W
  double r_max_flops = 4.5e15;

  static ClassicalPlatform from_gflops_per_watt(double gflops_per_watt,
                                                double r_max_flops);
  double gflops_per_watt() const { return eta_e_flops_per_joule * 1e-9; }

  void validate() const;
};

/// Superconducting random-circuit-sampling reference point.
struct RcsReference {
  double energy_per_sample_wh = 1e-3;
  double time_per_sample_s = 2e-4;

  void validate() const;
};

/// Largest n for which the bound is accumulated in exact integers.
inline constexpr int kExactFlopLimit = 62;

/// sum_{j=2}^{n} (j 2^j + m j) in exact 128-bit arithmetic, or nullopt when
/// n > kExactFlopLimit.
std::optional<Uint128> flop_lower_bound_exact(int m, int n);

/// Bound evaluated at floor(n_eff); 0 for n_eff < 2. Exact below the limit,
/// double-precision accumulation above it.
double flop_lower_bound(int m, double n_eff);

Energy classical_energy_per_sample(int m, double metric,
                                   const ClassicalPlatform& platform);

double classical_time_per_sample(int m, double metric,
                                 const ClassicalPlatform& platform);

RcsReference rcs_reference();

/// RCS energy per sample over the given quantum energy per sample. Order of
/// magnitude only; no mapping between the two hardness notions is implied.
double rcs_energy_ratio(const RcsReference& rcs, Energy quantum);

}  // namespace bsenergy::classical
