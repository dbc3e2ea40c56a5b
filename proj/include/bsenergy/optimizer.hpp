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
#include <string>
#include <vector>

#include "bsenergy/classical_model.hpp"
#include "bsenergy/complexity_metric.hpp"
#include "bsenergy/photon_model.hpp"
#include "bsenergy/resource_model.hpp"

namespace bsenergy {

/// The physical and algorithmic models every analysis is evaluated against.
struct ModelContext {
  photon::DistinguishabilityModel distinguishability;
  resource::FacilityConfig facility;
  metric::AlgorithmTolerances tolerances;
  classical::ClassicalPlatform platform;
};

}  // namespace bsenergy

/// Exhaustive (T, n) grid search minimizing total power under a metric
/// constraint, plus the sweeps built on top of it.
namespace bsenergy::optimizer {

struct SearchSpace {
  double t_min_k = 1.0;
  double t_max_k = 3.0;
  double t_step_k = 0.01;
  int n_min = 1;
  int n_max = 200;

  void validate() const;
  /// Grid points t_min + i * step; the last point is exactly t_max.
  std::vector<double> temperature_grid() const;
};

struct OperatingPoint {
  double target = 0.0;  ///< requested M0
  double lost = 0.0;    ///< l
  double t_star_k = 0.0;
  int n_star = 0;
  int m = 0;
  double metric_achieved = 0.0;
  double k_eff = 0.0;
  double indistinguishability = 0.0;
  double eta_star = 0.0;  ///< (n* - l) / n*
  double p_tot_w = 0.0;
  resource::PowerBranch power_branch = resource::PowerBranch::kOverride;
  Energy e_q;
  double t_q_s = 0.0;
  Energy e_c;  ///< classical cost at metric = target
  double t_c_s = 0.0;
  bool feasible = false;
  bool clamped = false;
};

/// min P_tot(T, n) s.t. M(T, n) >= M0 over the grid. Ties: smaller n, then
/// larger T. Returns feasible = false when no grid point qualifies.
OperatingPoint optimize_for_metric(double target, double lost,
                                   const SearchSpace& space,
                                   const ModelContext& ctx);

std::vector<OperatingPoint> sweep_targets(const std::vector<double>& targets,
                                          double lost,
                                          const SearchSpace& space,
                                          const ModelContext& ctx);

/// 1, 2, ..., last.
std::vector<double> integer_targets(int first, int last);

/// Smallest target whose feasible optimum has E^Q <= E^C.
std::optional<double> find_energy_threshold(
    const std::vector<OperatingPoint>& sweep);

/// Smallest target whose feasible optimum has t^Q <= t^C.
std::optional<double> find_computational_threshold(
    const std::vector<OperatingPoint>& sweep);

struct Thresholds {
  std::optional<double> energy;
  std::optional<double> computational;
  std::vector<OperatingPoint> sweep;
};

Thresholds fixed_loss_thresholds(double lost,
                                 const std::vector<double>& targets,
                                 const SearchSpace& space,
                                 const ModelContext& ctx);

struct LossSweepRow {
  int lost = 0;
  std::optional<double> energy_threshold;
  std::optional<double> computational_threshold;
  /// Lowest k^eff over n in the search range with k^eff <= n - l.
  std::optional<double> min_feasible_k_eff;
  std::optional<int> n_at_min_k_eff;
  /// Number of n values in range with k^eff <= n - l.
  int feasible_n_count = 0;
  std::string note;
};

/// Per-l thresholds and k^eff reach, evaluated at T = t_max.
std::vector<LossSweepRow> lost_photon_sweep(const std::vector<int>& losses,
                                            const std::vector<double>& targets,
                                            const SearchSpace& space,
                                            const ModelContext& ctx);

struct HardwareRow {
  int n = 0;
  int m = 0;
  double transmission = 0.0;
  double lost = 0.0;
  double k_eff = 0.0;
  double metric = 0.0;
  Energy e_q;
  double t_q_s = 0.0;
  Energy e_c;
  double t_c_s = 0.0;
};

/// Fixed per-component losses: l(n) = n (1 - eta(ceil(2.1 n))).
std::vector<HardwareRow> fixed_hardware_sweep(
    int n_first, int n_last, const resource::NoiseBudget& budget,
    double temperature_k, const ModelContext& ctx);

}  // namespace bsenergy::optimizer
