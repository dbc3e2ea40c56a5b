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

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bsenergy/optimizer.hpp"
#include "bsenergy/rng.hpp"

/// Monte Carlo over binomial photon transmission.
namespace bsenergy::fluctuation {

struct McConfig {
  std::size_t n_samples = 10000;
  std::uint64_t seed = 1;
  std::size_t n_seeds = 10;  ///< replication studies
  /// Worker threads; 1 selects the single-threaded reference path. Results
  /// are bit-identical for every value.
  unsigned threads = 1;

  void validate() const;
};

/// Number of photons surviving a channel of transmission eta: n Bernoulli
/// trials.
int draw_transmitted(int n, double eta, CounterRng& rng);

struct FluctuationResult {
  int n = 0;
  int m = 0;
  double eta = 0.0;
  double temperature_k = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  double mean_transmitted = 0.0;
  double mean_metric = 0.0;
  /// Metric rounded half-up to integer bins.
  std::map<int, std::size_t> metric_histogram;
  Energy mean_e_c;
  Energy e_q;
  double mean_t_c_s = 0.0;
  double t_q_s = 0.0;
  int min_lost = 0;  ///< smallest l observed
};

/// For each sample i: t_i ~ Bin(n, eta), l_i = n - t_i, M_i = metric(T, n,
/// l_i) (0 when no photon survives), E^C_i = E^C(m, M_i).
FluctuationResult run_fluctuation(int n, int m, double eta,
                                  double temperature_k, const McConfig& mc,
                                  const ModelContext& ctx);

struct AveragedRow {
  optimizer::OperatingPoint point;
  double mean_metric = 0.0;
  Energy mean_e_c;
  double mean_t_c_s = 0.0;
};

struct AveragedThresholds {
  std::vector<AveragedRow> rows;
  std::optional<double> energy;         ///< on the <M> axis
  std::optional<double> computational;  ///< on the <M> axis
};

/// Smallest <M> at which quantum <= classical, interpolating ln(classical /
/// quantum) linearly in <M> between the last losing and first winning row.
std::optional<double> locate_crossing(const std::vector<double>& mean_metric,
                                      const std::vector<double>& quantum,
                                      const std::vector<double>& classical);

/// Re-runs the fixed-l sweep and averages the classical side over binomial
/// transmission at each optimum (T*, n*, eta*).
AveragedThresholds averaged_thresholds(double lost,
                                       const std::vector<double>& targets,
                                       const optimizer::SearchSpace& space,
                                       const McConfig& mc,
                                       const ModelContext& ctx);

}  // namespace bsenergy::fluctuation
