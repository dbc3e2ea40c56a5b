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

#include "bsenergy/fluctuation.hpp"

#include <algorithm>
#include <cmath>

#include "bsenergy/parallel.hpp"

namespace bsenergy::fluctuation {

using detail::require;

void McConfig::validate() const {
  require(n_samples >= 1, "n_samples: must be >= 1");
  require(n_seeds >= 1, "n_seeds: must be >= 1");
  require(threads >= 1, "threads: must be >= 1");
}

int draw_transmitted(int n, double eta, CounterRng& rng) {
  require(n >= 0, "draw_transmitted: n must be non-negative");
  require(eta >= 0.0 && eta <= 1.0, "draw_transmitted: eta must lie in [0, 1]");
  int survived = 0;
  for (int i = 0; i < n; ++i) survived += rng.uniform() < eta ? 1 : 0;
  return survived;
}

FluctuationResult run_fluctuation(int n, int m, double eta,
                                  double temperature_k, const McConfig& mc,
                                  const ModelContext& ctx) {
  require(n >= 1 && m >= 1, "run_fluctuation: n and m must be >= 1");
  require(eta > 0.0 && eta <= 1.0, "run_fluctuation: eta must lie in (0, 1]");
  mc.validate();

  const double indist = photon::effective_indistinguishability(
      temperature_k, ctx.distinguishability);

  // Everything downstream depends on l only, so tabulate l = 0..n once.
  std::vector<double> metric_by_lost(n + 1, 0.0);
  std::vector<double> energy_by_lost(n + 1, 0.0);
  std::vector<double> time_by_lost(n + 1, 0.0);
  for (int l = 0; l < n; ++l) {
    metric_by_lost[l] =
        metric::evaluate_metric_at(indist, metric::SamplingInstance{n, m, 1.0 * l},
                                   ctx.tolerances)
            .value;
    energy_by_lost[l] =
        classical::classical_energy_per_sample(m, metric_by_lost[l], ctx.platform)
            .joule;
    time_by_lost[l] =
        classical::classical_time_per_sample(m, metric_by_lost[l], ctx.platform);
  }

  std::vector<int> transmitted(mc.n_samples);
  detail::parallel_for(mc.n_samples, mc.threads, [&](std::size_t i) {
    auto rng = CounterRng::stream(mc.seed, i);
    transmitted[i] = draw_transmitted(n, eta, rng);
  });

  FluctuationResult out;
  out.n = n;
  out.m = m;
  out.eta = eta;
  out.temperature_k = temperature_k;
  out.n_samples = mc.n_samples;
  out.seed = mc.seed;
  out.min_lost = n;

  detail::CompensatedSum sum_t, sum_metric, sum_energy, sum_time;
  for (int t : transmitted) {
    const int l = n - t;
    const double value = metric_by_lost[l];
    sum_t.add(t);
    sum_metric.add(value);
    sum_energy.add(energy_by_lost[l]);
    sum_time.add(time_by_lost[l]);
    ++out.metric_histogram[static_cast<int>(std::floor(value + 0.5))];
    out.min_lost = std::min(out.min_lost, l);
  }
  const auto count = static_cast<double>(mc.n_samples);
  out.mean_transmitted = sum_t.value() / count;
  out.mean_metric = sum_metric.value() / count;
  out.mean_e_c = Energy{sum_energy.value() / count};
  out.mean_t_c_s = sum_time.value() / count;
  out.e_q = resource::quantum_energy_per_sample(temperature_k, n, ctx.facility);
  out.t_q_s = resource::quantum_time_per_sample(n, ctx.facility);
  return out;
}

std::optional<double> locate_crossing(const std::vector<double>& mean_metric,
                                      const std::vector<double>& quantum,
                                      const std::vector<double>& classical) {
  require(mean_metric.size() == quantum.size() &&
              quantum.size() == classical.size(),
          "locate_crossing: series lengths differ");
  for (std::size_t i = 0; i < quantum.size(); ++i) {
    if (!(quantum[i] <= classical[i])) continue;
    if (i == 0 || classical[i - 1] <= 0.0) return mean_metric[i];
    const double before = std::log(classical[i - 1] / quantum[i - 1]);
    const double after = std::log(classical[i] / quantum[i]);
    if (!(after > before)) return mean_metric[i];
    const double frac = -before / (after - before);
    return mean_metric[i - 1] + frac * (mean_metric[i] - mean_metric[i - 1]);
  }
  return std::nullopt;
}

AveragedThresholds averaged_thresholds(double lost,
                                       const std::vector<double>& targets,
                                       const optimizer::SearchSpace& space,
                                       const McConfig& mc,
                                       const ModelContext& ctx) {
  AveragedThresholds out;
  for (const auto& op : optimizer::sweep_targets(targets, lost, space, ctx)) {
    if (!op.feasible) continue;
    const auto fr =
        run_fluctuation(op.n_star, op.m, op.eta_star, op.t_star_k, mc, ctx);
    out.rows.push_back({op, fr.mean_metric, fr.mean_e_c, fr.mean_t_c_s});
  }

  std::vector<double> mean_metric, eq, ec, tq, tc;
  for (const auto& row : out.rows) {
    mean_metric.push_back(row.mean_metric);
    eq.push_back(row.point.e_q.joule);
    ec.push_back(row.mean_e_c.joule);
    tq.push_back(row.point.t_q_s);
    tc.push_back(row.mean_t_c_s);
  }
  out.energy = locate_crossing(mean_metric, eq, ec);
  out.computational = locate_crossing(mean_metric, tq, tc);
  return out;
}

}  // namespace bsenergy::fluctuation
