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

#include "bsenergy/complexity_metric.hpp"

#include <algorithm>
#include <cmath>

#include "bsenergy/units.hpp"

namespace bsenergy::metric {

using detail::require;

void SamplingInstance::validate() const {
  require(n >= 1, "n: must be >= 1");
  require(m >= 1, "m: must be >= 1");
  require(l >= 0.0 && l < n, "l: must lie in [0, n)");
}

void AlgorithmTolerances::validate() const {
  require(eps_delta > 0.0 && eps_delta < 1.0, "eps_delta: must lie in (0, 1)");
}

int mode_count(int n) {
  require(n >= 1, "mode_count: n must be >= 1");
  return (21 * n + 9) / 10;
}

double typical_clicks(double n, double m) {
  require(n > 0.0 && m > 0.0, "typical_clicks: n and m must be positive");
  return m * n / (m + n);
}

double typical_clicks_lossy(int n, int m, double l) {
  require(l >= 0.0 && l < n, "typical_clicks_lossy: l must lie in [0, n)");
  return typical_clicks(n - l, m);
}

double large_deviation_centering(int n, int m) {
  require(n >= 1 && m >= 1, "large_deviation_centering: n, m must be >= 1");
  return static_cast<double>(m) * n / (m + n + 1.0);
}

double large_deviation_bound(int n, double t) {
  require(n >= 1, "large_deviation_bound: n must be >= 1");
  require(t >= 0.0, "large_deviation_bound: t must be non-negative");
  return 2.0 * std::exp(-2.0 * t * t * n);
}

double click_ratio(int n, int m, double l) {
  require(n >= 1 && m >= 1, "click_ratio: n, m must be >= 1");
  require(l >= 0.0 && l < n, "click_ratio: l must lie in [0, n)");
  return (n - l) * (m + n) / (n * (m + n - l));
}

double hardness_kernel(double indistinguishability, double survival_ratio,
                       const AlgorithmTolerances& tol) {
  require(indistinguishability > 0.0 && indistinguishability < 1.0,
          "indistinguishability must lie strictly inside (0, 1)");
  require(survival_ratio > 0.0 && survival_ratio <= 1.0,
          "survival ratio must lie in (0, 1]");
  const double x = indistinguishability * indistinguishability * survival_ratio;
  return std::log(0.5 * tol.eps_delta * (1.0 - x)) / std::log(x) - 1.0;
}

double k_collision_free(double indistinguishability, int n, double l,
                        const AlgorithmTolerances& tol) {
  require(n >= 1, "k_collision_free: n must be >= 1");
  require(l >= 0.0 && l < n, "k_collision_free: l must lie in [0, n)");
  return hardness_kernel(indistinguishability, (n - l) / n, tol);
}

double k_effective(double indistinguishability, const SamplingInstance& inst,
                   const AlgorithmTolerances& tol) {
  inst.validate();
  return hardness_kernel(indistinguishability,
                         click_ratio(inst.n, inst.m, inst.l), tol);
}

MetricValue evaluate_metric_at(double indistinguishability,
                               const SamplingInstance& inst,
                               const AlgorithmTolerances& tol) {
  inst.validate();
  MetricValue out;
  out.indistinguishability = indistinguishability;
  out.c_s = typical_clicks(inst.n, inst.m);
  out.c_s_l = typical_clicks_lossy(inst.n, inst.m, inst.l);
  out.ratio = click_ratio(inst.n, inst.m, inst.l);
  out.k_eff = hardness_kernel(indistinguishability, out.ratio, tol);
  const double value = std::min(inst.n - inst.l, out.k_eff);
  out.clamped = value < 0.0;
  out.value = std::max(0.0, value);
  return out;
}

MetricValue evaluate_metric_at(double indistinguishability, int n, double l,
                               const AlgorithmTolerances& tol) {
  return evaluate_metric_at(indistinguishability,
                            SamplingInstance{n, mode_count(n), l}, tol);
}

MetricValue evaluate_metric(double temperature_k, int n, double l,
                            const photon::DistinguishabilityModel& model,
                            const AlgorithmTolerances& tol) {
  return evaluate_metric_at(
      photon::effective_indistinguishability(temperature_k, model), n, l, tol);
}

double metric(double temperature_k, int n, double l,
              const photon::DistinguishabilityModel& model,
              const AlgorithmTolerances& tol) {
  return evaluate_metric(temperature_k, n, l, model, tol).value;
}

}  // namespace bsenergy::metric
