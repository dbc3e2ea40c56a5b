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

#include "bsenergy/photon_model.hpp"

/// Click-count statistics and the effective hardness metric of a lossy,
/// partially distinguishable Boson Sampling instance.
///
/// Every quantity is kept real-valued; rounding is left to presentation.
namespace bsenergy::metric {

/// n input photons, m modes and l lost photons. l is real so that expected
/// (non-integer) losses can be evaluated.
struct SamplingInstance {
  int n = 1;
  int m = 1;
  double l = 0.0;

  void validate() const;
};

/// Product of the simulation error tolerance and the failure probability.
struct AlgorithmTolerances {
  double eps_delta = 1e-3;

  void validate() const;
};

/// ceil(2.1 n), computed exactly in integers.
int mode_count(int n);

/// c_S = m n / (m + n).
double typical_clicks(double n, double m);

/// c_S evaluated at n - l surviving photons.
double typical_clicks_lossy(int n, int m, double l);

/// Centering value m n / (m + n + 1) of the click concentration bound.
double large_deviation_centering(int n, int m);

/// 2 exp(-2 t^2 n), clipped to at most 2.
double large_deviation_bound(int n, double t);

/// c_S^l / c_S in closed form: (n-l)(m+n) / (n(m+n-l)).
double click_ratio(int n, int m, double l);

/// k(x) = ln[(eps delta / 2)(1 - I^2 x)] / ln(I^2 x) - 1 for a survival ratio
/// x in (0, 1]. Shared by the collision-free and saturated-regime formulas.
double hardness_kernel(double indistinguishability, double survival_ratio,
                       const AlgorithmTolerances& tol);

/// Collision-free k with survival ratio (n - l) / n.
double k_collision_free(double indistinguishability, int n, double l,
                        const AlgorithmTolerances& tol);

/// Saturated-regime k^eff with survival ratio c_S^l / c_S.
double k_effective(double indistinguishability, const SamplingInstance& inst,
                   const AlgorithmTolerances& tol);

struct MetricValue {
  double value = 0.0;  ///< min(n - l, k^eff), floored at 0
  double indistinguishability = 0.0;
  double c_s = 0.0;
  double c_s_l = 0.0;
  double ratio = 0.0;
  double k_eff = 0.0;
  bool clamped = false;  ///< k^eff was negative and the metric floored to 0
};

/// M = min[n - l, k^eff] at m = mode_count(n) and I = I_eff(T).
MetricValue evaluate_metric(double temperature_k, int n, double l,
                            const photon::DistinguishabilityModel& model,
                            const AlgorithmTolerances& tol);

/// Same as evaluate_metric with a precomputed indistinguishability.
MetricValue evaluate_metric_at(double indistinguishability, int n, double l,
                               const AlgorithmTolerances& tol);

/// Metric for an explicit instance (m not tied to mode_count(n)).
MetricValue evaluate_metric_at(double indistinguishability,
                               const SamplingInstance& inst,
                               const AlgorithmTolerances& tol);

double metric(double temperature_k, int n, double l,
              const photon::DistinguishabilityModel& model,
              const AlgorithmTolerances& tol);

}  // namespace bsenergy::metric
