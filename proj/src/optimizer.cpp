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

#include "bsenergy/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bsenergy::optimizer {

using detail::require;

void SearchSpace::validate() const {
  require(t_min_k > 0.0, "t_min_k: must be positive");
  require(t_min_k < t_max_k, "t_max_k: must exceed t_min_k");
  require(t_step_k > 0.0, "t_step_k: must be positive");
  require(n_min >= 1, "n_min: must be >= 1");
  require(n_max >= n_min, "n_max: must be >= n_min");
}

std::vector<double> SearchSpace::temperature_grid() const {
  validate();
  const auto steps = static_cast<long>(
      std::floor((t_max_k - t_min_k) / t_step_k + 1e-9));
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps) + 2);
  for (long i = 0; i <= steps; ++i) grid.push_back(t_min_k + i * t_step_k);
  // Land exactly on t_max whether or not the step divides the range.
  if (t_max_k - grid.back() > 1e-9 * t_step_k) {
    grid.push_back(t_max_k);
  } else {
    grid.back() = t_max_k;
  }
  return grid;
}

namespace {

struct GridCell {
  double power_w;
  metric::MetricValue metric;
};

/// Power and metric on every (T, n) grid point for one loss value. Reused
/// across targets within a sweep.
class LossGrid {
 public:
  LossGrid(double lost, const SearchSpace& space, const ModelContext& ctx)
      : lost_(lost), temperatures_(space.temperature_grid()) {
    require(lost >= 0.0, "lost photons must be non-negative");
    n_first_ = std::max(space.n_min, static_cast<int>(std::floor(lost)) + 1);
    n_last_ = space.n_max;
    if (n_first_ > n_last_) {
      throw std::invalid_argument("empty search space: no n in [" +
                                  std::to_string(n_first_) + ", " +
                                  std::to_string(n_last_) + "]");
    }
    cells_.reserve(temperatures_.size() * (n_last_ - n_first_ + 1));
    for (double t : temperatures_) {
      const double indist =
          photon::effective_indistinguishability(t, ctx.distinguishability);
      for (int n = n_first_; n <= n_last_; ++n) {
        cells_.push_back(
            {resource::total_power(t, n, ctx.facility),
             metric::evaluate_metric_at(indist, n, lost, ctx.tolerances)});
      }
    }
  }

  /// Index of the minimum-power point with metric >= target, ordered by
  /// (power, n, -T); -1 if none.
  long argmin(double target) const {
    long best = -1;
    const int width = n_last_ - n_first_ + 1;
    for (std::size_t ti = 0; ti < temperatures_.size(); ++ti) {
      for (int k = 0; k < width; ++k) {
        const long idx = static_cast<long>(ti) * width + k;
        const auto& cell = cells_[idx];
        if (!(cell.metric.value >= target)) continue;
        if (best < 0 || better(idx, best)) best = idx;
      }
    }
    return best;
  }

  double temperature(long idx) const {
    return temperatures_[idx / (n_last_ - n_first_ + 1)];
  }
  int photons(long idx) const {
    return n_first_ + static_cast<int>(idx % (n_last_ - n_first_ + 1));
  }
  const GridCell& cell(long idx) const { return cells_[idx]; }
  double lost() const { return lost_; }

 private:
  bool better(long a, long b) const {
    const double pa = cells_[a].power_w, pb = cells_[b].power_w;
    if (pa != pb) return pa < pb;
    if (photons(a) != photons(b)) return photons(a) < photons(b);
    return temperature(a) > temperature(b);
  }

  double lost_;
  std::vector<double> temperatures_;
  int n_first_ = 1;
  int n_last_ = 1;
  std::vector<GridCell> cells_;
};

OperatingPoint solve(const LossGrid& grid, double target,
                     const ModelContext& ctx) {
  require(target > 0.0, "target metric must be positive");
  OperatingPoint op;
  op.target = target;
  op.lost = grid.lost();
  const long idx = grid.argmin(target);
  if (idx < 0) return op;

  const auto& cell = grid.cell(idx);
  op.feasible = true;
  op.t_star_k = grid.temperature(idx);
  op.n_star = grid.photons(idx);
  op.m = metric::mode_count(op.n_star);
  op.metric_achieved = cell.metric.value;
  op.k_eff = cell.metric.k_eff;
  op.indistinguishability = cell.metric.indistinguishability;
  op.clamped = cell.metric.clamped;
  op.eta_star = (op.n_star - op.lost) / op.n_star;
  op.p_tot_w = cell.power_w;
  op.power_branch =
      resource::cryostat_power(op.t_star_k, ctx.facility.cryostat).branch;
  op.e_q = resource::quantum_energy_per_sample(op.t_star_k, op.n_star,
                                               ctx.facility);
  op.t_q_s = resource::quantum_time_per_sample(op.n_star, ctx.facility);
  op.e_c = classical::classical_energy_per_sample(op.m, target, ctx.platform);
  op.t_c_s = classical::classical_time_per_sample(op.m, target, ctx.platform);
  return op;
}

}  // namespace

OperatingPoint optimize_for_metric(double target, double lost,
                                   const SearchSpace& space,
                                   const ModelContext& ctx) {
  return solve(LossGrid(lost, space, ctx), target, ctx);
}

std::vector<OperatingPoint> sweep_targets(const std::vector<double>& targets,
                                          double lost,
                                          const SearchSpace& space,
                                          const ModelContext& ctx) {
  require(!targets.empty(), "sweep_targets: target list is empty");
  const LossGrid grid(lost, space, ctx);
  std::vector<OperatingPoint> out;
  out.reserve(targets.size());
  for (double target : targets) out.push_back(solve(grid, target, ctx));
  return out;
}

std::vector<double> integer_targets(int first, int last) {
  require(first >= 1 && last >= first, "integer_targets: need 1 <= first <= last");
  std::vector<double> out;
  for (int t = first; t <= last; ++t) out.push_back(t);
  return out;
}

namespace {

template <typename Pred>
std::optional<double> first_target(const std::vector<OperatingPoint>& sweep,
                                   Pred quantum_wins) {
  std::optional<double> best;
  for (const auto& op : sweep) {
    if (!op.feasible || !quantum_wins(op)) continue;
    if (!best || op.target < *best) best = op.target;
  }
  return best;
}

}  // namespace

std::optional<double> find_energy_threshold(
    const std::vector<OperatingPoint>& sweep) {
  return first_target(sweep, [](const OperatingPoint& op) {
    return op.e_q.joule <= op.e_c.joule;
  });
}

std::optional<double> find_computational_threshold(
    const std::vector<OperatingPoint>& sweep) {
  return first_target(
      sweep, [](const OperatingPoint& op) { return op.t_q_s <= op.t_c_s; });
}

Thresholds fixed_loss_thresholds(double lost,
                                 const std::vector<double>& targets,
                                 const SearchSpace& space,
                                 const ModelContext& ctx) {
  Thresholds out;
  out.sweep = sweep_targets(targets, lost, space, ctx);
  out.energy = find_energy_threshold(out.sweep);
  out.computational = find_computational_threshold(out.sweep);
  return out;
}

std::vector<LossSweepRow> lost_photon_sweep(const std::vector<int>& losses,
                                            const std::vector<double>& targets,
                                            const SearchSpace& space,
                                            const ModelContext& ctx) {
  const double indist = photon::effective_indistinguishability(
      space.t_max_k, ctx.distinguishability);
  std::vector<LossSweepRow> rows;
  for (int l : losses) {
    require(l >= 0, "lost_photon_sweep: l must be non-negative");
    LossSweepRow row;
    row.lost = l;
    const auto th = fixed_loss_thresholds(l, targets, space, ctx);
    row.energy_threshold = th.energy;
    row.computational_threshold = th.computational;

    std::optional<int> first_ok, last_ok;
    for (int n = std::max(space.n_min, l + 1); n <= space.n_max; ++n) {
      const double k =
          metric::evaluate_metric_at(indist, n, l, ctx.tolerances).k_eff;
      if (k > n - l) continue;
      ++row.feasible_n_count;
      if (!first_ok) first_ok = n;
      last_ok = n;
      if (!row.min_feasible_k_eff || k < *row.min_feasible_k_eff) {
        row.min_feasible_k_eff = k;
        row.n_at_min_k_eff = n;
      }
    }
    std::ostringstream note;
    if (first_ok) {
      note << "k_eff <= n - l for " << row.feasible_n_count << " n in ["
           << *first_ok << ", " << *last_ok << "]";
    } else {
      note << "k_eff > n - l for every n in range; metric equals n - l";
    }
    if (l == 0) note << "; lossless: survival ratio 1";
    row.note = note.str();
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<HardwareRow> fixed_hardware_sweep(
    int n_first, int n_last, const resource::NoiseBudget& budget,
    double temperature_k, const ModelContext& ctx) {
  require(n_first >= 1 && n_last >= n_first,
          "fixed_hardware_sweep: need 1 <= n_first <= n_last");
  const double indist = photon::effective_indistinguishability(
      temperature_k, ctx.distinguishability);
  std::vector<HardwareRow> rows;
  for (int n = n_first; n <= n_last; ++n) {
    HardwareRow row;
    row.n = n;
    row.m = metric::mode_count(n);
    row.transmission = resource::end_to_end_transmission(row.m, budget);
    row.lost = resource::expected_losses(n, budget);
    const auto value =
        metric::evaluate_metric_at(indist, n, row.lost, ctx.tolerances);
    row.k_eff = value.k_eff;
    row.metric = value.value;
    row.e_q = resource::quantum_energy_per_sample(temperature_k, n, ctx.facility);
    row.t_q_s = resource::quantum_time_per_sample(n, ctx.facility);
    row.e_c = classical::classical_energy_per_sample(row.m, row.metric,
                                                     ctx.platform);
    row.t_c_s = classical::classical_time_per_sample(row.m, row.metric,
                                                     ctx.platform);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bsenergy::optimizer
