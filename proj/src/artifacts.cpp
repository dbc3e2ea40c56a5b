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

#include "bsenergy/artifacts.hpp"

#include <cmath>
#include <stdexcept>

namespace bsenergy::artifacts {

using report::Cell;
using report::Table;

namespace {

Cell flag(bool b) { return Cell(std::string(b ? "true" : "false")); }

Cell count(long long x) { return Cell(x); }

Cell empty() { return Cell(std::string()); }

/// Operating-point mode counts of the three noise-budget columns.
struct BudgetColumn {
  const char* name;
  int modes;
};
constexpr BudgetColumn kTableColumns[] = {
    {"sota", 51}, {"energetic", 51}, {"comp", 59}};

constexpr double kFigureLoss = 12.0;
constexpr int kHardwareMaxPhotons = 75;
constexpr double kExperimentEta = 0.60;
constexpr int kExperimentPhotons[] = {29, 24};
constexpr int kDefaultMaxTarget = 30;

}  // namespace

nlohmann::json optional_json(const std::optional<double>& x) {
  return x ? nlohmann::json(*x) : nlohmann::json(nullptr);
}

Table indistinguishability_table(double t_min_k, double t_max_k, double step_k,
                                 const photon::DistinguishabilityModel& model,
                                 std::string name) {
  optimizer::SearchSpace grid;
  grid.t_min_k = t_min_k;
  grid.t_max_k = t_max_k;
  grid.t_step_k = step_k;
  Table table(std::move(name), {"T_K", "I_zpl", "I_eff"});
  for (double t : grid.temperature_grid()) {
    table.add_row({t, photon::indistinguishability_zpl(t, model),
                   photon::effective_indistinguishability(t, model)});
  }
  return table;
}

Table operating_point_table(std::string name,
                            const std::vector<optimizer::OperatingPoint>& points) {
  Table table(std::move(name),
              {"target", "lost", "T_star_K", "n_star", "m", "metric_achieved",
               "k_eff", "I_eff", "eta_star", "p_tot_w", "power_branch", "e_q_j",
               "e_q_wh", "t_q_s", "e_c_j", "e_c_wh", "t_c_s", "feasible",
               "clamped"});
  for (const auto& op : points) {
    if (!op.feasible) {
      std::vector<Cell> row{op.target, op.lost};
      while (row.size() < table.columns().size() - 2) row.push_back(empty());
      row.push_back(flag(false));
      row.push_back(flag(false));
      table.add_row(std::move(row));
      continue;
    }
    table.add_row({op.target, op.lost, op.t_star_k, count(op.n_star),
                   count(op.m), op.metric_achieved, op.k_eff,
                   op.indistinguishability, op.eta_star, op.p_tot_w,
                   std::string(resource::to_string(op.power_branch)),
                   op.e_q.joule, op.e_q.watt_hour(), op.t_q_s, op.e_c.joule,
                   op.e_c.watt_hour(), op.t_c_s, flag(true), flag(op.clamped)});
  }
  return table;
}

Table loss_sweep_table(const std::vector<optimizer::LossSweepRow>& rows) {
  Table table("lsweep", {"lost", "energy_threshold", "computational_threshold",
                         "min_feasible_k_eff", "n_at_min_k_eff",
                         "feasible_n_count", "note"});
  for (const auto& r : rows) {
    // Notes are free text; keep the CSV free of separators.
    std::string note = r.note;
    for (char& ch : note) {
      if (ch == ',') ch = ';';
    }
    table.add_row({count(r.lost), report::optional_cell(r.energy_threshold),
                   report::optional_cell(r.computational_threshold),
                   report::optional_cell(r.min_feasible_k_eff),
                   r.n_at_min_k_eff ? count(*r.n_at_min_k_eff) : empty(),
                   count(r.feasible_n_count), note});
  }
  return table;
}

Table hardware_table(std::string name,
                     const std::vector<optimizer::HardwareRow>& rows) {
  Table table(std::move(name),
              {"n", "m", "transmission", "lost", "k_eff", "metric", "e_q_j",
               "e_q_wh", "t_q_s", "e_c_j", "e_c_wh", "t_c_s"});
  for (const auto& r : rows) {
    table.add_row({count(r.n), count(r.m), r.transmission, r.lost, r.k_eff,
                   r.metric, r.e_q.joule, r.e_q.watt_hour(), r.t_q_s,
                   r.e_c.joule, r.e_c.watt_hour(), r.t_c_s});
  }
  return table;
}

Table histogram_table(std::string name,
                      const fluctuation::FluctuationResult& result) {
  Table table(std::move(name), {"metric_bin", "count"});
  for (const auto& [bin, n] : result.metric_histogram) {
    table.add_row({count(bin), count(static_cast<long long>(n))});
  }
  return table;
}

nlohmann::json fluctuation_summary(const fluctuation::FluctuationResult& r) {
  return {{"n", r.n},
          {"m", r.m},
          {"eta", r.eta},
          {"T_K", r.temperature_k},
          {"n_samples", r.n_samples},
          {"seed", r.seed},
          {"mean_transmitted", r.mean_transmitted},
          {"mean_metric", r.mean_metric},
          {"mean_e_c_j", r.mean_e_c.joule},
          {"mean_e_c_wh", r.mean_e_c.watt_hour()},
          {"e_q_j", r.e_q.joule},
          {"e_q_wh", r.e_q.watt_hour()},
          {"energy_ratio", r.mean_e_c.joule / r.e_q.joule},
          {"mean_t_c_s", r.mean_t_c_s},
          {"t_q_s", r.t_q_s},
          {"min_lost", r.min_lost}};
}

Table averaged_table(const fluctuation::AveragedThresholds& result) {
  Table table("thresholds_avg",
              {"target", "n_star", "mean_metric", "e_q_j", "e_q_wh",
               "mean_e_c_j", "mean_e_c_wh", "t_q_s", "mean_t_c_s", "eta_star"});
  for (const auto& row : result.rows) {
    table.add_row({row.point.target, count(row.point.n_star), row.mean_metric,
                   row.point.e_q.joule, row.point.e_q.watt_hour(),
                   row.mean_e_c.joule, row.mean_e_c.watt_hour(),
                   row.point.t_q_s, row.mean_t_c_s, row.point.eta_star});
  }
  return table;
}

Table transmission_table(const config::WorkbenchConfig& cfg) {
  Table table("table1", {"budget", "m", "source", "detector", "demultiplexer",
                         "coupling", "propagation", "eta"});
  for (const auto& col : kTableColumns) {
    const auto b = resource::transmission_breakdown(col.modes, cfg.budget(col.name));
    table.add_row({std::string(col.name), count(col.modes), b.source, b.detector,
                   b.demultiplexer, b.coupling, b.propagation, b.total});
  }
  return table;
}

Table click_pmf_table(const oracle::ClickStatistics& stats) {
  Table table("clicks", {"clicks", "probability"});
  for (std::size_t c = 0; c < stats.click_pmf.size(); ++c) {
    table.add_row({count(static_cast<long long>(c)), stats.click_pmf[c]});
  }
  return table;
}

Table tail_table(const oracle::ClickStatistics& stats) {
  Table table("tail", {"t", "empirical", "bound", "mc_error", "violated"});
  for (const auto& p : stats.tail) {
    table.add_row({p.t, p.empirical, p.bound, p.mc_error, flag(p.violated)});
  }
  return table;
}

nlohmann::json click_summary(const oracle::ClickStatistics& s) {
  return {{"n", s.n},
          {"m", s.m},
          {"trials", s.trials},
          {"seed", s.seed},
          {"mean_clicks", s.mean_clicks},
          {"std_clicks", s.std_clicks},
          {"standard_error", s.standard_error},
          {"predicted", s.predicted},
          {"bose_einstein_mean", s.bose_einstein_mean},
          {"z_score", s.z_score},
          {"normalization_max_err", s.normalization_max_err},
          {"ld_violations", s.ld_violations}};
}

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig2a", "fig2b", "fig2c", "fig2d",
                                            "fig3",  "fig4",  "fig5",  "table1"};
  return ids;
}

Artifact figure(std::string_view id, const config::WorkbenchConfig& cfg) {
  const ModelContext ctx = cfg.context();
  const auto targets = optimizer::integer_targets(1, kDefaultMaxTarget);
  Artifact out;
  out.summary["figure"] = std::string(id);

  if (id == "fig2a" || id == "fig2b") {
    const auto avg =
        fluctuation::averaged_thresholds(kFigureLoss, targets, cfg.search, cfg.mc, ctx);
    Table table(std::string(id),
                id == "fig2a"
                    ? std::vector<std::string>{"target", "mean_metric", "e_q_j",
                                               "e_q_wh", "mean_e_c_j",
                                               "mean_e_c_wh"}
                    : std::vector<std::string>{"target", "mean_metric", "t_q_s",
                                               "mean_t_c_s"});
    for (const auto& row : avg.rows) {
      if (id == "fig2a") {
        table.add_row({row.point.target, row.mean_metric, row.point.e_q.joule,
                       row.point.e_q.watt_hour(), row.mean_e_c.joule,
                       row.mean_e_c.watt_hour()});
      } else {
        table.add_row({row.point.target, row.mean_metric, row.point.t_q_s,
                       row.mean_t_c_s});
      }
    }
    out.tables.push_back(std::move(table));
    out.summary["lost"] = kFigureLoss;
    out.summary["energy_threshold"] = optional_json(avg.energy);
    out.summary["computational_threshold"] = optional_json(avg.computational);
    return out;
  }
  if (id == "fig2c" || id == "fig2d") {
    const auto rows = optimizer::fixed_hardware_sweep(
        1, kHardwareMaxPhotons, cfg.budget("energetic"), cfg.search.t_max_k, ctx);
    Table table(std::string(id),
                id == "fig2c"
                    ? std::vector<std::string>{"n", "m", "metric", "e_q_j",
                                               "e_q_wh", "e_c_j", "e_c_wh"}
                    : std::vector<std::string>{"n", "m", "metric", "t_q_s",
                                               "t_c_s"});
    for (const auto& r : rows) {
      if (id == "fig2c") {
        table.add_row({count(r.n), count(r.m), r.metric, r.e_q.joule,
                       r.e_q.watt_hour(), r.e_c.joule, r.e_c.watt_hour()});
      } else {
        table.add_row({count(r.n), count(r.m), r.metric, r.t_q_s, r.t_c_s});
      }
    }
    out.tables.push_back(std::move(table));
    out.summary["budget"] = "energetic";
    out.summary["T_K"] = cfg.search.t_max_k;
    return out;
  }
  if (id == "fig3") {
    out.tables.push_back(indistinguishability_table(
        cfg.search.t_min_k, cfg.search.t_max_k, cfg.search.t_step_k,
        cfg.distinguishability, "fig3"));
    return out;
  }
  if (id == "fig4") {
    nlohmann::json experiments = nlohmann::json::array();
    for (int n : kExperimentPhotons) {
      const int m = metric::mode_count(n);
      const auto r = fluctuation::run_fluctuation(n, m, kExperimentEta,
                                                  cfg.search.t_max_k, cfg.mc, ctx);
      out.tables.push_back(histogram_table("fig4_n" + std::to_string(n), r));
      experiments.push_back(fluctuation_summary(r));
    }
    out.summary["experiments"] = experiments;
    return out;
  }
  if (id == "fig5") {
    const auto th = optimizer::fixed_loss_thresholds(kFigureLoss, targets, cfg.search, ctx);
    out.tables.push_back(operating_point_table("fig5", th.sweep));
    out.summary["lost"] = kFigureLoss;
    out.summary["energy_threshold"] = optional_json(th.energy);
    out.summary["computational_threshold"] = optional_json(th.computational);
    return out;
  }
  if (id == "table1") {
    out.tables.push_back(transmission_table(cfg));
    return out;
  }
  throw std::invalid_argument("unknown figure id '" + std::string(id) + "'");
}

}  // namespace bsenergy::artifacts
