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

// bsenergy: energy and hardness analysis of photonic Boson Sampling.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsenergy/artifacts.hpp"
#include "bsenergy/config.hpp"
#include "bsenergy/report.hpp"

namespace {

using namespace bsenergy;
using artifacts::Artifact;
using nlohmann::json;

struct GlobalOptions {
  std::optional<std::string> config_path;
  std::vector<std::string> overrides;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  std::optional<std::string> format;
};

struct Session {
  config::WorkbenchConfig cfg;
  report::Provenance provenance;
  json resolved;
};

Session open_session(const GlobalOptions& g) {
  std::vector<std::string> overrides = g.overrides;
  if (g.seed) overrides.push_back("mc.seed=" + std::to_string(*g.seed));
  if (g.threads) overrides.push_back("mc.threads=" + std::to_string(*g.threads));
  std::optional<std::filesystem::path> path;
  if (g.config_path) path = *g.config_path;
  Session s{config::load_config(path, overrides), {}, {}};
  s.resolved = config::to_json(s.cfg);
  s.provenance.config_hash = config::config_hash(s.cfg);
  s.provenance.seed = s.cfg.mc.seed;
  s.provenance.version = std::string(report::tool_version());
  s.provenance.resolved_config = s.resolved.dump();
  return s;
}

/// Writes the artifact. CSV goes to stdout (or one file per table under
/// --out); JSON carries provenance, summary and every table.
void emit(const std::string& command, const Artifact& a, const Session& s,
          const GlobalOptions& g, const std::string& default_format) {
  const std::string format = g.format.value_or(default_format);
  json doc = {{"command", command},
              {"provenance", report::provenance_json(s.provenance, s.resolved)},
              {"summary", a.summary},
              {"tables", json::object()}};
  for (const auto& t : a.tables) doc["tables"][t.name()] = t.to_json();

  if (g.out_dir) {
    const std::filesystem::path dir(*g.out_dir);
    std::filesystem::create_directories(dir);
    for (const auto& t : a.tables) {
      std::ofstream os(dir / (t.name() + ".csv"), std::ios::binary);
      t.write_csv(os, s.provenance);
    }
    std::ofstream js(dir / (command + ".json"), std::ios::binary);
    js << doc.dump(2) << '\n';
    std::cout << "wrote " << a.tables.size() << " table(s) and " << command
              << ".json to " << dir.string() << '\n';
    return;
  }
  if (format == "json") {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < a.tables.size(); ++i) {
    if (i) std::cout << '\n';
    a.tables[i].write_csv(std::cout, s.provenance);
  }
}

/// Single-record artifact: one table row and the same fields as summary.
Artifact record(const std::string& name, const json& fields) {
  std::vector<std::string> columns;
  std::vector<report::Cell> row;
  for (const auto& [key, value] : fields.items()) {
    columns.push_back(key);
    if (value.is_number_integer()) {
      row.emplace_back(value.get<long long>());
    } else if (value.is_number()) {
      row.emplace_back(value.get<double>());
    } else if (value.is_boolean()) {
      row.emplace_back(std::string(value.get<bool>() ? "true" : "false"));
    } else if (value.is_null()) {
      row.emplace_back(std::string());
    } else {
      row.emplace_back(value.get<std::string>());
    }
  }
  Artifact a;
  a.tables.emplace_back(name, columns);
  a.tables.back().add_row(std::move(row));
  a.summary = fields;
  return a;
}

json operating_point_json(const optimizer::OperatingPoint& op) {
  json j = {{"target", op.target}, {"lost", op.lost}, {"feasible", op.feasible}};
  if (!op.feasible) return j;
  j.update({{"T_star_K", op.t_star_k},
            {"n_star", op.n_star},
            {"m", op.m},
            {"metric_achieved", op.metric_achieved},
            {"k_eff", op.k_eff},
            {"I_eff", op.indistinguishability},
            {"eta_star", op.eta_star},
            {"p_tot_w", op.p_tot_w},
            {"power_branch", std::string(resource::to_string(op.power_branch))},
            {"e_q_j", op.e_q.joule},
            {"e_q_wh", op.e_q.watt_hour()},
            {"t_q_s", op.t_q_s},
            {"e_c_j", op.e_c.joule},
            {"e_c_wh", op.e_c.watt_hour()},
            {"t_c_s", op.t_c_s},
            {"clamped", op.clamped}});
  return j;
}

/// Parses "a:b" into an inclusive integer target list.
std::vector<double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("range '" + text + "' is not first:last");
  }
  return optimizer::integer_targets(std::stoi(text.substr(0, colon)),
                                    std::stoi(text.substr(colon + 1)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy and hardness analysis of photonic Boson Sampling"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  app.set_version_flag("--version", std::string(report::tool_version()));

  GlobalOptions g;
  app.add_option("--config", g.config_path,
                 std::string("JSON config file (default: $") +
                     config::kConfigEnvVar + ")");
  app.add_option("--set", g.overrides, "Override a config key, key.path=value")
      ->take_all();
  app.add_option("--out", g.out_dir, "Write artifacts into this directory");
  app.add_option("--seed", g.seed, "Monte Carlo seed (mc.seed)");
  app.add_option("--threads", g.threads, "Worker threads (mc.threads)");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  // The action runs after parsing; it builds the artifact from the session.
  std::function<void()> action;
  auto bind = [&](CLI::App* sub, const std::string& command,
                  const std::string& default_format,
                  std::function<Artifact(const Session&)> build) {
    sub->callback([&, command, default_format, build] {
      action = [&, command, default_format, build] {
        const Session s = open_session(g);
        emit(command, build(s), s, g, default_format);
      };
    });
  };

  // model indist
  auto* model = app.add_subcommand("model", "Photon-source models");
  model->require_subcommand(1);
  auto* indist = model->add_subcommand("indist", "Indistinguishability vs temperature");
  std::optional<double> tmin, tmax, tstep;
  indist->add_option("--tmin", tmin, "First temperature [K]");
  indist->add_option("--tmax", tmax, "Last temperature [K]");
  indist->add_option("--step", tstep, "Temperature step [K]");
  bind(indist, "model_indist", "csv", [&](const Session& s) {
    Artifact a;
    a.tables.push_back(artifacts::indistinguishability_table(
        tmin.value_or(s.cfg.search.t_min_k), tmax.value_or(s.cfg.search.t_max_k),
        tstep.value_or(s.cfg.search.t_step_k), s.cfg.distinguishability));
    return a;
  });

  // metric eval
  auto* metric_cmd = app.add_subcommand("metric", "Hardness metric");
  metric_cmd->require_subcommand(1);
  auto* metric_eval = metric_cmd->add_subcommand("eval", "Evaluate M(T, n, l)");
  double m_t = 3.0, m_l = 0.0;
  int m_n = 0;
  std::optional<int> m_modes;
  metric_eval->add_option("--T", m_t, "Temperature [K]")->capture_default_str();
  metric_eval->add_option("--n", m_n, "Input photons")->required();
  metric_eval->add_option("--l", m_l, "Lost photons")->capture_default_str();
  metric_eval->add_option("--modes", m_modes, "Modes (default ceil(2.1 n))");
  bind(metric_eval, "metric_eval", "json", [&](const Session& s) {
    const double indist =
        photon::effective_indistinguishability(m_t, s.cfg.distinguishability);
    const int m = m_modes.value_or(metric::mode_count(m_n));
    const auto v = metric::evaluate_metric_at(indist, metric::SamplingInstance{m_n, m, m_l},
                                              s.cfg.tolerances);
    return record("metric_eval", {{"T_K", m_t},
                                  {"n", m_n},
                                  {"m", m},
                                  {"l", m_l},
                                  {"I", v.indistinguishability},
                                  {"c_s", v.c_s},
                                  {"c_s_l", v.c_s_l},
                                  {"ratio", v.ratio},
                                  {"k_eff", v.k_eff},
                                  {"metric", v.value},
                                  {"clamped", v.clamped}});
  });

  // budget eval
  auto* budget_cmd = app.add_subcommand("budget", "Optical noise budgets");
  budget_cmd->require_subcommand(1);
  auto* budget_eval = budget_cmd->add_subcommand("eval", "End-to-end transmission");
  std::string b_column;
  int b_modes = 0;
  budget_eval->add_option("--column", b_column, "Budget name")->required();
  budget_eval->add_option("--modes", b_modes, "Modes m")->required();
  bind(budget_eval, "budget_eval", "json", [&](const Session& s) {
    const auto b = resource::transmission_breakdown(b_modes, s.cfg.budget(b_column));
    return record("budget_eval", {{"budget", b_column},
                                  {"m", b_modes},
                                  {"source", b.source},
                                  {"detector", b.detector},
                                  {"demultiplexer", b.demultiplexer},
                                  {"coupling", b.coupling},
                                  {"propagation", b.propagation},
                                  {"eta", b.total}});
  });

  // classical eval
  auto* classical_cmd = app.add_subcommand("classical", "Classical simulation cost");
  classical_cmd->require_subcommand(1);
  auto* classical_eval = classical_cmd->add_subcommand("eval", "Cost per sample");
  int c_modes = 0;
  double c_metric = 0.0;
  classical_eval->add_option("--modes", c_modes, "Modes m")->required();
  classical_eval->add_option("--metric", c_metric, "Effective photons")->required();
  bind(classical_eval, "classical_eval", "json", [&](const Session& s) {
    const auto e = classical::classical_energy_per_sample(c_modes, c_metric,
                                                          s.cfg.platform);
    return record("classical_eval",
                  {{"m", c_modes},
                   {"metric", c_metric},
                   {"flops", classical::flop_lower_bound(c_modes, c_metric)},
                   {"joule", e.joule},
                   {"wh", e.watt_hour()},
                   {"seconds", classical::classical_time_per_sample(
                                   c_modes, c_metric, s.cfg.platform)}});
  });

  // optimize
  auto* optimize = app.add_subcommand("optimize", "Minimum-power operating point");
  double o_target = 17.0, o_lost = 12.0;
  optimize->add_option("--M0", o_target, "Target metric")->capture_default_str();
  optimize->add_option("--l", o_lost, "Lost photons")->capture_default_str();
  bind(optimize, "optimize", "csv", [&](const Session& s) {
    const auto op = optimizer::optimize_for_metric(o_target, o_lost, s.cfg.search,
                                                   s.cfg.context());
    Artifact a;
    a.tables.push_back(artifacts::operating_point_table("optimize", {op}));
    a.summary = operating_point_json(op);
    return a;
  });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Operating points over a target range");
  std::string s_range = "1:30";
  double s_lost = 12.0;
  sweep->add_option("--M0-range", s_range, "first:last")->capture_default_str();
  sweep->add_option("--l", s_lost, "Lost photons")->capture_default_str();
  bind(sweep, "sweep", "csv", [&](const Session& s) {
    const auto points = optimizer::sweep_targets(parse_range(s_range), s_lost,
                                                 s.cfg.search, s.cfg.context());
    Artifact a;
    a.tables.push_back(artifacts::operating_point_table("sweep", points));
    std::size_t feasible = 0;
    for (const auto& p : points) feasible += p.feasible ? 1 : 0;
    a.summary = {{"lost", s_lost}, {"points", points.size()}, {"feasible", feasible}};
    return a;
  });

  // thresholds
  auto* thresholds = app.add_subcommand("thresholds", "Fixed-l advantage thresholds");
  double t_lost = 12.0;
  std::string t_range = "1:30";
  thresholds->add_option("--l", t_lost, "Lost photons")->capture_default_str();
  thresholds->add_option("--M0-range", t_range, "first:last")->capture_default_str();
  bind(thresholds, "thresholds", "csv", [&](const Session& s) {
    const auto th = optimizer::fixed_loss_thresholds(t_lost, parse_range(t_range),
                                                     s.cfg.search, s.cfg.context());
    Artifact a;
    a.tables.push_back(artifacts::operating_point_table("thresholds", th.sweep));
    a.summary = {{"lost", t_lost},
                 {"energy_threshold", artifacts::optional_json(th.energy)},
                 {"computational_threshold",
                  artifacts::optional_json(th.computational)}};
    return a;
  });

  // lsweep
  auto* lsweep = app.add_subcommand("lsweep", "Thresholds and k_eff reach per l");
  int l_first = 0, l_last = 12;
  std::string l_range = "1:30";
  lsweep->add_option("--l-min", l_first, "First l")->capture_default_str();
  lsweep->add_option("--l-max", l_last, "Last l")->capture_default_str();
  lsweep->add_option("--M0-range", l_range, "first:last")->capture_default_str();
  bind(lsweep, "lsweep", "csv", [&](const Session& s) {
    std::vector<int> losses;
    for (int l = l_first; l <= l_last; ++l) losses.push_back(l);
    const auto rows = optimizer::lost_photon_sweep(losses, parse_range(l_range),
                                                   s.cfg.search, s.cfg.context());
    Artifact a;
    a.tables.push_back(artifacts::loss_sweep_table(rows));
    a.summary = {{"T_K", s.cfg.search.t_max_k}};
    return a;
  });

  // hardware-sweep
  auto* hardware = app.add_subcommand("hardware-sweep", "Fixed per-component losses");
  std::string h_budget = "energetic";
  int h_first = 1, h_last = 75;
  std::optional<double> h_t;
  hardware->add_option("--budget", h_budget, "Budget name")->capture_default_str();
  hardware->add_option("--n-min", h_first, "First n")->capture_default_str();
  hardware->add_option("--n-max", h_last, "Last n")->capture_default_str();
  hardware->add_option("--T", h_t, "Temperature [K] (default search.t_max)");
  bind(hardware, "hardware_sweep", "csv", [&](const Session& s) {
    const double t = h_t.value_or(s.cfg.search.t_max_k);
    const auto rows = optimizer::fixed_hardware_sweep(
        h_first, h_last, s.cfg.budget(h_budget), t, s.cfg.context());
    Artifact a;
    a.tables.push_back(artifacts::hardware_table("hardware_sweep", rows));
    a.summary = {{"budget", h_budget}, {"T_K", t}};
    return a;
  });

  // fluctuate
  auto* fluctuate = app.add_subcommand("fluctuate", "Binomial-loss Monte Carlo");
  int f_n = 29;
  std::optional<int> f_modes;
  double f_eta = 0.6;
  std::optional<double> f_t;
  std::optional<std::size_t> f_samples;
  fluctuate->add_option("--n", f_n, "Input photons")->capture_default_str();
  fluctuate->add_option("--modes", f_modes, "Modes (default ceil(2.1 n))");
  fluctuate->add_option("--eta", f_eta, "Transmission")->capture_default_str();
  fluctuate->add_option("--T", f_t, "Temperature [K] (default search.t_max)");
  fluctuate->add_option("--samples", f_samples, "Samples (default mc.n_samples)");
  bind(fluctuate, "fluctuate", "csv", [&](const Session& s) {
    auto mc = s.cfg.mc;
    if (f_samples) mc.n_samples = *f_samples;
    const auto r = fluctuation::run_fluctuation(
        f_n, f_modes.value_or(metric::mode_count(f_n)), f_eta,
        f_t.value_or(s.cfg.search.t_max_k), mc, s.cfg.context());
    Artifact a;
    a.tables.push_back(artifacts::histogram_table("fluctuate", r));
    a.summary = artifacts::fluctuation_summary(r);
    return a;
  });

  // thresholds-avg
  auto* thresholds_avg =
      app.add_subcommand("thresholds-avg", "Thresholds averaged over binomial loss");
  double ta_lost = 12.0;
  std::string ta_range = "1:30";
  thresholds_avg->add_option("--l", ta_lost, "Lost photons")->capture_default_str();
  thresholds_avg->add_option("--M0-range", ta_range, "first:last")
      ->capture_default_str();
  bind(thresholds_avg, "thresholds_avg", "csv", [&](const Session& s) {
    const auto avg = fluctuation::averaged_thresholds(
        ta_lost, parse_range(ta_range), s.cfg.search, s.cfg.mc, s.cfg.context());
    Artifact a;
    a.tables.push_back(artifacts::averaged_table(avg));
    a.summary = {{"lost", ta_lost},
                 {"energy_threshold", artifacts::optional_json(avg.energy)},
                 {"computational_threshold",
                  artifacts::optional_json(avg.computational)}};
    return a;
  });

  // oracle verify
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact small-scale sampler");
  oracle_cmd->require_subcommand(1);
  auto* verify = oracle_cmd->add_subcommand("verify", "Click statistics over Haar draws");
  int v_n = 3, v_m = 7, v_points = 101;
  std::size_t v_trials = 1000;
  verify->add_option("--n", v_n, "Photons")->capture_default_str();
  verify->add_option("--m", v_m, "Modes")->capture_default_str();
  verify->add_option("--trials", v_trials, "Haar draws")->capture_default_str();
  verify->add_option("--tail-points", v_points, "Tail grid size")->capture_default_str();
  bind(verify, "oracle_verify", "json", [&](const Session& s) {
    const auto stats = oracle::click_statistics(v_n, v_m, v_trials, s.cfg.mc.seed,
                                                s.cfg.mc.threads, v_points);
    Artifact a;
    a.tables.push_back(artifacts::click_pmf_table(stats));
    a.tables.push_back(artifacts::tail_table(stats));
    a.summary = artifacts::click_summary(stats);
    return a;
  });

  // figure
  auto* figure = app.add_subcommand("figure", "Regenerate figure or table data");
  std::string fig_id;
  figure->add_option("id", fig_id, "Figure id")
      ->required()
      ->check(CLI::IsMember(artifacts::figure_ids()));
  bind(figure, "figure", "csv",
       [&](const Session& s) { return artifacts::figure(fig_id, s.cfg); });

  // compare-rcs
  auto* rcs = app.add_subcommand("compare-rcs", "Random-circuit-sampling reference");
  int r_n = 24;
  std::optional<double> r_t;
  rcs->add_option("--n", r_n, "Input photons")->capture_default_str();
  rcs->add_option("--T", r_t, "Temperature [K] (default search.t_max)");
  bind(rcs, "compare_rcs", "json", [&](const Session& s) {
    const double t = r_t.value_or(s.cfg.search.t_max_k);
    const auto eq = resource::quantum_energy_per_sample(t, r_n, s.cfg.facility);
    const double tq = resource::quantum_time_per_sample(r_n, s.cfg.facility);
    return record("compare_rcs",
                  {{"n", r_n},
                   {"T_K", t},
                   {"rcs_wh", s.cfg.rcs.energy_per_sample_wh},
                   {"e_q_wh", eq.watt_hour()},
                   {"energy_ratio", classical::rcs_energy_ratio(s.cfg.rcs, eq)},
                   {"rcs_time_s", s.cfg.rcs.time_per_sample_s},
                   {"t_q_s", tq},
                   {"time_ratio", s.cfg.rcs.time_per_sample_s / tq}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    if (action) action();
  } catch (const config::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
