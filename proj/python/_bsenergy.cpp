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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsenergy/artifacts.hpp"
#include "bsenergy/config.hpp"

namespace py = pybind11;
using namespace bsenergy;

namespace {

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

/// A resolved configuration plus the analyses evaluated against it.
class Workbench {
 public:
  Workbench(const std::string& text, const std::vector<std::string>& overrides)
      : cfg_(config::parse_config(text, overrides)) {}

  py::object config() const { return to_python(config::to_json(cfg_)); }
  std::string hash() const { return config::config_hash(cfg_); }

  double effective_indistinguishability(double t) const {
    return photon::effective_indistinguishability(t, cfg_.distinguishability);
  }
  double indistinguishability_zpl(double t) const {
    return photon::indistinguishability_zpl(t, cfg_.distinguishability);
  }

  py::dict metric(double t, int n, double l, std::optional<int> modes) const {
    const auto v = metric::evaluate_metric_at(
        effective_indistinguishability(t),
        metric::SamplingInstance{n, modes.value_or(metric::mode_count(n)), l},
        cfg_.tolerances);
    py::dict d;
    d["I"] = v.indistinguishability;
    d["c_s"] = v.c_s;
    d["c_s_l"] = v.c_s_l;
    d["ratio"] = v.ratio;
    d["k_eff"] = v.k_eff;
    d["metric"] = v.value;
    d["clamped"] = v.clamped;
    return d;
  }

  double transmission(const std::string& budget, int m) const {
    return resource::end_to_end_transmission(m, cfg_.budget(budget));
  }

  double quantum_energy_per_sample(double t, int n) const {
    return resource::quantum_energy_per_sample(t, n, cfg_.facility).joule;
  }

  double classical_energy_per_sample(int m, double metric_value) const {
    return classical::classical_energy_per_sample(m, metric_value, cfg_.platform)
        .joule;
  }

  py::object optimize(double target, double lost) const {
    const auto op = optimizer::optimize_for_metric(target, lost, cfg_.search,
                                                   cfg_.context());
    return to_python(artifacts::operating_point_table("optimize", {op}).to_json()[0]);
  }

  py::object thresholds(double lost, int max_target) const {
    const auto th = optimizer::fixed_loss_thresholds(
        lost, optimizer::integer_targets(1, max_target), cfg_.search, cfg_.context());
    nlohmann::json j = {{"energy", artifacts::optional_json(th.energy)},
                        {"computational", artifacts::optional_json(th.computational)},
                        {"sweep", artifacts::operating_point_table("sweep", th.sweep)
                                      .to_json()}};
    return to_python(j);
  }

  py::object fluctuate(int n, double eta, std::optional<double> t,
                       std::optional<std::size_t> samples,
                       std::optional<std::uint64_t> seed,
                       std::optional<unsigned> threads) const {
    auto mc = cfg_.mc;
    if (samples) mc.n_samples = *samples;
    if (seed) mc.seed = *seed;
    if (threads) mc.threads = *threads;
    py::gil_scoped_release release;
    const auto r = fluctuation::run_fluctuation(
        n, metric::mode_count(n), eta, t.value_or(cfg_.search.t_max_k), mc,
        cfg_.context());
    py::gil_scoped_acquire acquire;
    auto j = artifacts::fluctuation_summary(r);
    nlohmann::json hist = nlohmann::json::object();
    for (const auto& [bin, count] : r.metric_histogram) hist[std::to_string(bin)] = count;
    j["histogram"] = hist;
    return to_python(j);
  }

  py::object figure(const std::string& id) const {
    const auto a = artifacts::figure(id, cfg_);
    nlohmann::json j = {{"summary", a.summary}, {"tables", nlohmann::json::object()}};
    for (const auto& table : a.tables) j["tables"][table.name()] = table.to_json();
    return to_python(j);
  }

 private:
  config::WorkbenchConfig cfg_;
};

}  // namespace

PYBIND11_MODULE(_bsenergy, m) {
  m.doc() = "Energy and hardness analysis of photonic Boson Sampling";
  m.attr("__version__") = std::string(report::tool_version());

  py::register_exception<config::ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);

  m.def("mode_count", &metric::mode_count, py::arg("n"));
  m.def("flop_lower_bound", &classical::flop_lower_bound, py::arg("m"), py::arg("n"));
  m.def("permanent", &oracle::permanent, py::arg("a"));
  m.def(
      "haar_random_unitary",
      [](int modes, std::uint64_t seed) {
        CounterRng rng = CounterRng::stream(seed, 0);
        return oracle::haar_random_unitary(modes, rng);
      },
      py::arg("m"), py::arg("seed"));
  m.def(
      "output_distribution",
      [](const oracle::ComplexMatrix& u, const oracle::OccupationVector& input) {
        py::dict out;
        for (const auto& [v, p] : oracle::output_distribution(u, input)) {
          out[py::tuple(py::cast(v))] = p;
        }
        return out;
      },
      py::arg("u"), py::arg("input"));
  m.def(
      "click_statistics",
      [](int n, int modes, std::size_t trials, std::uint64_t seed, unsigned threads) {
        oracle::ClickStatistics s;
        {
          py::gil_scoped_release release;
          s = oracle::click_statistics(n, modes, trials, seed, threads);
        }
        return to_python(artifacts::click_summary(s));
      },
      py::arg("n"), py::arg("m"), py::arg("trials"), py::arg("seed"),
      py::arg("threads") = 1);

  py::class_<Workbench>(m, "Workbench")
      .def(py::init<const std::string&, const std::vector<std::string>&>(),
           py::arg("text") = "", py::arg("overrides") = std::vector<std::string>{})
      .def("config", &Workbench::config)
      .def("config_hash", &Workbench::hash)
      .def("effective_indistinguishability",
           &Workbench::effective_indistinguishability, py::arg("T"))
      .def("indistinguishability_zpl", &Workbench::indistinguishability_zpl,
           py::arg("T"))
      .def("metric", &Workbench::metric, py::arg("T"), py::arg("n"),
           py::arg("l") = 0.0, py::arg("modes") = py::none())
      .def("transmission", &Workbench::transmission, py::arg("budget"), py::arg("m"))
      .def("quantum_energy_per_sample", &Workbench::quantum_energy_per_sample,
           py::arg("T"), py::arg("n"))
      .def("classical_energy_per_sample", &Workbench::classical_energy_per_sample,
           py::arg("m"), py::arg("metric"))
      .def("optimize", &Workbench::optimize, py::arg("M0"), py::arg("l"))
      .def("thresholds", &Workbench::thresholds, py::arg("l"),
           py::arg("max_target") = 30)
      .def("fluctuate", &Workbench::fluctuate, py::arg("n"), py::arg("eta"),
           py::arg("T") = py::none(), py::arg("samples") = py::none(),
           py::arg("seed") = py::none(), py::arg("threads") = py::none())
      .def("figure", &Workbench::figure, py::arg("id"));
}
