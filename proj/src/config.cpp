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

#include "bsenergy/config.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>
#include <variant>

namespace bsenergy::config {

using nlohmann::json;

ConfigError::ConfigError(std::string path, const std::string& message)
    : std::runtime_error(path.empty() ? message : path + ": " + message),
      path_(std::move(path)) {}

namespace {

static_assert(std::is_same_v<std::size_t, std::uint64_t>,
              "size_t and uint64_t fields share one binding");
using Target = std::variant<double*, int*, unsigned*, std::uint64_t*,
                            std::optional<double>*, std::optional<int>*>;

/// One JSON key bound to a model field. `name` is the field name used in the
/// model's own validation messages; `scale` converts stored to JSON units.
struct Field {
  const char* key;
  const char* name;
  Target target;
  double scale = 1.0;
};

struct Section {
  std::string path;
  std::vector<Field> fields;
  std::function<void()> validate;
};

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

template <typename Int>
Int read_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  if constexpr (std::is_signed_v<Int>) {
    const auto x = v.get<std::int64_t>();
    if (x < std::numeric_limits<Int>::min() || x > std::numeric_limits<Int>::max()) {
      throw ConfigError(path, "integer out of range");
    }
    return static_cast<Int>(x);
  } else {
    if (v.is_number_unsigned()) {
      const auto x = v.get<std::uint64_t>();
      if (x > std::numeric_limits<Int>::max()) {
        throw ConfigError(path, "integer out of range");
      }
      return static_cast<Int>(x);
    }
    const auto x = v.get<std::int64_t>();
    if (x < 0) throw ConfigError(path, "expected a non-negative integer");
    if (static_cast<std::uint64_t>(x) > std::numeric_limits<Int>::max()) {
      throw ConfigError(path, "integer out of range");
    }
    return static_cast<Int>(x);
  }
}

double read_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  return v.get<double>();
}

void assign(const Field& f, const json& v, const std::string& path) {
  std::visit(
      [&](auto* p) {
        using T = std::remove_pointer_t<decltype(p)>;
        if constexpr (std::is_same_v<T, double>) {
          *p = read_number(v, path) * f.scale;
        } else if constexpr (std::is_same_v<T, std::optional<double>>) {
          if (v.is_null()) {
            p->reset();
          } else {
            *p = read_number(v, path) * f.scale;
          }
        } else if constexpr (std::is_same_v<T, std::optional<int>>) {
          if (v.is_null()) {
            p->reset();
          } else {
            *p = read_integer<int>(v, path);
          }
        } else {
          *p = read_integer<T>(v, path);
        }
      },
      f.target);
}

json value_of(const Field& f) {
  return std::visit(
      [&](auto* p) -> json {
        using T = std::remove_pointer_t<decltype(p)>;
        if constexpr (std::is_same_v<T, double>) {
          return *p / f.scale;
        } else if constexpr (std::is_same_v<T, std::optional<double>>) {
          return *p ? json(**p / f.scale) : json(nullptr);
        } else if constexpr (std::is_same_v<T, std::optional<int>>) {
          return *p ? json(**p) : json(nullptr);
        } else {
          return *p;
        }
      },
      f.target);
}

void apply_section(const Section& s, const json& doc) {
  if (!doc.is_object()) throw ConfigError(s.path, "expected an object");
  for (const auto& [key, value] : doc.items()) {
    const Field* match = nullptr;
    for (const auto& f : s.fields) {
      if (key == f.key) match = &f;
    }
    if (!match) throw ConfigError(join(s.path, key), "unknown key");
    assign(*match, value, join(s.path, key));
  }
}

/// Re-raises a model invariant violation ("field: reason") under the JSON key
/// path of the offending field.
void validate_section(const Section& s) {
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    const auto colon = msg.find(':');
    if (colon != std::string::npos) {
      const std::string name = msg.substr(0, colon);
      std::string reason = msg.substr(colon + 1);
      if (!reason.empty() && reason.front() == ' ') reason.erase(0, 1);
      for (const auto& f : s.fields) {
        if (name == f.name) throw ConfigError(join(s.path, f.key), reason);
      }
    }
    throw ConfigError(s.path, msg);
  }
}

Section budget_section(const std::string& name, resource::NoiseBudget& b) {
  return {"budgets." + name,
          {{"eta_of", "eta_of", &b.eta_of},
           {"eta_d", "eta_d", &b.eta_d},
           {"eta_dmx", "eta_dmx", &b.eta_dmx},
           {"c_mzi", "c_mzi_db", &b.c_mzi_db},
           {"c_coup", "c_coup_db", &b.c_coup_db}},
          [&b] { b.validate(); }};
}

/// Every section except budgets, in document order.
std::vector<Section> sections(WorkbenchConfig& c) {
  auto& d = c.distinguishability;
  auto& f = c.facility;
  auto& cr = c.facility.cryostat;
  return {
      {"distinguishability",
       {{"alpha", "alpha_uev", &d.phonon.alpha_uev},
        {"epsilon_p", "epsilon_p_mev", &d.phonon.epsilon_p_mev},
        {"boltzmann_k", "boltzmann_mev_per_k", &d.phonon.boltzmann_mev_per_k},
        {"gamma0", "gamma0_uev", &d.cavity.gamma0_uev},
        {"kappa", "kappa_uev", &d.cavity.kappa_uev},
        {"g", "g_uev", &d.cavity.g_uev},
        {"eta0", "eta0", &d.zpl.eta0},
        {"slope", "slope_per_k", &d.zpl.slope_per_k},
        {"remote_penalty", "remote_penalty", &d.remote_penalty}},
       [&d] { d.validate(); }},
      {"cryostat",
       {{"p0", "p0_w", &cr.p0_w},
        {"carnot_fraction", "carnot_fraction", &cr.carnot_fraction},
        {"t_ext", "t_ext_k", &cr.t_ext_k},
        {"s_max", "s_max", &cr.s_max},
        {"power_override", "power_override_w", &cr.power_override_w}},
       [&cr] { cr.validate(); }},
      {"facility",
       {{"p_fix", "p_fix_w", &f.p_fix_w},
        {"r_sps", "r_sps_hz", &f.r_sps_hz},
        {"dmx_capacity", "dmx_capacity", &f.dmx_capacity}},
       [&f] { f.validate(); }},
      {"platform",
       {{"eta_e", "eta_e_gflops_per_watt", &c.platform.eta_e_flops_per_joule,
         1e9},
        {"r_max", "r_max_flops", &c.platform.r_max_flops}},
       [&c] { c.platform.validate(); }},
      {"tolerances",
       {{"eps_delta", "eps_delta", &c.tolerances.eps_delta}},
       [&c] { c.tolerances.validate(); }},
      {"search",
       {{"t_min", "t_min_k", &c.search.t_min_k},
        {"t_max", "t_max_k", &c.search.t_max_k},
        {"t_step", "t_step_k", &c.search.t_step_k},
        {"n_min", "n_min", &c.search.n_min},
        {"n_max", "n_max", &c.search.n_max}},
       [&c] { c.search.validate(); }},
      {"mc",
       {{"n_samples", "n_samples", &c.mc.n_samples},
        {"seed", "seed", &c.mc.seed},
        {"n_seeds", "n_seeds", &c.mc.n_seeds},
        {"threads", "threads", &c.mc.threads}},
       [&c] { c.mc.validate(); }},
      {"rcs",
       {{"energy_per_sample", "energy_per_sample_wh",
         &c.rcs.energy_per_sample_wh},
        {"time_per_sample", "time_per_sample_s", &c.rcs.time_per_sample_s}},
       [&c] { c.rcs.validate(); }},
      {"oracle",
       {{"unitarity_tol", "unitarity_tol", &c.oracle.unitarity_tol}},
       [&c] {
         detail::require(c.oracle.unitarity_tol > 0.0,
                         "unitarity_tol: must be positive");
       }},
  };
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

json parse_document(std::string_view text) {
  bool blank = true;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
  }
  if (blank) return json::object();
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // The reported byte is one past the offending character.
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    const auto [line, column] = line_column(text, at);
    std::string detail = e.what();
    if (const auto pos = detail.find("syntax error"); pos != std::string::npos) {
      detail = detail.substr(pos);
    }
    throw ConfigError("", "parse error at line " + std::to_string(line) +
                              ", column " + std::to_string(column) + ": " +
                              detail);
  }
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("", "override '" + assignment + "' is not key=value");
  }
  const std::string key = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value;
  try {
    value = json::parse(text);
  } catch (const json::parse_error&) {
    value = text;
  }
  json* node = &doc;
  std::string path;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot - start);
    if (part.empty()) throw ConfigError(key, "empty key component");
    path = join(path, part);
    if (!node->is_object()) throw ConfigError(path, "expected an object");
    if (dot == std::string::npos) {
      (*node)[part] = value;
      return;
    }
    node = &(*node)[part];
    if (node->is_null()) *node = json::object();
    start = dot + 1;
  }
}

}  // namespace

ModelContext WorkbenchConfig::context() const {
  return ModelContext{distinguishability, facility, tolerances, platform};
}

const resource::NoiseBudget& WorkbenchConfig::budget(std::string_view name) const {
  const auto it = budgets.find(std::string(name));
  if (it == budgets.end()) {
    throw ConfigError("budgets." + std::string(name), "unknown budget");
  }
  return it->second;
}

WorkbenchConfig default_config() {
  WorkbenchConfig cfg;
  cfg.budgets = {{"sota", resource::state_of_the_art_budget()},
                 {"energetic", resource::energetic_advantage_budget()},
                 {"comp", resource::computational_advantage_budget()}};
  return cfg;
}

json to_json(const WorkbenchConfig& cfg) {
  WorkbenchConfig copy = cfg;
  json doc = json::object();
  for (const auto& s : sections(copy)) {
    json& obj = doc[s.path] = json::object();
    for (const auto& f : s.fields) obj[f.key] = value_of(f);
  }
  json& budgets = doc["budgets"] = json::object();
  for (auto& [name, b] : copy.budgets) {
    json& obj = budgets[name] = json::object();
    for (const auto& f : budget_section(name, b).fields) obj[f.key] = value_of(f);
  }
  return doc;
}

WorkbenchConfig from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");
  WorkbenchConfig cfg = default_config();
  auto all = sections(cfg);
  for (const auto& [key, value] : doc.items()) {
    if (key == "budgets") {
      if (!value.is_object()) throw ConfigError("budgets", "expected an object");
      for (const auto& [name, body] : value.items()) {
        const bool known = cfg.budgets.count(name) > 0;
        auto& b = cfg.budgets[name];
        const auto s = budget_section(name, b);
        if (!known) {
          if (!body.is_object()) throw ConfigError(s.path, "expected an object");
          for (const auto& f : s.fields) {
            if (!body.contains(f.key)) {
              throw ConfigError(join(s.path, f.key),
                                "required for a new budget");
            }
          }
        }
        apply_section(s, body);
      }
      continue;
    }
    const Section* match = nullptr;
    for (const auto& s : all) {
      if (s.path == key) match = &s;
    }
    if (!match) throw ConfigError(key, "unknown section");
    apply_section(*match, value);
  }
  for (const auto& s : all) validate_section(s);
  for (auto& [name, b] : cfg.budgets) validate_section(budget_section(name, b));
  return cfg;
}

WorkbenchConfig parse_config(std::string_view text,
                             const std::vector<std::string>& overrides) {
  json doc = parse_document(text);
  if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");
  for (const auto& o : overrides) apply_override(doc, o);
  return from_json(doc);
}

WorkbenchConfig load_config(const std::optional<std::filesystem::path>& path,
                            const std::vector<std::string>& overrides) {
  std::optional<std::filesystem::path> source = path;
  if (!source) {
    if (const char* env = std::getenv(kConfigEnvVar); env && *env) {
      source = std::filesystem::path(env);
    }
  }
  if (!source) return parse_config("", overrides);
  std::ifstream in(*source, std::ios::binary);
  if (!in) {
    throw ConfigError("", "cannot open config file '" + source->string() + "'");
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), overrides);
}

std::string config_hash(const WorkbenchConfig& cfg) {
  const std::string canonical = to_json(cfg).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace bsenergy::config
