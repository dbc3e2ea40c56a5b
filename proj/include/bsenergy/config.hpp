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

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bsenergy/classical_model.hpp"
#include "bsenergy/fluctuation.hpp"
#include "bsenergy/optimizer.hpp"
#include "bsenergy/sampling_oracle.hpp"

namespace bsenergy::config {

/// Environment variable naming the default config file.
inline constexpr const char* kConfigEnvVar = "BSENERGY_CONFIG";

/// Invalid configuration; path() names the offending key (e.g.
/// "budgets.sota.eta_d"), empty for whole-document problems.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& message);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Every model constant, one JSON section per module.
struct WorkbenchConfig {
  photon::DistinguishabilityModel distinguishability;
  resource::FacilityConfig facility;  ///< facility.cryostat is the "cryostat" section
  std::map<std::string, resource::NoiseBudget> budgets;
  classical::ClassicalPlatform platform;
  metric::AlgorithmTolerances tolerances;
  optimizer::SearchSpace search;
  fluctuation::McConfig mc;
  classical::RcsReference rcs;
  oracle::OracleOptions oracle;

  ModelContext context() const;
  /// Throws ConfigError for unknown names.
  const resource::NoiseBudget& budget(std::string_view name) const;
};

WorkbenchConfig default_config();

nlohmann::json to_json(const WorkbenchConfig& cfg);

/// Layers `doc` over the defaults. Unknown keys and invariant violations
/// raise ConfigError naming the key path.
WorkbenchConfig from_json(const nlohmann::json& doc);

/// Parses config text (empty text means "all defaults") and then applies
/// `key.path=value` overrides; values are read as JSON, falling back to a
/// plain string.
WorkbenchConfig parse_config(std::string_view text,
                             const std::vector<std::string>& overrides = {});

/// defaults <- file <- overrides. With no path, falls back to the file named
/// by BSENERGY_CONFIG when set.
WorkbenchConfig load_config(const std::optional<std::filesystem::path>& path,
                            const std::vector<std::string>& overrides = {});

/// FNV-1a 64 of the canonical JSON dump, as 16 hex digits.
std::string config_hash(const WorkbenchConfig& cfg);

}  // namespace bsenergy::config
