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

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bsenergy/config.hpp"
#include "bsenergy/report.hpp"

/// Result objects rendered as the tables the command-line tool emits.
namespace bsenergy::artifacts {

/// Tables plus a free-form JSON summary.
struct Artifact {
  std::vector<report::Table> tables;
  nlohmann::json summary = nlohmann::json::object();
};

report::Table indistinguishability_table(double t_min_k, double t_max_k,
                                         double step_k,
                                         const photon::DistinguishabilityModel& model,
                                         std::string name = "indistinguishability");

report::Table operating_point_table(std::string name,
                                    const std::vector<optimizer::OperatingPoint>& points);

report::Table loss_sweep_table(const std::vector<optimizer::LossSweepRow>& rows);

report::Table hardware_table(std::string name,
                             const std::vector<optimizer::HardwareRow>& rows);

report::Table histogram_table(std::string name,
                              const fluctuation::FluctuationResult& result);

nlohmann::json fluctuation_summary(const fluctuation::FluctuationResult& result);

report::Table averaged_table(const fluctuation::AveragedThresholds& result);

report::Table transmission_table(const config::WorkbenchConfig& cfg);

report::Table click_pmf_table(const oracle::ClickStatistics& stats);

report::Table tail_table(const oracle::ClickStatistics& stats);

nlohmann::json click_summary(const oracle::ClickStatistics& stats);

nlohmann::json optional_json(const std::optional<double>& x);

/// Known figure ids, in presentation order.
const std::vector<std::string>& figure_ids();

/// Regenerates the data behind a figure or table; throws
/// std::invalid_argument for unknown ids.
Artifact figure(std::string_view id, const config::WorkbenchConfig& cfg);

}  // namespace bsenergy::artifacts
