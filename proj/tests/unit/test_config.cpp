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

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

namespace bsenergy::config {
namespace {

std::string error_path(std::string_view text, const std::vector<std::string>& overrides = {}) {
  try {
    parse_config(text, overrides);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<no error>";
}

TEST(Config, EmptyTextGivesDefaults) {
  const auto cfg = parse_config("");
  EXPECT_EQ(cfg.facility.cryostat.power_override_w, 1396.0);
  EXPECT_EQ(cfg.facility.cryostat.s_max, 26);
  EXPECT_DOUBLE_EQ(cfg.platform.eta_e_flops_per_joule, 72.733e9);
  EXPECT_EQ(cfg.search.n_max, 200);
  EXPECT_EQ(cfg.mc.n_samples, 10000u);
  EXPECT_EQ(cfg.budgets.size(), 3u);
  EXPECT_EQ(config_hash(cfg), config_hash(default_config()));
  EXPECT_EQ(config_hash(parse_config("  \n")), config_hash(default_config()));
}

TEST(Config, OverrideChangesOnlyItsField) {
  const auto cfg = parse_config("", {"cryostat.power_override=1237.5"});
  EXPECT_EQ(cfg.facility.cryostat.power_override_w, 1237.5);
  EXPECT_EQ(cfg.facility.p_fix_w, default_config().facility.p_fix_w);
  EXPECT_NE(config_hash(cfg), config_hash(default_config()));
}

TEST(Config, NullOverrideSelectsFormula) {
  const auto cfg = parse_config(R"({"cryostat": {"power_override": null}})");
  EXPECT_FALSE(cfg.facility.cryostat.power_override_w.has_value());
}

TEST(Config, FileThenOverride) {
  const auto cfg = parse_config(R"({"facility": {"p_fix": 500}})", {"facility.p_fix=750"});
  EXPECT_EQ(cfg.facility.p_fix_w, 750.0);
}

TEST(Config, RoundTripsThroughJson) {
  const auto cfg = parse_config("", {"mc.seed=17", "budgets.comp.eta_d=0.9"});
  const auto back = from_json(to_json(cfg));
  EXPECT_EQ(to_json(back), to_json(cfg));
  EXPECT_EQ(config_hash(back), config_hash(cfg));
}

TEST(Config, CustomBudgetRequiresEveryField) {
  const auto cfg = parse_config(
      R"({"budgets": {"lab": {"eta_of": 0.5, "eta_d": 0.9, "eta_dmx": 0.8, "c_mzi": 0.01, "c_coup": 0.1}}})");
  EXPECT_EQ(cfg.budget("lab").eta_of, 0.5);
  EXPECT_EQ(error_path(R"({"budgets": {"lab": {"eta_of": 0.5}}})").rfind("budgets.lab", 0), 0u);
  EXPECT_THROW(cfg.budget("missing"), ConfigError);
}

TEST(Config, InvalidValueReportsPath) {
  EXPECT_EQ(error_path("", {"budgets.sota.eta_d=1.5"}), "budgets.sota.eta_d");
  EXPECT_EQ(error_path(R"({"search": {"t_step": -0.01}})"), "search.t_step");
  try {
    parse_config("", {"budgets.sota.eta_d=1.5"});
  } catch (const ConfigError& e) {
    EXPECT_NE(std::string(e.what()).find("budgets.sota.eta_d"), std::string::npos);
  }
}

TEST(Config, UnknownKeysRejected) {
  EXPECT_EQ(error_path(R"({"facility": {"p_fixx": 1}})"), "facility.p_fixx");
  EXPECT_EQ(error_path(R"({"bogus": {}})"), "bogus");
  EXPECT_EQ(error_path("", {"cryostat.nope=1"}), "cryostat.nope");
}

TEST(Config, TypeMismatchRejected) {
  EXPECT_EQ(error_path(R"({"mc": {"n_samples": "many"}})"), "mc.n_samples");
}

TEST(Config, ParseErrorReportsLineAndColumn) {
  try {
    parse_config("{\n  \"facility\": {\n    \"p_fix\": ,\n  }\n}");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("line 3"), std::string::npos) << what;
    EXPECT_NE(what.find("column"), std::string::npos) << what;
  }
}

TEST(Config, MalformedOverrideRejected) {
  EXPECT_THROW(parse_config("", {"no_equals_sign"}), ConfigError);
}

TEST(Config, EnvironmentVariableSuppliesFile) {
  const auto path = std::filesystem::temp_directory_path() / "bsenergy_env_config.json";
  {
    std::ofstream out(path);
    out << R"({"facility": {"r_sps": 2.0e6}})";
  }
  ::setenv(kConfigEnvVar, path.c_str(), 1);
  const auto cfg = load_config(std::nullopt);
  ::unsetenv(kConfigEnvVar);
  std::filesystem::remove(path);
  EXPECT_EQ(cfg.facility.r_sps_hz, 2.0e6);
  EXPECT_THROW(load_config(std::filesystem::path("/nonexistent/bsenergy.json")), ConfigError);
}

TEST(Config, HashIsStableHex) {
  const auto h = config_hash(default_config());
  EXPECT_EQ(h.size(), 16u);
  EXPECT_EQ(h.find_first_not_of("0123456789abcdef"), std::string::npos);
  EXPECT_EQ(h, config_hash(default_config()));
}

}  // namespace
}  // namespace bsenergy::config
