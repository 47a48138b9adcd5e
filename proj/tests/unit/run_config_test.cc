// Copyright 2026 The Hushwave Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hushwave/run_config.h"

#include <gtest/gtest.h>

#include <map>

#include "hushwave/errors.h"
#include "support/oracles.h"

namespace hushwave {
namespace {

EnvLookup MapEnv(std::map<std::string, std::string> m) {
  return [m](const std::string& k) -> std::optional<std::string> {
    auto it = m.find(k);
    if (it == m.end()) return std::nullopt;
    return it->second;
  };
}

std::string ErrorOf(std::string_view text) {
  try {
    ParseRunConfig(text);
  } catch (const ParameterError& e) {
    return e.what();
  }
  return "";
}

TEST(RunConfig, EmptyObjectGivesDefaults) {
  const RunConfig c = ParseRunConfig("{}");
  EXPECT_EQ(c.global.seed, 1u);
  EXPECT_EQ(c.signals.carrier_hz, 40200.0);
  EXPECT_EQ(c.attack.angle_step_deg, 12.0);
  EXPECT_EQ(c.attack.repeats_per_command, 5);
  EXPECT_EQ(c.field.range_mm, 18.0);
  EXPECT_EQ(c.sim.trials, 200);
}

TEST(RunConfig, PartialGroupKeepsOtherDefaults) {
  const RunConfig c = ParseRunConfig(R"({"attack": {"angle_step_deg": 6}})");
  EXPECT_EQ(c.attack.angle_step_deg, 6.0);
  EXPECT_EQ(c.attack.angle_end_deg, 180.0);
}

TEST(RunConfig, DiagnosticsNameTheKey) {
  EXPECT_NE(ErrorOf(R"({"attack": {"angle_step_deg": 0}})").find("attack.angle_step_deg"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"attack": {"angle_stepp": 1}})").find("attack.angle_stepp"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"nope": {}})").find("nope"), std::string::npos);
  EXPECT_NE(ErrorOf(R"({"sim": {"trials": 2.5}})").find("sim.trials"), std::string::npos);
  EXPECT_NE(ErrorOf(R"({"field": {"use_mask": 1}})").find("field.use_mask"), std::string::npos);
  EXPECT_NE(ErrorOf(R"({"global": {"seed": -1}})").find("global.seed"), std::string::npos);
  EXPECT_NE(ErrorOf(R"({"signals": {"carrier_hz": 120000}})").find("signals.carrier_hz"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"attack": {"device_profile": "brick"}})").find("attack.device_profile"),
            std::string::npos);
}

TEST(RunConfig, MalformedJsonReportsPosition) {
  const std::string e = ErrorOf("{\n  \"attack\": {\n    \"angle_step_deg\": ,\n  }\n}");
  EXPECT_NE(e.find("line 3"), std::string::npos) << e;
  EXPECT_NE(e.find("column"), std::string::npos) << e;
}

TEST(RunConfig, EnvironmentOverrides) {
  const RunConfig c = ApplyEnvOverrides(
      RunConfig{}, MapEnv({{"HUSHWAVE_ATTACK_ANGLE_STEP_DEG", "6"},
                           {"HUSHWAVE_FIELD_USE_MASK", "false"},
                           {"HUSHWAVE_GLOBAL_SEED", "99"}}));
  EXPECT_EQ(c.attack.angle_step_deg, 6.0);
  EXPECT_FALSE(c.field.use_mask);
  EXPECT_EQ(c.global.seed, 99u);
  EXPECT_THROW(ApplyEnvOverrides(RunConfig{}, MapEnv({{"HUSHWAVE_SIM_TRIALS", "many"}})),
               ParameterError);
  EXPECT_THROW(ApplyEnvOverrides(RunConfig{}, MapEnv({{"HUSHWAVE_ATTACK_ANGLE_STEP_DEG", "0"}})),
               ParameterError);
}

TEST(RunConfig, SetValueByDottedKey) {
  RunConfig c;
  SetConfigValue(c, "sim.rsa_step_m", "0.25");
  EXPECT_EQ(c.sim.rsa_step_m, 0.25);
  SetConfigValue(c, "acoustics.profile_dir", "x/y");
  EXPECT_EQ(c.acoustics.profile_dir, "x/y");
  EXPECT_THROW(SetConfigValue(c, "sim.bogus", "1"), ParameterError);
  EXPECT_THROW(SetConfigValue(c, "sim.trials", "1e3x"), ParameterError);
}

TEST(RunConfig, ShippedDefaultsFile) {
  const RunConfig c = LoadRunConfig(testing::DataPath("configs/defaults.json"), MapEnv({}));
  EXPECT_EQ(c.signals.carrier_hz, 40200.0);
  EXPECT_EQ(c.attack.angle_step_deg, 12.0);
  EXPECT_EQ(c.attack.repeats_per_command, 5);
  EXPECT_EQ(FormatRunConfig(c), FormatRunConfig(RunConfig{}));
}

TEST(RunConfig, FormatRoundTrips) {
  RunConfig c;
  c.attack.angle_step_deg = 7.5;
  c.global.output_dir = "out";
  c.field.piston_directivity = true;
  EXPECT_EQ(FormatRunConfig(ParseRunConfig(FormatRunConfig(c))), FormatRunConfig(c));
}

TEST(RunConfig, HelpListsEveryKeyWithEnvName) {
  const std::string help = ConfigHelp({"global", "signals", "acoustics", "field", "attack", "sim"});
  for (const auto& k : ConfigKeys()) {
    EXPECT_NE(help.find(k.dotted()), std::string::npos) << k.dotted();
    EXPECT_EQ(k.env_var().rfind("HUSHWAVE_", 0), 0u);
  }
  EXPECT_EQ(ConfigKeys({"attack"}).size(), 12u);
}

TEST(RunConfig, DerivedViews) {
  RunConfig c;
  const auto d = c.rsa_distances();
  ASSERT_EQ(d.size(), 15u);
  EXPECT_EQ(d.front(), 5.0);
  EXPECT_EQ(d.back(), 12.0);
  EXPECT_TRUE(c.mask().has_value());
  c.field.use_mask = false;
  EXPECT_FALSE(c.mask().has_value());
  EnvironmentScript env;
  c.sim.rssi_jitter_db = 2.0;
  c.ApplySim(env);
  EXPECT_EQ(env.rssi_jitter_db, 2.0);
}

TEST(RunConfig, MissingFileIsIoError) {
  EXPECT_THROW(LoadRunConfig("/nonexistent/hushwave.json", MapEnv({})), IoError);
}

}  // namespace
}  // namespace hushwave
