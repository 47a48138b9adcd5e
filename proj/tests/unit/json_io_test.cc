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

#include "hushwave/json_io.h"

#include <gtest/gtest.h>

#include "hushwave/errors.h"
#include "json.hpp"
#include "support/oracles.h"

namespace hushwave {
namespace {

using nlohmann::json;

EnvironmentScript Sample() {
  EnvironmentScript e = SingleVictimEnvironment(7.25, 30.0, 62.0, "iphone14pro");
  e.devices[0].carry = Carry::kPocket;
  e.devices[0].speed_mps = 1.5;
  e.devices[0].rssi_dbm = -58.5;
  e.devices[0].delivery_override[CommandKind::kReset] = 0.25;
  DeviceScript d;
  d.bssid = "02:00:00:00:00:09";
  d.ssid = "cafe";
  d.role = DeviceRole::kDistractor;
  d.trajectory = {{0.0, -70.0}, {4.5, std::nullopt}};
  e.devices.push_back(d);
  e.rssi_jitter_db = 1.5;
  e.rng_seed = 18446744073709551557ULL;
  e.delivery_override[CommandKind::kMute] = 0.9;
  return e;
}

TEST(EnvironmentJson, RoundTripIsByteStable) {
  const std::string text = FormatEnvironmentJson(Sample());
  const EnvironmentScript back = ParseEnvironmentJson(text);
  EXPECT_EQ(FormatEnvironmentJson(back), text);
  EXPECT_EQ(back.rng_seed, 18446744073709551557ULL);
  EXPECT_EQ(back.devices[0].carry, Carry::kPocket);
  EXPECT_EQ(back.devices[0].rssi_dbm, -58.5);
  EXPECT_EQ(back.devices[1].trajectory, Sample().devices[1].trajectory);
  EXPECT_EQ(back.delivery_override.at(CommandKind::kMute), 0.9);
}

TEST(EnvironmentJson, MinimalDocumentUsesDefaults) {
  const auto e = ParseEnvironmentJson(R"({"devices":[{"bssid":"aa"}]})");
  ASSERT_EQ(e.devices.size(), 1u);
  EXPECT_EQ(e.devices[0].role, DeviceRole::kVictim);
  EXPECT_EQ(e.scan_period_s, 1.0);
}

std::string ErrorOf(std::string_view text) {
  try {
    ParseEnvironmentJson(text);
  } catch (const FormatError& e) {
    return e.what();
  } catch (const ParameterError& e) {
    return std::string("parameter: ") + e.what();
  }
  return "";
}

TEST(EnvironmentJson, StrictErrorsCarryPath) {
  EXPECT_NE(ErrorOf(R"({"devices":[{"bssid":"a","carry":"bag"}]})").find("env.devices[0].carry"),
            std::string::npos);
  const std::string missing = ErrorOf(R"({"devices":[{"ssid":"x"}]})");
  EXPECT_NE(missing.find("env.devices[0]"), std::string::npos) << missing;
  EXPECT_NE(missing.find("bssid"), std::string::npos) << missing;
  EXPECT_NE(ErrorOf(R"({"devices":[],"colour":1})").find("colour"), std::string::npos);
  EXPECT_NE(ErrorOf(R"({"devices":[],"noise_db":"loud"})").find("env.noise_db"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"({"devices":[],"delivery_override":{"dance":0.5}})").find("dance"),
            std::string::npos);
  EXPECT_FALSE(ErrorOf("[").empty());
  // Structurally fine but invalid values are rejected too.
  EXPECT_FALSE(ErrorOf(R"({"devices":[],"scan_period_s":0})").empty());
}

TEST(EnvironmentJson, ShippedScenarioLoads) {
  const auto e = ReadEnvironmentJson(testing::DataPath("scenarios/corpus_env.json"));
  EXPECT_FALSE(e.devices.empty());
  EXPECT_EQ(e.devices[0].role, DeviceRole::kVictim);
}

TEST(Reports, AttackReportShape) {
  EnvironmentScript e = SingleVictimEnvironment(8.85, 60.0, 55.0);
  for (CommandKind k : kAllCommandKinds) e.delivery_override[k] = 1.0;
  const SimResult r = Simulate(e, AttackConfig{});
  const json j = json::parse(SimResultJson(r));
  EXPECT_EQ(j["report"]["success"], true);
  EXPECT_EQ(j["report"]["success_angle_deg"], 60.0);
  EXPECT_EQ(j["report"]["angles"].size(), 6u);
  EXPECT_EQ(j["truth"]["chain_success"], true);
  EXPECT_TRUE(j["report"]["angles"][0]["feedback"]["L4"].is_null());
  EXPECT_EQ(j["report"]["angles"][5]["feedback"]["restore"]["performed"], true);
  const std::string lines = SimEventsJsonLines(r.events);
  std::size_t n = 0;
  for (char c : lines) n += c == '\n';
  EXPECT_EQ(n, r.events.size());
  EXPECT_EQ(json::parse(lines.substr(0, lines.find('\n')))["type"], "aim");
}

TEST(Reports, RsaAndPrecisionRecall) {
  RsaResult r;
  r.points.push_back({5.0, 30, 30, 1.0, 0.9, 1.0});
  const json j = json::parse(RsaResultJson(r));
  EXPECT_TRUE(j["rsa_m"].is_null());
  EXPECT_EQ(j["points"][0]["successes"], 30);
  const std::string csv = RsaResultCsv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "distance_m,trials,successes,rate,wilson_lo,wilson_hi");

  PrecisionRecall pr;
  pr.tn = 3;
  const json p = json::parse(PrecisionRecallJson(pr));
  EXPECT_EQ(p["precision"], "no positives");
  EXPECT_EQ(p["recall"], "vacuous");
}

TEST(Reports, LeakageKeys) {
  const auto rep = MakeLeakageReport(Tone(1000.0, 1.0, 1.0), DefaultInsertionLossProfile(), 60.0,
                                     kAllDirections);
  const json j = json::parse(LeakageReportJson(rep));
  EXPECT_EQ(j["pass"], rep.pass);
  EXPECT_EQ(j["directions"].size(), 3u);
  EXPECT_EQ(j["directions"][0]["direction"], "front");
  EXPECT_TRUE(j["directions"][0]["bands"][0].contains("margin_db"));
}

}  // namespace
}  // namespace hushwave
