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

#include "hushwave/acoustics.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "hushwave/errors.h"
#include "hushwave/spectrum.h"
#include "hushwave/waveform.h"
#include "support/oracles.h"

namespace hushwave {
namespace {

TEST(Hearing, MatchesClosedForm) {
  for (int i = 0; i <= 400; ++i) {
    const double f = 100.0 * std::pow(200.0, i / 400.0);
    EXPECT_NEAR(HearingThreshold(f), testing::TerhardtDb(f), 1e-9) << f;
    EXPECT_EQ(LeakageThreshold(f), HearingThreshold(f) - 5.0);
  }
  EXPECT_NEAR(HearingThreshold(1000.0), 3.37, 0.01);
}

TEST(Hearing, DomainChecked) {
  EXPECT_THROW(HearingThreshold(99.0), ParameterError);
  EXPECT_THROW(HearingThreshold(20001.0), ParameterError);
  EXPECT_NO_THROW(HearingThreshold(100.0));
  EXPECT_NO_THROW(HearingThreshold(20000.0));
}

TEST(Hearing, CurveModel) {
  const HearingModel m(Curve({{50.0, 40.0}, {25000.0, 0.0}}));
  EXPECT_TRUE(m.uses_curve());
  // Linear in dB against log frequency.
  const double expect = 40.0 - 40.0 * std::log(12525.0 / 50.0) / std::log(500.0);
  EXPECT_NEAR(m.Threshold(12525.0), expect, 1e-12);
  EXPECT_NEAR(m.LeakageThreshold(12525.0), expect - 5.0, 1e-12);
  EXPECT_THROW(HearingModel(Curve({{200.0, 1.0}, {25000.0, 0.0}})), ParameterError);
}

TEST(InsertionLoss, FrontGainInsideCarrierBandOnly) {
  const auto p = DefaultInsertionLossProfile();
  EXPECT_EQ(p.GainDb(Direction::kFront, 40200.0), 11.0);
  EXPECT_EQ(p.GainDb(Direction::kFront, 36000.0), 11.0);
  EXPECT_EQ(p.GainDb(Direction::kFront, 30000.0), 0.0);
  EXPECT_EQ(p.GainDb(Direction::kSide, 40200.0), 0.0);
  EXPECT_EQ(p.GainDb(Direction::kBack, 40200.0), 0.0);
}

TEST(InsertionLoss, AttenuationFromCurvesAndZeroOutside) {
  const auto p = DefaultInsertionLossProfile();
  for (Direction d : kAllDirections) {
    const Curve& c = p.attenuation(d);
    EXPECT_EQ(p.AttenuationDb(d, c.min_hz()), c.points().front().value_db);
    EXPECT_EQ(p.AttenuationDb(d, 50.0), 0.0);
    EXPECT_EQ(p.AttenuationDb(d, 20000.0), 0.0);
    EXPECT_EQ(p.GainDb(d, 1000.0), -p.AttenuationDb(d, 1000.0));
  }
  // Side and back are progressively stronger than front.
  EXPECT_LT(p.AttenuationDb(Direction::kFront, 1000.0), p.AttenuationDb(Direction::kSide, 1000.0));
  EXPECT_LT(p.AttenuationDb(Direction::kSide, 1000.0), p.AttenuationDb(Direction::kBack, 1000.0));
}

TEST(InsertionLoss, ScaledAttenuationKeepsGain) {
  const auto p = DefaultInsertionLossProfile();
  const auto h = p.ScaledAttenuation(0.5);
  EXPECT_DOUBLE_EQ(h.AttenuationDb(Direction::kBack, 500.0),
                   0.5 * p.AttenuationDb(Direction::kBack, 500.0));
  EXPECT_EQ(h.GainDb(Direction::kFront, 40200.0), 11.0);
}

TEST(InsertionLoss, ShippedCsvsEqualBuiltIn) {
  const auto disk = LoadInsertionLossProfile(testing::DataPath("profiles"));
  const auto mem = DefaultInsertionLossProfile();
  for (Direction d : kAllDirections) EXPECT_EQ(disk.attenuation(d), mem.attenuation(d));
}

TEST(InsertionLoss, SaveLoadRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "hushwave_profile_test";
  std::filesystem::create_directories(dir);
  const auto p = DefaultInsertionLossProfile().ScaledAttenuation(0.75);
  SaveInsertionLossProfile(dir, p);
  const auto q = LoadInsertionLossProfile(dir);
  for (Direction d : kAllDirections) EXPECT_EQ(q.attenuation(d), p.attenuation(d));
  std::filesystem::remove_all(dir);
  EXPECT_THROW(LoadInsertionLossProfile(dir), IoError);
}

TEST(Leakage, SixtyDbTonesPassWithDefaultProfile) {
  const auto bands = ThirdOctaveBands(100.0, 4000.0);
  const auto p = DefaultInsertionLossProfile();
  for (const Band& b : bands) {
    const auto r = MakeLeakageReport(Tone(b.center_hz(), 1.0, 1.0), p, 60.0, kAllDirections);
    EXPECT_TRUE(r.pass) << b.center_hz() << " worst " << r.worst_margin_db;
    ASSERT_EQ(r.directions.size(), 3u);
    EXPECT_EQ(r.directions[0].bands.size(), bands.size());
  }
}

TEST(Leakage, BandArithmetic) {
  const auto p = DefaultInsertionLossProfile();
  const auto r = MakeLeakageReport(Tone(1000.0, 1.0, 1.0), p, 60.0, kAllDirections);
  for (const auto& d : r.directions) {
    for (const auto& b : d.bands) {
      EXPECT_NEAR(b.emitted_db, b.source_db + p.GainDb(d.direction, b.center_hz), 1e-12);
      EXPECT_NEAR(b.threshold_db, testing::TerhardtDb(b.center_hz) - 5.0, 1e-9);
      EXPECT_EQ(b.pass, b.emitted_db <= b.threshold_db);
    }
  }
}

TEST(Leakage, UnshieldedToneFails) {
  const auto p = DefaultInsertionLossProfile().ScaledAttenuation(0.0);
  const auto r = MakeLeakageReport(Tone(1000.0, 1.0, 1.0), p, 60.0, kAllDirections);
  EXPECT_FALSE(r.pass);
  EXPECT_LT(r.worst_margin_db, 0.0);
}

TEST(Propagation, SpreadingPlusAbsorption) {
  for (double r : {0.1, 1.0, 8.85, 20.0}) {
    EXPECT_NEAR(PropagateSpl(142.0, 0.1, r, 1.3), 142.0 - testing::SpreadingLossDb(0.1, r, 1.3),
                1e-12);
  }
  EXPECT_THROW(PropagateSpl(142.0, 0.1, 0.05), ParameterError);
  EXPECT_THROW(PropagateSpl(142.0, 0.0, 1.0), ParameterError);
}

TEST(Direction, NamesRoundTrip) {
  for (Direction d : kAllDirections) EXPECT_EQ(ParseDirection(DirectionName(d)), d);
  EXPECT_THROW(ParseDirection("up"), ParameterError);
}

}  // namespace
}  // namespace hushwave
