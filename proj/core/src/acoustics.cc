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

#include <algorithm>
#include <cmath>
#include <limits>

#include "hushwave/errors.h"

namespace hushwave {
namespace {

// Third-octave centers 100 .. 5012 Hz. Values are 60 dB minus the Terhardt
// leakage threshold at each center, plus a per-direction headroom of 4, 6 and
// 9 dB, rounded up to 0.1 dB.
constexpr double kKnotHz[] = {100.0,     125.8925,  158.4893,  199.5262,  251.1886,
                              316.2278,  398.1072,  501.1872,  630.9573,  794.3282,
                              1000.0,    1258.9254, 1584.8932, 1995.2623, 2511.8864,
                              3162.2777, 3981.0717, 5011.8723};
constexpr double kFrontDb[] = {46.1, 50.0, 53.2, 55.9, 58.1, 59.9, 61.5, 62.8, 63.9,
                               64.8, 65.7, 66.6, 67.6, 69.3, 71.7, 73.9, 72.5, 68.5};
constexpr double kSideDb[] = {48.1, 52.0, 55.2, 57.9, 60.1, 61.9, 63.5, 64.8, 65.9,
                              66.8, 67.7, 68.6, 69.6, 71.3, 73.7, 75.9, 74.5, 70.5};
constexpr double kBackDb[] = {51.1, 55.0, 58.2, 60.9, 63.1, 64.9, 66.5, 67.8, 68.9,
                              69.8, 70.7, 71.6, 72.6, 74.3, 76.7, 78.9, 77.5, 73.5};

Curve MakeCurve(const double (&values)[std::size(kKnotHz)]) {
  std::vector<CurvePoint> pts;
  for (std::size_t i = 0; i < std::size(kKnotHz); ++i) pts.push_back({kKnotHz[i], values[i]});
  return Curve(std::move(pts));
}

void CheckHearingDomain(double f) {
  if (!(f >= kHearingDomainLoHz && f <= kHearingDomainHiHz)) {
    throw ParameterError("frequency " + std::to_string(f) +
                         " Hz is outside the hearing-threshold domain [100, 20000]");
  }
}

}  // namespace

double TerhardtThresholdDb(double frequency_hz) {
  const double k = frequency_hz / 1000.0;
  return 3.64 * std::pow(k, -0.8) - 6.5 * std::exp(-0.6 * (k - 3.3) * (k - 3.3)) +
         1e-3 * k * k * k * k;
}

HearingModel::HearingModel(Curve curve) : curve_(std::move(curve)) {
  if (!curve_->Covers(kHearingDomainLoHz) || !curve_->Covers(kHearingDomainHiHz)) {
    throw ParameterError("hearing-threshold curve must cover 100..20000 Hz");
  }
}

double HearingModel::Threshold(double frequency_hz) const {
  CheckHearingDomain(frequency_hz);
  return curve_ ? curve_->Evaluate(frequency_hz) : TerhardtThresholdDb(frequency_hz);
}

double HearingModel::LeakageThreshold(double frequency_hz) const {
  return Threshold(frequency_hz) - kLeakageOffsetDb;
}

double HearingThreshold(double frequency_hz) {
  return HearingModel().Threshold(frequency_hz);
}

double LeakageThreshold(double frequency_hz) {
  return HearingModel().LeakageThreshold(frequency_hz);
}

std::string DirectionName(Direction d) {
  switch (d) {
    case Direction::kFront:
      return "front";
    case Direction::kSide:
      return "side";
    case Direction::kBack:
      return "back";
  }
  return "unknown";
}

Direction ParseDirection(const std::string& name) {
  if (name == "front") return Direction::kFront;
  if (name == "side") return Direction::kSide;
  if (name == "back") return Direction::kBack;
  throw ParameterError("unknown direction '" + name + "'");
}

const Curve& InsertionLossProfile::attenuation(Direction d) const {
  switch (d) {
    case Direction::kFront:
      return front;
    case Direction::kSide:
      return side;
    case Direction::kBack:
      return back;
  }
  throw ParameterError("unknown direction");
}

double InsertionLossProfile::AttenuationDb(Direction d, double frequency_hz) const {
  return attenuation(d).TryEvaluate(frequency_hz).value_or(0.0);
}

double InsertionLossProfile::GainDb(Direction d, double frequency_hz) const {
  double gain = -AttenuationDb(d, frequency_hz);
  if (d == Direction::kFront && frequency_hz >= carrier_band.lo_hz &&
      frequency_hz <= carrier_band.hi_hz) {
    gain += passband_gain_db;
  }
  return gain;
}

InsertionLossProfile InsertionLossProfile::ScaledAttenuation(double factor) const {
  InsertionLossProfile p = *this;
  p.front = front.Scaled(factor);
  p.side = side.Scaled(factor);
  p.back = back.Scaled(factor);
  return p;
}

void InsertionLossProfile::Validate() const {
  for (Direction d : kAllDirections) {
    const Curve& c = attenuation(d);
    for (const auto& p : c.points()) {
      if (p.frequency_hz >= kHearingDomainLoHz && p.frequency_hz <= 4000.0 &&
          p.value_db < 0.0) {
        throw ParameterError(DirectionName(d) + " attenuation is negative in the stopband");
      }
    }
    for (double f : {kHearingDomainLoHz, 4000.0}) {
      if (AttenuationDb(d, f) < 0.0) {
        throw ParameterError(DirectionName(d) + " attenuation is negative in the stopband");
      }
    }
  }
  if (!(carrier_band.lo_hz > 4000.0) || !(carrier_band.hi_hz > carrier_band.lo_hz)) {
    throw ParameterError("carrier band must be ordered and lie above 4000 Hz");
  }
  if (!std::isfinite(passband_gain_db)) {
    throw ParameterError("passband gain must be finite");
  }
}

InsertionLossProfile DefaultInsertionLossProfile() {
  return InsertionLossProfile{MakeCurve(kFrontDb), MakeCurve(kSideDb), MakeCurve(kBackDb)};
}

InsertionLossProfile LoadInsertionLossProfile(const std::filesystem::path& dir,
                                              double passband_gain_db) {
  InsertionLossProfile p{ReadCurveCsv(dir / "front.csv"), ReadCurveCsv(dir / "side.csv"),
                         ReadCurveCsv(dir / "back.csv")};
  p.passband_gain_db = passband_gain_db;
  p.label = "loaded from " + dir.string();
  p.Validate();
  return p;
}

void SaveInsertionLossProfile(const std::filesystem::path& dir,
                              const InsertionLossProfile& profile) {
  WriteCurveCsv(dir / "front.csv", profile.front);
  WriteCurveCsv(dir / "side.csv", profile.side);
  WriteCurveCsv(dir / "back.csv", profile.back);
}

std::vector<BandLevel> ApplyInsertionLoss(std::span<const BandLevel> levels,
                                          const InsertionLossProfile& profile,
                                          Direction direction) {
  std::vector<BandLevel> out;
  out.reserve(levels.size());
  for (const BandLevel& bl : levels) {
    out.push_back({bl.band, bl.level_db + profile.GainDb(direction, bl.band.center_hz())});
  }
  return out;
}

LeakageReport MakeLeakageReport(const Waveform& waveform,
                                const InsertionLossProfile& profile,
                                double source_spl_ref_db,
                                std::span<const Direction> directions,
                                const HearingModel& hearing) {
  waveform.Validate();
  profile.Validate();
  if (!std::isfinite(source_spl_ref_db)) {
    throw ParameterError("source SPL reference must be finite");
  }
  if (directions.empty()) throw ParameterError("no directions requested");

  const std::vector<Band> bands = ThirdOctaveBands(100.0, 4000.0);
  const std::vector<double> source = BandSpectrum(waveform, bands, source_spl_ref_db);
  std::vector<BandLevel> source_levels;
  for (std::size_t i = 0; i < bands.size(); ++i) source_levels.push_back({bands[i], source[i]});

  LeakageReport report;
  report.source_spl_ref_db = source_spl_ref_db;
  report.pass = true;
  report.worst_margin_db = std::numeric_limits<double>::infinity();
  report.geometry = profile.geometry;
  report.profile_label = profile.label;
  for (Direction d : directions) {
    LeakageDirectionResult dr;
    dr.direction = d;
    dr.pass = true;
    const auto emitted = ApplyInsertionLoss(source_levels, profile, d);
    for (std::size_t i = 0; i < bands.size(); ++i) {
      LeakageBandResult br;
      br.band = bands[i];
      br.center_hz = bands[i].center_hz();
      br.source_db = source[i];
      br.emitted_db = emitted[i].level_db;
      br.threshold_db = hearing.LeakageThreshold(br.center_hz);
      br.margin_db = br.threshold_db - br.emitted_db;
      br.pass = br.emitted_db <= br.threshold_db;
      dr.pass = dr.pass && br.pass;
      report.worst_margin_db = std::min(report.worst_margin_db, br.margin_db);
      dr.bands.push_back(br);
    }
    report.pass = report.pass && dr.pass;
    report.directions.push_back(std::move(dr));
  }
  return report;
}

double PropagateSpl(double spl0_db, double r0_m, double r_m, double alpha_db_per_m) {
  if (!(r0_m > 0.0)) throw ParameterError("reference distance must be positive");
  if (!(r_m >= r0_m)) throw ParameterError("distance must not be below the reference distance");
  if (!(alpha_db_per_m >= 0.0)) throw ParameterError("absorption must be non-negative");
  return spl0_db - 20.0 * std::log10(r_m / r0_m) - alpha_db_per_m * (r_m - r0_m);
}

}  // namespace hushwave
