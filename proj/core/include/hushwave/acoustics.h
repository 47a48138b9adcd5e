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

// Hearing thresholds, the audible-leakage criterion and a parametric model of
// the leak-shielding / enhancing metamaterial.
//
// The metamaterial is not simulated as a wave problem. It is described by
// per-direction insertion-loss curves over the audible stopband plus a fixed
// gain inside the carrier band. The shipped default profile is synthetic: it
// is built so that 60 dB SPL tones at every third-octave center in
// 100..4000 Hz land below the leakage threshold in every direction, and so
// the carrier band gains 11 dB towards the front. It is a model, not a
// measurement.

#ifndef HUSHWAVE_ACOUSTICS_H_
#define HUSHWAVE_ACOUSTICS_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hushwave/curve.h"
#include "hushwave/spectrum.h"
#include "hushwave/waveform.h"

namespace hushwave {

inline constexpr double kHearingDomainLoHz = 100.0;
inline constexpr double kHearingDomainHiHz = 20000.0;
inline constexpr double kLeakageOffsetDb = 5.0;
inline constexpr double kDefaultAirAbsorptionDbPerM = 1.3;

// Terhardt's approximation of the absolute threshold in quiet, f in Hz:
//   3.64 (f/1k)^-0.8 - 6.5 exp(-0.6 (f/1k - 3.3)^2) + 1e-3 (f/1k)^4.
// No domain check.
double TerhardtThresholdDb(double frequency_hz);

// Absolute hearing threshold, either Terhardt's formula or a loaded curve.
class HearingModel {
 public:
  HearingModel() = default;
  // The curve must cover [100, 20000] Hz.
  explicit HearingModel(Curve curve);

  // Both throw ParameterError outside [100, 20000] Hz.
  double Threshold(double frequency_hz) const;
  // Threshold minus exactly 5 dB.
  double LeakageThreshold(double frequency_hz) const;

  bool uses_curve() const { return curve_.has_value(); }

 private:
  std::optional<Curve> curve_;
};

// Default (Terhardt) model.
double HearingThreshold(double frequency_hz);
double LeakageThreshold(double frequency_hz);

enum class Direction { kFront, kSide, kBack };

std::string DirectionName(Direction d);
// Throws ParameterError for anything but "front", "side" or "back".
Direction ParseDirection(const std::string& name);

inline constexpr Direction kAllDirections[] = {Direction::kFront, Direction::kSide,
                                               Direction::kBack};

// Modeled device geometry, echoed in reports. Lengths in millimetres.
struct MetamaterialGeometry {
  double hole_diameter_mm = 22.5;      // d
  double spiral_width_mm = 100.0;      // D
  double spiral_pitch_mm = 34.542;     // P
  double opening_height_mm = 3.0;      // h
  double opening_angle_deg = 68.7;     // gamma
  double l1_mm = 2.0;
  double l2_mm = 40.0;
  double l3_mm = 17.5;
  double l4_mm = 109.5;
  double array_range_mm = 18.0;        // R
  double total_length_mm = 127.5;      // H2 = L4 + R
  double array_extent_x_mm = 120.0;    // physical array footprint as built
  double array_extent_y_mm = 14.0;
};

struct InsertionLossProfile {
  InsertionLossProfile(Curve front_db, Curve side_db, Curve back_db)
      : front(std::move(front_db)), side(std::move(side_db)), back(std::move(back_db)) {}

  // Attenuation in dB, positive = quieter. Zero outside each curve's domain.
  Curve front;
  Curve side;
  Curve back;
  double passband_gain_db = 11.0;
  Band carrier_band{36000.0, 44400.0};
  MetamaterialGeometry geometry;
  std::string label = "synthetic model";

  const Curve& attenuation(Direction d) const;
  double AttenuationDb(Direction d, double frequency_hz) const;
  // Net level change at `frequency_hz`: front-direction passband gain inside
  // the carrier band, minus the direction's attenuation.
  double GainDb(Direction d, double frequency_hz) const;

  // Multiplies every attenuation value by `factor`; gain is unchanged.
  InsertionLossProfile ScaledAttenuation(double factor) const;

  // Attenuation >= 0 at every knot and at 100 and 4000 Hz, and the carrier
  // band lies above the stopband.
  void Validate() const;
};

InsertionLossProfile DefaultInsertionLossProfile();

// Reads front.csv, side.csv and back.csv from `dir`.
InsertionLossProfile LoadInsertionLossProfile(const std::filesystem::path& dir,
                                              double passband_gain_db = 11.0);
void SaveInsertionLossProfile(const std::filesystem::path& dir,
                              const InsertionLossProfile& profile);

struct BandLevel {
  Band band;
  double level_db = 0.0;
};

// Each band is changed by GainDb at its geometric center.
std::vector<BandLevel> ApplyInsertionLoss(std::span<const BandLevel> levels,
                                          const InsertionLossProfile& profile,
                                          Direction direction);

struct LeakageBandResult {
  Band band;
  double center_hz = 0.0;
  double source_db = 0.0;     // before the metamaterial
  double emitted_db = 0.0;    // after the metamaterial
  double threshold_db = 0.0;  // leakage threshold at center_hz
  double margin_db = 0.0;     // threshold - emitted; negative means audible
  bool pass = false;
};

struct LeakageDirectionResult {
  Direction direction = Direction::kFront;
  std::vector<LeakageBandResult> bands;
  bool pass = false;
};

struct LeakageReport {
  double source_spl_ref_db = 0.0;
  std::vector<LeakageDirectionResult> directions;
  bool pass = false;
  double worst_margin_db = 0.0;
  MetamaterialGeometry geometry;
  std::string profile_label;
};

// Third-octave analysis of `waveform` over 100..4000 Hz, where a full-scale
// sine reads `source_spl_ref_db`, followed by the directional insertion loss.
// Passes iff every band in every requested direction is at or below the
// leakage threshold.
LeakageReport MakeLeakageReport(const Waveform& waveform,
                                const InsertionLossProfile& profile,
                                double source_spl_ref_db,
                                std::span<const Direction> directions,
                                const HearingModel& hearing = HearingModel());

// Spherical spreading plus linear air absorption:
//   spl0 - 20 log10(r / r0) - alpha (r - r0).
double PropagateSpl(double spl0_db, double r0_m, double r_m,
                    double alpha_db_per_m = kDefaultAirAbsorptionDbPerM);

}  // namespace hushwave

#endif  // HUSHWAVE_ACOUSTICS_H_
