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

// Probability that a single inaudible command is executed by a device, as a
// function of range, aim error, background noise and motion.
//
//   p = base * sigmoid((S(r) - required - penalties) / slope) * beam(offset)
//
// S(r) is the received carrier level from PropagateSpl. `required` and
// `slope` are solved from two anchor points (see CalibrateProfile). Noise,
// wind and motion enter as dB penalties on the received level.

#ifndef HUSHWAVE_DELIVERY_H_
#define HUSHWAVE_DELIVERY_H_

#include <string>
#include <string_view>
#include <vector>

namespace hushwave {

struct SourceModel {
  double spl_db = 142.0;  // at ref_m
  double ref_m = 0.1;
  double absorption_db_per_m = 1.3;

  // Received level; ranges below ref_m are clamped to ref_m.
  double ReceivedSpl(double distance_m) const;
  void Validate() const;
};

struct DeliveryProfile {
  std::string name;
  double base = 0.98;             // ceiling probability
  double required_spl_db = 0.0;   // logistic midpoint before `base` scaling
  double slope_db = 1.0;          // logistic scale
  double beam_half_width_deg = 6.0;
  double noise_reference_db = 60.0;  // no penalty at or below
  double noise_penalty_db_per_db = 0.0;
  SourceModel source;

  void Validate() const;
};

// Anchors: p(d_ref) = p_ref and p(d_half) = 0.5, on axis with no penalty.
// Needs base > p_ref > 0.5 and d_half > d_ref.
DeliveryProfile CalibrateProfile(std::string name, double base, double d_ref_m, double p_ref,
                                 double d_half_m, const SourceModel& source = {});

// Chooses the noise penalty slope so that, at `noise_db`, the 0.5 point
// moves to `half_distance_m`.
void CalibrateNoisePenalty(DeliveryProfile& profile, double noise_db, double half_distance_m);

// Range at which p = 0.5 with `penalty_db` applied, on axis. Solved by
// bisection over [source.ref_m, 1000 m].
double HalfSuccessDistance(const DeliveryProfile& profile, double penalty_db = 0.0);

// The level drop that moves the 0.5 point from its unpenalised range to
// `distance_m`.
double PenaltyForHalfDistance(const DeliveryProfile& profile, double distance_m);

// Average phone: 76 % at 8.85 m, 0.5 at 9.1 m, ceiling 0.98; noise penalty
// places the 0.5 point at 7.5 m under 72.5 dB of noise.
DeliveryProfile AverageDeviceProfile();
// 90 % at 9.2 m, 0.5 at 9.6 m, ceiling 0.99; same noise penalty slope.
DeliveryProfile IphoneProfile();
// "average" or "iphone14pro"; throws ParameterError otherwise.
DeliveryProfile ProfileByName(std::string_view name);
std::vector<std::string> ProfileNames();

// cos^2 taper reaching 0 at the half width; 0 beyond.
double BeamFactor(double offset_deg, double half_width_deg);

double NoisePenaltyDb(const DeliveryProfile& profile, double noise_db);

// 0 up to 3 m/s, then 2 dB per m/s.
struct WindModel {
  double onset_mps = 3.0;
  double db_per_mps = 2.0;
  double PenaltyDb(double wind_mps) const;
};

enum class Carry { kStatic, kHandheld, kPocket };
std::string CarryName(Carry c);
Carry ParseCarry(std::string_view name);

// Handheld: shake_db_per_mps * speed. Pocket adds pocket_db.
struct MotionModel {
  double shake_db_per_mps = 0.0;
  double pocket_db = 0.0;
  double PenaltyDb(Carry carry, double speed_mps) const;
};

// Fits the motion model so that the 0.5 point is at `handheld_distance_m`
// when walking at `handheld_speed_mps`, and at `pocket_distance_m` for a
// pocketed device at `pocket_speed_mps`.
MotionModel CalibrateMotion(const DeliveryProfile& profile, double handheld_speed_mps,
                            double handheld_distance_m, double pocket_speed_mps,
                            double pocket_distance_m);
// 6.2 m handheld at 1 m/s, 4.1 m pocketed at 1.5 m/s.
MotionModel DefaultMotionModel(const DeliveryProfile& profile);

double DeliveryProbability(double distance_m, double angle_offset_deg, double noise_db,
                           const DeliveryProfile& profile, double extra_penalty_db = 0.0);

}  // namespace hushwave

#endif  // HUSHWAVE_DELIVERY_H_
