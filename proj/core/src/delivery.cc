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

#include "hushwave/delivery.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hushwave/acoustics.h"
#include "hushwave/errors.h"

namespace hushwave {
namespace {

double Logit(double p) { return std::log(p / (1.0 - p)); }
double Sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

}  // namespace

double SourceModel::ReceivedSpl(double distance_m) const {
  return PropagateSpl(spl_db, ref_m, std::max(distance_m, ref_m), absorption_db_per_m);
}

void SourceModel::Validate() const {
  if (!std::isfinite(spl_db)) throw ParameterError("source level must be finite");
  if (!(ref_m > 0.0)) throw ParameterError("source reference distance must be positive");
  if (!(absorption_db_per_m >= 0.0)) throw ParameterError("absorption must be >= 0");
}

void DeliveryProfile::Validate() const {
  source.Validate();
  if (!(base >= 0.0 && base <= 1.0)) throw ParameterError("profile base must be in [0, 1]");
  if (!(slope_db > 0.0) || !std::isfinite(slope_db)) {
    throw ParameterError("profile slope must be positive");
  }
  if (!std::isfinite(required_spl_db)) throw ParameterError("required level must be finite");
  if (!(beam_half_width_deg > 0.0)) throw ParameterError("beam half width must be positive");
  if (!(noise_penalty_db_per_db >= 0.0)) throw ParameterError("noise penalty must be >= 0");
  if (!std::isfinite(noise_reference_db)) throw ParameterError("noise reference must be finite");
}

DeliveryProfile CalibrateProfile(std::string name, double base, double d_ref_m, double p_ref,
                                 double d_half_m, const SourceModel& source) {
  if (!(base > p_ref && p_ref > 0.5 && base <= 1.0)) {
    throw ParameterError("calibration needs 1 >= base > p_ref > 0.5");
  }
  if (!(d_half_m > d_ref_m && d_ref_m > 0.0)) {
    throw ParameterError("calibration needs d_half > d_ref > 0");
  }
  source.Validate();
  const double s_ref = source.ReceivedSpl(d_ref_m);
  const double s_half = source.ReceivedSpl(d_half_m);
  const double l_ref = Logit(p_ref / base);
  const double l_half = Logit(0.5 / base);
  DeliveryProfile p;
  p.name = std::move(name);
  p.base = base;
  p.source = source;
  p.slope_db = (s_ref - s_half) / (l_ref - l_half);
  p.required_spl_db = s_ref - p.slope_db * l_ref;
  p.Validate();
  return p;
}

double HalfSuccessDistance(const DeliveryProfile& profile, double penalty_db) {
  profile.Validate();
  if (profile.base < 0.5) throw ParameterError("profile never reaches 0.5");
  const auto f = [&](double r) {
    return DeliveryProbability(r, 0.0, profile.noise_reference_db, profile, penalty_db) - 0.5;
  };
  double lo = profile.source.ref_m;
  double hi = 1000.0;
  if (f(lo) < 0.0) return lo;
  if (f(hi) > 0.0) return hi;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) >= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double PenaltyForHalfDistance(const DeliveryProfile& profile, double distance_m) {
  const double d0 = HalfSuccessDistance(profile);
  return profile.source.ReceivedSpl(distance_m) - profile.source.ReceivedSpl(d0);
}

void CalibrateNoisePenalty(DeliveryProfile& profile, double noise_db, double half_distance_m) {
  if (!(noise_db > profile.noise_reference_db)) {
    throw ParameterError("noise calibration point must lie above the noise reference");
  }
  const double pen = PenaltyForHalfDistance(profile, half_distance_m);
  if (!(pen >= 0.0)) throw ParameterError("noise cannot extend the range");
  profile.noise_penalty_db_per_db = pen / (noise_db - profile.noise_reference_db);
}

DeliveryProfile AverageDeviceProfile() {
  DeliveryProfile p = CalibrateProfile("average", 0.98, 8.85, 0.76, 9.1);
  CalibrateNoisePenalty(p, 72.5, 7.5);
  return p;
}

DeliveryProfile IphoneProfile() {
  DeliveryProfile p = CalibrateProfile("iphone14pro", 0.99, 9.2, 0.90, 9.6);
  p.noise_penalty_db_per_db = AverageDeviceProfile().noise_penalty_db_per_db;
  return p;
}

DeliveryProfile ProfileByName(std::string_view name) {
  static const DeliveryProfile kAverage = AverageDeviceProfile();
  static const DeliveryProfile kIphone = IphoneProfile();
  if (name == "average") return kAverage;
  if (name == "iphone14pro") return kIphone;
  throw ParameterError("unknown device profile '" + std::string(name) + "'");
}

std::vector<std::string> ProfileNames() { return {"average", "iphone14pro"}; }

double BeamFactor(double offset_deg, double half_width_deg) {
  const double a = std::abs(offset_deg);
  if (a >= half_width_deg) return 0.0;
  const double c = std::cos(0.5 * std::numbers::pi * a / half_width_deg);
  return c * c;
}

double NoisePenaltyDb(const DeliveryProfile& profile, double noise_db) {
  return std::max(0.0, noise_db - profile.noise_reference_db) * profile.noise_penalty_db_per_db;
}

double WindModel::PenaltyDb(double wind_mps) const {
  return std::max(0.0, wind_mps - onset_mps) * db_per_mps;
}

std::string CarryName(Carry c) {
  switch (c) {
    case Carry::kStatic:
      return "static";
    case Carry::kHandheld:
      return "handheld";
    case Carry::kPocket:
      return "pocket";
  }
  return "unknown";
}

Carry ParseCarry(std::string_view name) {
  if (name == "static") return Carry::kStatic;
  if (name == "handheld") return Carry::kHandheld;
  if (name == "pocket") return Carry::kPocket;
  throw ParameterError("unknown carry mode '" + std::string(name) + "'");
}

double MotionModel::PenaltyDb(Carry carry, double speed_mps) const {
  switch (carry) {
    case Carry::kStatic:
      return 0.0;
    case Carry::kHandheld:
      return shake_db_per_mps * speed_mps;
    case Carry::kPocket:
      return shake_db_per_mps * speed_mps + pocket_db;
  }
  return 0.0;
}

MotionModel CalibrateMotion(const DeliveryProfile& profile, double handheld_speed_mps,
                            double handheld_distance_m, double pocket_speed_mps,
                            double pocket_distance_m) {
  if (!(handheld_speed_mps > 0.0) || !(pocket_speed_mps > 0.0)) {
    throw ParameterError("motion calibration speeds must be positive");
  }
  MotionModel m;
  m.shake_db_per_mps = PenaltyForHalfDistance(profile, handheld_distance_m) / handheld_speed_mps;
  m.pocket_db = PenaltyForHalfDistance(profile, pocket_distance_m) -
                m.shake_db_per_mps * pocket_speed_mps;
  if (m.shake_db_per_mps < 0.0 || m.pocket_db < 0.0) {
    throw ParameterError("motion calibration targets give a negative penalty");
  }
  return m;
}

MotionModel DefaultMotionModel(const DeliveryProfile& profile) {
  return CalibrateMotion(profile, 1.0, 6.2, 1.5, 4.1);
}

double DeliveryProbability(double distance_m, double angle_offset_deg, double noise_db,
                           const DeliveryProfile& profile, double extra_penalty_db) {
  if (!(distance_m > 0.0)) throw ParameterError("distance must be positive");
  if (!std::isfinite(angle_offset_deg) || !std::isfinite(noise_db) ||
      !std::isfinite(extra_penalty_db)) {
    throw ParameterError("delivery inputs must be finite");
  }
  const double beam = BeamFactor(angle_offset_deg, profile.beam_half_width_deg);
  if (beam == 0.0) return 0.0;
  const double margin = profile.source.ReceivedSpl(distance_m) - profile.required_spl_db -
                        NoisePenaltyDb(profile, noise_db) - extra_penalty_db;
  return std::clamp(profile.base * Sigmoid(margin / profile.slope_db) * beam, 0.0, 1.0);
}

}  // namespace hushwave
