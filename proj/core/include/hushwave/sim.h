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

// Scripted, seeded world for the attack loop: victims that switch their
// hotspot when a feedback command lands, distractors that follow fixed RSSI
// trajectories, and a discrete clock ticking at the scan period.
//
// Random streams, all derived from the environment seed with SplitSeed:
//   stream i            delivery draws for device i, one uniform per send
//                       for every victim whether or not it is in the beam
//   stream 1000000 + i  RSSI jitter for device i
// Because each send consumes exactly one draw per victim, runs that differ
// only in geometry or noise see the same uniforms.

#ifndef HUSHWAVE_SIM_H_
#define HUSHWAVE_SIM_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hushwave/attack.h"
#include "hushwave/delivery.h"
#include "hushwave/feedback.h"
#include "hushwave/rng.h"

namespace hushwave {

enum class DeviceRole { kVictim, kDistractor };
std::string DeviceRoleName(DeviceRole r);
DeviceRole ParseDeviceRole(std::string_view name);

// Step-and-hold RSSI: the last knot at or before t applies; before the
// first knot the hotspot is absent. A missing rssi means absent.
struct RssiKnot {
  double t = 0.0;
  std::optional<double> rssi_dbm;

  friend bool operator==(const RssiKnot&, const RssiKnot&) = default;
};

using DeliveryOverrides = std::map<CommandKind, double>;

struct DeviceScript {
  std::string bssid;
  std::string ssid;
  DeviceRole role = DeviceRole::kVictim;
  double x_m = 8.85;  // attacker at the origin, bearing measured from +x
  double y_m = 0.0;
  Carry carry = Carry::kStatic;
  double speed_mps = 0.0;
  double response_latency_s = 2.0;
  bool hotspot_initially_on = false;
  std::optional<double> rssi_dbm;  // victims: overrides -40 - 25 log10(d)
  std::vector<RssiKnot> trajectory;  // distractors
  std::string device_profile = "average";
  // Replaces the range / noise / motion part of the delivery probability
  // for the listed kinds; the beam factor still applies.
  DeliveryOverrides delivery_override;

  double distance_m() const;
  double bearing_deg() const;
  void Validate() const;
};

struct EnvironmentScript {
  std::vector<DeviceScript> devices;
  double noise_db = 55.0;
  double wind_mps = 0.0;
  double scan_period_s = 1.0;
  double duration_s = 3600.0;
  std::uint64_t rng_seed = 1;
  double rssi_jitter_db = 0.0;  // Gaussian sigma
  double command_duration_s = 1.0;
  DeliveryOverrides delivery_override;  // applies to every victim

  void Validate() const;
};

// Victim RSSI at distance d: -40 - 25 log10(max(d, 0.1)).
double VictimRssiDbm(double distance_m);

struct SimEvent {
  double t = 0.0;
  std::string type;  // aim, send, delivered, missed, hotspot_on, hotspot_off, scan, clear_records
  std::string bssid;
  std::string command;
  std::optional<double> value;

  friend bool operator==(const SimEvent&, const SimEvent&) = default;
};

struct VictimState {
  bool muted = false;
  bool attacked = false;
  bool reset = false;
  int feedback_delivered = 0;
};

class Environment : public AttackEnvironment {
 public:
  Environment(EnvironmentScript script, std::uint64_t seed);

  void Aim(double angle_deg) override;
  void Send(const Command& command) override;
  void ClearRecords() override;
  std::optional<ScanSnapshot> Scan() override;
  void Wait(double seconds) override;
  double Now() const override { return now_; }
  std::vector<ScanSnapshot> History() const override { return history_; }

  // Hotspot state of device `index` at time t as far as it is known now.
  bool HotspotOn(std::size_t index, double t) const;
  const VictimState& victim_state(std::size_t index) const { return states_[index]; }
  const EnvironmentScript& script() const { return script_; }
  const std::vector<SimEvent>& events() const { return events_; }
  int records_cleared() const { return records_cleared_; }
  double aim_deg() const { return aim_deg_; }
  // Probability the device would execute `kind` if sent now.
  double DeliveryChance(std::size_t index, CommandKind kind) const;

 private:
  struct Toggle {
    double t;
    bool on;
  };

  void Advance(double seconds);
  ScanSnapshot Capture(double t);

  EnvironmentScript script_;
  std::vector<DeliveryProfile> profiles_;
  MotionModel motion_;
  WindModel wind_;
  std::vector<Rng> delivery_rng_;
  std::vector<Rng> jitter_rng_;
  std::vector<VictimState> states_;
  std::vector<std::vector<Toggle>> toggles_;
  std::vector<std::size_t> toggles_logged_;
  std::vector<ScanSnapshot> history_;
  std::vector<SimEvent> events_;
  double now_ = 0.0;
  long tick_ = 0;
  double aim_deg_ = 0.0;
  int records_cleared_ = 0;
};

struct GroundTruth {
  std::string victim_bssid;  // first victim, empty if none
  bool muted = false;
  bool attacked = false;
  bool reset_delivered = false;
  bool records_cleared = false;
  // Victim hotspot at the final round's L2 / L3 / L4 times.
  std::optional<bool> on_at_l2, on_at_l3, on_at_l4;
  bool chain_success = false;
};

struct SimResult {
  AttackReport report;
  std::vector<SimEvent> events;
  GroundTruth truth;
};

SimResult Simulate(const EnvironmentScript& env, const AttackConfig& config);

// Single victim at `distance_m` along `bearing_deg`, nothing else.
EnvironmentScript SingleVictimEnvironment(double distance_m, double bearing_deg, double noise_db,
                                          const std::string& device_profile = "average");

struct RsaPoint {
  double distance_m = 0.0;
  int trials = 0;
  int successes = 0;
  double rate = 0.0;
  double wilson_lo = 0.0;
  double wilson_hi = 0.0;
};

struct RsaResult {
  std::optional<double> rsa_m;  // none if no distance reaches 0.5
  std::vector<RsaPoint> points;
};

// 95 % Wilson score interval.
std::pair<double, double> WilsonInterval(int successes, int trials, double z = 1.959963984540054);

// One trial: the first victim is moved to each distance along its bearing,
// the beam is aimed at it and one Attack command is sent; the trial
// succeeds if it is executed. Trial i uses seed SplitSeed(seed, i) at every
// distance.
RsaResult EstimateRsa(const EnvironmentScript& env_template, std::span<const double> distances,
                      int trials, std::uint64_t seed);

// Fraction of seeded attack runs whose chain fully succeeded.
double ChainSuccessRate(const EnvironmentScript& env_template, const AttackConfig& config,
                        int runs, std::uint64_t seed);

}  // namespace hushwave

#endif  // HUSHWAVE_SIM_H_
