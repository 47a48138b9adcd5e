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

// The attacker's outer loop: sweep the beam over a range of angles, deliver
// mute and attack commands, confirm execution with a feedback round and
// restore the victim on success.

#ifndef HUSHWAVE_ATTACK_H_
#define HUSHWAVE_ATTACK_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hushwave/feedback.h"

namespace hushwave {

struct AttackConfig {
  double angle_start_deg = 0.0;
  double angle_end_deg = 180.0;
  double angle_step_deg = 12.0;
  int repeats_per_command = 5;  // Mute and Attack only
  double distance_m = 8.85;     // nominal scenario used to build default environments
  double noise_db = 55.0;
  std::string device_profile = "average";
  FeedbackParams feedback;

  void Validate() const;
};

// start, start + step, ... while <= end (with a 1e-9 relative guard).
std::vector<double> AngleSweep(const AttackConfig& config);

// 1 - (1 - p)^n, exactly p when n = 1.
double RepeatedSuccessProbability(double p_single, int n);

// A world the attacker can aim at, transmit into and scan.
class AttackEnvironment : public ScanSource, public CommandSink {
 public:
  virtual void Aim(double angle_deg) = 0;
};

struct SentCommand {
  double t = 0.0;
  double angle_deg = 0.0;
  std::string action;  // command kind name or "clear_records"
};

struct AngleOutcome {
  double angle_deg = 0.0;
  double t_start = 0.0;
  double t_end = 0.0;
  int commands_sent = 0;
  FeedbackOutcome feedback;
  std::optional<RestoreLog> restore;
};

struct AttackReport {
  std::uint64_t seed = 0;
  bool success = false;
  bool aborted = false;
  IdSet target_ids;
  std::optional<double> success_angle_deg;
  std::vector<AngleOutcome> angles;
  std::vector<SentCommand> command_log;
  double t_start = 0.0;
  double t_end = 0.0;
};

AttackReport RunAttack(const AttackConfig& config, AttackEnvironment& env, std::uint64_t seed);

}  // namespace hushwave

#endif  // HUSHWAVE_ATTACK_H_
