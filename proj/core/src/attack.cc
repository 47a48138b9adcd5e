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

#include "hushwave/attack.h"

#include <cmath>

#include "hushwave/delivery.h"
#include "hushwave/errors.h"

namespace hushwave {
namespace {

// Forwards to the environment and keeps the transmit log.
class LoggingSink : public CommandSink {
 public:
  LoggingSink(AttackEnvironment& env, std::vector<SentCommand>& log)
      : env_(env), log_(log) {}

  void set_angle(double a) { angle_ = a; }
  int count() const { return count_; }
  void reset_count() { count_ = 0; }

  void Send(const Command& command) override {
    log_.push_back({env_.Now(), angle_, CommandKindName(command.kind)});
    ++count_;
    env_.Send(command);
  }
  void ClearRecords() override {
    log_.push_back({env_.Now(), angle_, "clear_records"});
    env_.ClearRecords();
  }

 private:
  AttackEnvironment& env_;
  std::vector<SentCommand>& log_;
  double angle_ = 0.0;
  int count_ = 0;
};

}  // namespace

void AttackConfig::Validate() const {
  if (!(angle_step_deg > 0.0) || !std::isfinite(angle_step_deg)) {
    throw ParameterError("angle_step_deg must be > 0");
  }
  if (!std::isfinite(angle_start_deg) || !std::isfinite(angle_end_deg) ||
      angle_start_deg > angle_end_deg) {
    throw ParameterError("angle range must be finite with start <= end");
  }
  if (repeats_per_command < 1) throw ParameterError("repeats_per_command must be >= 1");
  if (!(distance_m > 0.0)) throw ParameterError("distance_m must be > 0");
  if (!std::isfinite(noise_db)) throw ParameterError("noise_db must be finite");
  ProfileByName(device_profile);
  feedback.Validate();
}

std::vector<double> AngleSweep(const AttackConfig& config) {
  config.Validate();
  std::vector<double> out;
  const double span = config.angle_end_deg - config.angle_start_deg;
  const auto n = static_cast<long>(std::floor(span / config.angle_step_deg * (1.0 + 1e-12) + 1e-9));
  for (long i = 0; i <= n; ++i) out.push_back(config.angle_start_deg + i * config.angle_step_deg);
  return out;
}

double RepeatedSuccessProbability(double p_single, int n) {
  if (!(p_single >= 0.0 && p_single <= 1.0)) throw ParameterError("p must be in [0, 1]");
  if (n < 1) throw ParameterError("n must be >= 1");
  if (n == 1) return p_single;
  return 1.0 - std::pow(1.0 - p_single, n);
}

AttackReport RunAttack(const AttackConfig& config, AttackEnvironment& env, std::uint64_t seed) {
  const std::vector<double> angles = AngleSweep(config);
  AttackReport report;
  report.seed = seed;
  report.t_start = env.Now();
  LoggingSink sink(env, report.command_log);

  for (double angle : angles) {
    AngleOutcome ao;
    ao.angle_deg = angle;
    ao.t_start = env.Now();
    sink.set_angle(angle);
    sink.reset_count();
    env.Aim(angle);
    for (int i = 0; i < config.repeats_per_command; ++i) sink.Send(MakeCommand(CommandKind::kMute));
    for (int i = 0; i < config.repeats_per_command; ++i) {
      sink.Send(MakeCommand(CommandKind::kAttack));
    }
    ao.feedback = FeedbackRound(env, sink, config.feedback);
    if (ao.feedback.success) {
      ao.restore = Restore(sink, ao.feedback, *ao.feedback.l1);
    }
    ao.commands_sent = sink.count();
    ao.t_end = env.Now();
    const bool success = ao.feedback.success;
    const bool aborted = ao.feedback.aborted;
    report.angles.push_back(std::move(ao));
    if (aborted) {
      report.aborted = true;
      break;
    }
    if (success) {
      report.success = true;
      report.success_angle_deg = angle;
      report.target_ids = report.angles.back().feedback.target_ids;
      break;
    }
  }
  report.t_end = env.Now();
  return report;
}

}  // namespace hushwave
