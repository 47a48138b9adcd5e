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

#include "hushwave/sim.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hushwave/errors.h"

namespace hushwave {
namespace {

constexpr double kTimeEps = 1e-9;
constexpr std::uint64_t kJitterStream = 1000000;

double WrapDegrees(double a) {
  a = std::fmod(a + 180.0, 360.0);
  if (a < 0.0) a += 360.0;
  return a - 180.0;
}

std::optional<std::size_t> FirstVictim(const EnvironmentScript& s) {
  for (std::size_t i = 0; i < s.devices.size(); ++i) {
    if (s.devices[i].role == DeviceRole::kVictim) return i;
  }
  return std::nullopt;
}

void ValidateOverrides(const DeliveryOverrides& o, const std::string& who) {
  for (const auto& [kind, p] : o) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw ParameterError(who + ": delivery override for " + CommandKindName(kind) +
                           " must be in [0, 1]");
    }
  }
}

}  // namespace

std::string DeviceRoleName(DeviceRole r) {
  return r == DeviceRole::kVictim ? "victim" : "distractor";
}

DeviceRole ParseDeviceRole(std::string_view name) {
  if (name == "victim") return DeviceRole::kVictim;
  if (name == "distractor") return DeviceRole::kDistractor;
  throw ParameterError("unknown device role '" + std::string(name) + "'");
}

double DeviceScript::distance_m() const { return std::hypot(x_m, y_m); }

double DeviceScript::bearing_deg() const {
  return std::atan2(y_m, x_m) * 180.0 / std::numbers::pi;
}

void DeviceScript::Validate() const {
  const std::string who = "device '" + bssid + "'";
  if (bssid.empty()) throw ParameterError("device bssid must be non-empty");
  if (!std::isfinite(x_m) || !std::isfinite(y_m)) throw ParameterError(who + ": bad position");
  if (!(distance_m() > 0.0)) throw ParameterError(who + ": must not sit on the attacker");
  if (!(speed_mps >= 0.0) || !std::isfinite(speed_mps)) {
    throw ParameterError(who + ": speed must be >= 0");
  }
  if (!(response_latency_s >= 0.0) || !std::isfinite(response_latency_s)) {
    throw ParameterError(who + ": latency must be >= 0");
  }
  if (rssi_dbm && !std::isfinite(*rssi_dbm)) throw ParameterError(who + ": bad rssi");
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const auto& k = trajectory[i];
    if (!std::isfinite(k.t) || (k.rssi_dbm && !std::isfinite(*k.rssi_dbm))) {
      throw ParameterError(who + ": non-finite trajectory knot");
    }
    if (i > 0 && !(k.t > trajectory[i - 1].t)) {
      throw ParameterError(who + ": trajectory times must increase");
    }
  }
  if (role == DeviceRole::kVictim && !trajectory.empty()) {
    throw ParameterError(who + ": victims follow commands, not trajectories");
  }
  ProfileByName(device_profile);
  ValidateOverrides(delivery_override, who);
}

void EnvironmentScript::Validate() const {
  if (!(scan_period_s > 0.0) || !std::isfinite(scan_period_s)) {
    throw ParameterError("scan_period_s must be > 0");
  }
  if (!(duration_s > 0.0) || !std::isfinite(duration_s)) {
    throw ParameterError("duration_s must be > 0");
  }
  if (!(command_duration_s >= 0.0) || !std::isfinite(command_duration_s)) {
    throw ParameterError("command_duration_s must be >= 0");
  }
  if (!(rssi_jitter_db >= 0.0) || !std::isfinite(rssi_jitter_db)) {
    throw ParameterError("rssi_jitter_db must be >= 0");
  }
  if (!std::isfinite(noise_db) || !(wind_mps >= 0.0)) {
    throw ParameterError("noise must be finite and wind >= 0");
  }
  ValidateOverrides(delivery_override, "environment");
  IdSet ids;
  for (const auto& d : devices) {
    d.Validate();
    if (!ids.insert(d.bssid).second) throw ParameterError("bssid " + d.bssid + " repeated");
  }
}

double VictimRssiDbm(double distance_m) {
  return -40.0 - 25.0 * std::log10(std::max(distance_m, 0.1));
}

Environment::Environment(EnvironmentScript script, std::uint64_t seed)
    : script_(std::move(script)) {
  script_.Validate();
  static const MotionModel kMotion = DefaultMotionModel(ProfileByName("average"));
  motion_ = kMotion;
  const std::size_t n = script_.devices.size();
  states_.resize(n);
  toggles_.resize(n);
  toggles_logged_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    profiles_.push_back(ProfileByName(script_.devices[i].device_profile));
    delivery_rng_.emplace_back(SplitSeed(seed, i));
    jitter_rng_.emplace_back(SplitSeed(seed, kJitterStream + i));
  }
  history_.push_back(Capture(0.0));
}

bool Environment::HotspotOn(std::size_t index, double t) const {
  const DeviceScript& d = script_.devices.at(index);
  if (d.role == DeviceRole::kDistractor) {
    std::optional<double> v;
    for (const auto& k : d.trajectory) {
      if (k.t <= t + kTimeEps) v = k.rssi_dbm;
    }
    return v.has_value();
  }
  bool on = d.hotspot_initially_on;
  for (const Toggle& tg : toggles_[index]) {
    if (tg.t <= t + kTimeEps) on = tg.on;
  }
  return on;
}

ScanSnapshot Environment::Capture(double t) {
  ScanSnapshot s;
  s.t = t;
  for (std::size_t i = 0; i < script_.devices.size(); ++i) {
    const DeviceScript& d = script_.devices[i];
    std::optional<double> rssi;
    if (d.role == DeviceRole::kVictim) {
      if (HotspotOn(i, t)) rssi = d.rssi_dbm.value_or(VictimRssiDbm(d.distance_m()));
    } else {
      for (const auto& k : d.trajectory) {
        if (k.t <= t + kTimeEps) rssi = k.rssi_dbm;
      }
    }
    if (!rssi) continue;
    double v = *rssi;
    if (script_.rssi_jitter_db > 0.0) v += script_.rssi_jitter_db * jitter_rng_[i].Gaussian();
    s.records.push_back({d.ssid, d.bssid, v, t});
  }
  return s;
}

void Environment::Advance(double seconds) {
  if (!(seconds >= 0.0) || !std::isfinite(seconds)) throw ParameterError("wait must be >= 0");
  const double target = now_ + seconds;
  const auto log_toggles = [&](double limit) {
    std::vector<std::pair<double, std::size_t>> due;
    for (std::size_t i = 0; i < toggles_.size(); ++i) {
      for (std::size_t k = toggles_logged_[i]; k < toggles_[i].size(); ++k) {
        if (toggles_[i][k].t <= limit + kTimeEps) due.emplace_back(toggles_[i][k].t, i);
      }
    }
    std::stable_sort(due.begin(), due.end());
    for (const auto& [t, i] : due) {
      const std::size_t k = toggles_logged_[i]++;
      const bool before = k == 0 ? script_.devices[i].hotspot_initially_on : toggles_[i][k - 1].on;
      const bool after = toggles_[i][k].on;
      if (before != after) {
        events_.push_back({t, after ? "hotspot_on" : "hotspot_off", script_.devices[i].bssid, "",
                           std::nullopt});
      }
    }
  };
  while (true) {
    const double next = static_cast<double>(tick_ + 1) * script_.scan_period_s;
    if (next > target + kTimeEps) break;
    log_toggles(next);
    ++tick_;
    history_.push_back(Capture(next));
  }
  log_toggles(target);
  now_ = target;
}

void Environment::Wait(double seconds) { Advance(seconds); }

double Environment::DeliveryChance(std::size_t index, CommandKind kind) const {
  const DeviceScript& d = script_.devices.at(index);
  if (d.role != DeviceRole::kVictim) return 0.0;
  const DeliveryProfile& prof = profiles_[index];
  const double offset = WrapDegrees(aim_deg_ - d.bearing_deg());
  std::optional<double> forced;
  if (auto it = d.delivery_override.find(kind); it != d.delivery_override.end()) {
    forced = it->second;
  } else if (auto it2 = script_.delivery_override.find(kind);
             it2 != script_.delivery_override.end()) {
    forced = it2->second;
  }
  if (forced) return *forced * BeamFactor(offset, prof.beam_half_width_deg);
  const double penalty = motion_.PenaltyDb(d.carry, d.speed_mps) + wind_.PenaltyDb(script_.wind_mps);
  return DeliveryProbability(d.distance_m(), offset, script_.noise_db, prof, penalty);
}

void Environment::Aim(double angle_deg) {
  if (!std::isfinite(angle_deg)) throw ParameterError("aim angle must be finite");
  aim_deg_ = angle_deg;
  events_.push_back({now_, "aim", "", "", angle_deg});
}

void Environment::Send(const Command& command) {
  const std::string name = CommandKindName(command.kind);
  events_.push_back({now_, "send", "", name, aim_deg_});
  const double t_done = now_ + script_.command_duration_s;
  for (std::size_t i = 0; i < script_.devices.size(); ++i) {
    const DeviceScript& d = script_.devices[i];
    if (d.role != DeviceRole::kVictim) continue;
    const double u = delivery_rng_[i].Uniform();
    const double p = DeliveryChance(i, command.kind);
    const bool hit = u < p;
    events_.push_back({t_done, hit ? "delivered" : "missed", d.bssid, name, p});
    if (!hit) continue;
    VictimState& st = states_[i];
    switch (command.kind) {
      case CommandKind::kMute:
        st.muted = true;
        break;
      case CommandKind::kAttack:
        st.attacked = true;
        break;
      case CommandKind::kFeedback1:
      case CommandKind::kFeedback2:
        ++st.feedback_delivered;
        toggles_[i].push_back(
            {t_done + d.response_latency_s, command.kind == CommandKind::kFeedback1});
        break;
      case CommandKind::kReset:
        st.reset = true;
        break;
    }
  }
  Advance(script_.command_duration_s);
}

void Environment::ClearRecords() {
  ++records_cleared_;
  events_.push_back({now_, "clear_records", "", "", std::nullopt});
}

std::optional<ScanSnapshot> Environment::Scan() {
  if (now_ > script_.duration_s + kTimeEps) return std::nullopt;
  const ScanSnapshot& s = history_.back();
  events_.push_back({now_, "scan", "", "", static_cast<double>(s.records.size())});
  return s;
}

SimResult Simulate(const EnvironmentScript& env, const AttackConfig& config) {
  Environment e(env, env.rng_seed);
  SimResult r;
  r.report = RunAttack(config, e, env.rng_seed);
  r.events = e.events();
  std::stable_sort(r.events.begin(), r.events.end(),
                   [](const SimEvent& a, const SimEvent& b) { return a.t < b.t; });
  const auto vi = FirstVictim(e.script());
  if (!vi) return r;
  GroundTruth& g = r.truth;
  const VictimState& st = e.victim_state(*vi);
  g.victim_bssid = e.script().devices[*vi].bssid;
  g.muted = st.muted;
  g.attacked = st.attacked;
  g.reset_delivered = st.reset;
  g.records_cleared = e.records_cleared() > 0;
  if (!r.report.angles.empty()) {
    const FeedbackOutcome& fo = r.report.angles.back().feedback;
    if (fo.l2) g.on_at_l2 = e.HotspotOn(*vi, fo.l2->t);
    if (fo.l3) g.on_at_l3 = e.HotspotOn(*vi, fo.l3->t);
    if (fo.l4) g.on_at_l4 = e.HotspotOn(*vi, fo.l4->t);
  }
  g.chain_success = g.muted && g.attacked && r.report.success &&
                    r.report.target_ids == IdSet{g.victim_bssid} && g.reset_delivered &&
                    g.records_cleared;
  return r;
}

EnvironmentScript SingleVictimEnvironment(double distance_m, double bearing_deg, double noise_db,
                                          const std::string& device_profile) {
  EnvironmentScript s;
  s.noise_db = noise_db;
  DeviceScript v;
  v.bssid = "02:00:00:00:00:01";
  v.ssid = "victim-phone";
  v.role = DeviceRole::kVictim;
  const double b = bearing_deg * std::numbers::pi / 180.0;
  v.x_m = distance_m * std::cos(b);
  v.y_m = distance_m * std::sin(b);
  v.device_profile = device_profile;
  s.devices.push_back(v);
  return s;
}

std::pair<double, double> WilsonInterval(int successes, int trials, double z) {
  if (trials <= 0 || successes < 0 || successes > trials) {
    throw ParameterError("Wilson interval needs 0 <= successes <= trials, trials > 0");
  }
  const double n = trials;
  const double p = successes / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  // Rounding can push a bound past the point estimate at k = 0 or k = n.
  return {std::clamp(center - half, 0.0, p), std::clamp(center + half, p, 1.0)};
}

RsaResult EstimateRsa(const EnvironmentScript& env_template, std::span<const double> distances,
                      int trials, std::uint64_t seed) {
  env_template.Validate();
  if (distances.empty()) throw ParameterError("no distances to test");
  for (std::size_t i = 0; i < distances.size(); ++i) {
    if (!(distances[i] > 0.0) || (i > 0 && !(distances[i] > distances[i - 1]))) {
      throw ParameterError("distances must be positive and strictly ascending");
    }
  }
  if (trials < 30) throw ParameterError("estimate_rsa needs at least 30 trials per distance");
  const auto vi = FirstVictim(env_template);
  if (!vi) throw ParameterError("environment has no victim");
  const double bearing = env_template.devices[*vi].bearing_deg();
  const double b = bearing * std::numbers::pi / 180.0;

  RsaResult out;
  for (double d : distances) {
    EnvironmentScript s = env_template;
    s.devices[*vi].x_m = d * std::cos(b);
    s.devices[*vi].y_m = d * std::sin(b);
    RsaPoint pt;
    pt.distance_m = d;
    pt.trials = trials;
    for (int i = 0; i < trials; ++i) {
      Environment e(s, SplitSeed(seed, static_cast<std::uint64_t>(i)));
      e.Aim(bearing);
      e.Send(MakeCommand(CommandKind::kAttack));
      if (e.victim_state(*vi).attacked) ++pt.successes;
    }
    pt.rate = static_cast<double>(pt.successes) / trials;
    std::tie(pt.wilson_lo, pt.wilson_hi) = WilsonInterval(pt.successes, trials);
    if (pt.rate >= 0.5) out.rsa_m = d;
    out.points.push_back(pt);
  }
  return out;
}

double ChainSuccessRate(const EnvironmentScript& env_template, const AttackConfig& config,
                        int runs, std::uint64_t seed) {
  if (runs < 1) throw ParameterError("runs must be >= 1");
  int ok = 0;
  for (int r = 0; r < runs; ++r) {
    EnvironmentScript s = env_template;
    s.rng_seed = SplitSeed(seed, static_cast<std::uint64_t>(r));
    if (Simulate(s, config).truth.chain_success) ++ok;
  }
  return static_cast<double>(ok) / runs;
}

}  // namespace hushwave
